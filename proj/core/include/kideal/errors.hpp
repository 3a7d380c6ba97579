#ifndef KIDEAL_ERRORS_HPP
#define KIDEAL_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace kideal {

// Base class for everything thrown by the library.
struct error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed raw data: table entries out of range, ragged tables, bad sizes.
// Distinct from an axiom failure, which is reported, not thrown.
struct structural_error : error {
  using error::error;
};

// Invalid argument values (n < 2, i >= n, empty generator list, ...).
struct parameter_error : error {
  using error::error;
};

// An operation was called on inputs that violate its contract, e.g. a
// subtractive-only routine handed a non-subtractive subsemimodule.
struct precondition_error : error {
  using error::error;
};

// A configured size or search cap would be exceeded.
struct resource_error : error {
  using error::error;
};

// The input is structurally fine but outside the mathematical domain of the
// operation (e.g. asking for maximal subobjects strictly below the zero one).
struct domain_error : error {
  using error::error;
};

}  // namespace kideal

#endif

#ifndef KIDEAL_SEMIRING_HPP
#define KIDEAL_SEMIRING_HPP

#include <array>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "kideal/errors.hpp"

namespace kideal {

// Size caps shared by the expensive constructions.  A cap that would be
// exceeded raises resource_error before any work is done.
struct Caps {
  int semiring_size = 64;
  int module_size = 64;
  long long hom_search = 1'000'000;
};

// Raw, unvalidated presentation of a finite semiring.  Tables are indexed
// add[a][b]; element_labels may be empty, in which case decimal indices are
// used for display.
struct SemiringData {
  int size = 0;
  std::vector<std::vector<int>> add;
  std::vector<std::vector<int>> mul;
  int zero = 0;
  int one = 0;
  std::string label;
  std::vector<std::string> element_labels;
};

// One violated axiom with the lexicographically first witness.  Unused
// witness slots hold -1; e.g. a commutativity failure fills (a, b, -1).
struct AxiomViolation {
  std::string axiom;
  std::array<int, 3> witness{-1, -1, -1};
};

struct AxiomReport {
  bool passed = false;
  std::vector<AxiomViolation> violations;
};

// Exhaustive O(n^3) scan of the semiring axioms.  Ill-formed tables throw
// structural_error; axiom failures are collected into the report, every
// violated axiom with its first witness in scan order.
AxiomReport check_semiring_axioms(const SemiringData& data);

// Thrown when a validated object is requested from failing tables.  The
// report lists what failed.
struct validation_error : error {
  validation_error(const std::string& msg, AxiomReport r)
      : error(msg), report(std::move(r)) {}
  AxiomReport report;
};

// A validated finite semiring.  The carrier is index-normalized: zero sits
// at index 0 and one at index 1, with the original labels kept for display.
// Only validate() can produce an instance.
class FiniteSemiring {
 public:
  static FiniteSemiring validate(SemiringData raw);

  int size() const { return data_.size; }
  int add(int a, int b) const { return data_.add[a][b]; }
  int mul(int a, int b) const { return data_.mul[a][b]; }
  int zero() const { return 0; }
  int one() const { return 1; }

  const std::string& label() const { return data_.label; }
  const std::string& element_label(int a) const { return data_.element_labels[a]; }
  const SemiringData& data() const { return data_; }

  // Structural equality on the canonicalized tables; labels are ignored.
  bool same_tables(const FiniteSemiring& other) const;

 private:
  explicit FiniteSemiring(SemiringData d) : data_(std::move(d)) {}
  SemiringData data_;
};

using SemiringPtr = std::shared_ptr<const FiniteSemiring>;

// Carrier {0,...,n-1}.  a(+)b is the plain sum while it stays below n and
// otherwise the unique c with i <= c < n congruent to a+b mod (n-i);
// multiplication folds the product the same way.  n=i+1 collapses every
// overflow onto n-1; i=0 gives the cyclic ring Z_n.
FiniteSemiring build_bni(int n, int i);

// Families: "boolean", "zmod" (n), "chain-lattice" (n), "bni" (n, i).
// chain-lattice(n) is the total order 0 < ... < n-1 with + = max, . = min.
FiniteSemiring build_named(const std::string& family, int n = 0, int i = 0);

// Componentwise product of the factors; resulting size is the product of
// the factor sizes, checked against caps.semiring_size.
FiniteSemiring product_semiring(const std::vector<SemiringPtr>& factors,
                                const Caps& caps = {});

// n x n matrices over base, entrywise sum and row-by-column product.
// Size is size(base)^(n^2), checked against caps.semiring_size.
FiniteSemiring matrix_semiring(const SemiringPtr& base, int n,
                               const Caps& caps = {});

// All pairs (t, u) with t+u = 1 and tu = 0 = ut, sorted by (t, u).  Both
// orders of a complementary pair appear.
std::vector<std::pair<int, int>> complemented_pairs(const FiniteSemiring& s);

// True iff a+a = a for every a.
bool is_additively_idempotent(const FiniteSemiring& s);

// True iff every element has an additive inverse.
bool has_additive_inverses(const FiniteSemiring& s);

}  // namespace kideal

#endif

#ifndef KIDEAL_JSON_IO_HPP
#define KIDEAL_JSON_IO_HPP

#include <string>
#include <vector>

#include "kideal/injectivity.hpp"
#include "kideal/mat2.hpp"
#include "kideal/morphism.hpp"
#include "kideal/semimodule.hpp"
#include "kideal/semiring.hpp"
#include "kideal/structure.hpp"

// JSON text in and out.  Loaders run the checked constructors, so whatever
// they hand back is validated; malformed or ill-typed input is a
// structural_error naming the offending field.  Savers emit the canonical
// form with a fixed key order and 2-space indentation, and loading a saved
// object then saving it again reproduces the exact bytes.

namespace kideal {

// { "size": n, "add": [[..]], "mul": [[..]], "zero": k, "one": j,
//   "label": "..", "elements": [".."] }, or a family shorthand
// { "family": "boolean" | "zmod" | "chain-lattice" | "bni", "n": .., "i": .. }
// with "product" ({ "factors": [..] }) and "matrix" ({ "base": .., "n": .. })
// building on nested semirings.
std::string save_semiring(const FiniteSemiring& s);
SemiringPtr load_semiring(const std::string& text, const Caps& caps = {});

// { "scalars": <semiring or family shorthand>, "size": n, "add": [[..]],
//   "action": [[..]], "zero": k, "label": "..", "elements": [".."] }
std::string save_semimodule(const FiniteSemimodule& m);
ModulePtr load_semimodule(const std::string& text, const Caps& caps = {});

// { "source": <semimodule>, "target": <semimodule>, "table": [..],
//   "label": ".." }
std::string save_linear_map(const LinearMap& f);
LinearMap load_linear_map(const std::string& text, const Caps& caps = {});

// { "modules": [<semimodule>..], "maps": [{ "source": i, "target": j,
//   "table": [..], "label": ".." }..] } with source/target indexing into
// the module list; consecutive maps must compose.
std::vector<LinearMap> load_sequence(const std::string& text,
                                     const Caps& caps = {});

// { "a": "p/q", "b": "p/q", "c": "p/q", "d": "p/q" } for the matrix
// [[a, c], [b, d]]; entries are exact fraction strings.
std::string save_mat2(const Mat2& m);
Mat2 load_mat2(const std::string& text);

// { "tag": "Zero"|"E1"|"E2"|"N"|"NGeq"|"Full", "r": "p/q" }, the ratio
// present exactly for N and NGeq.
std::string save_family(const IdealFamily& f);
IdealFamily load_family(const std::string& text);

// Either a bare array of matrices or { "generators": [..] }.
std::vector<Mat2> load_mat2_generators(const std::string& text);

// { "chain": [[members..]..] } or a bare array of member arrays, outermost
// first.
std::vector<std::vector<int>> load_member_chain(const std::string& text);

// Report rendering, one-way.
std::string save_axiom_report(const AxiomReport& r);
std::string save_lattice_report(const KIdealLattice& lat);
std::string save_summand_scan(const SummandScan& scan);
std::string save_sequence_verdict(const SequenceVerdict& v);
std::string save_short_exact_report(const ShortExactReport& r);
std::string save_injectivity_verdict(const InjectivityVerdict& v);
std::string save_transformed_chain(const TransformedChain& t);
std::string save_classification(const Classification& c);
std::string save_chain_demo(const ChainDemo& d);

}  // namespace kideal

#endif

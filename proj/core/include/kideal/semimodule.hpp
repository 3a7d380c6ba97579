#ifndef KIDEAL_SEMIMODULE_HPP
#define KIDEAL_SEMIMODULE_HPP

#include <array>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "kideal/semiring.hpp"

namespace kideal {

// Raw left semimodule data over a fixed scalar semiring.  action[s][m] is
// the image of element m under scalar s.
struct SemimoduleData {
  SemiringPtr scalars;
  int size = 0;
  std::vector<std::vector<int>> add;
  int zero = 0;
  std::vector<std::vector<int>> action;
  std::string label;
  std::vector<std::string> element_labels;
};

// Exhaustive check of the left semimodule axioms; same reporting scheme as
// check_semiring_axioms.
AxiomReport check_semimodule_axioms(const SemimoduleData& data);

// Validated finite left semimodule, index-normalized with zero at index 0.
class FiniteSemimodule {
 public:
  static FiniteSemimodule validate(SemimoduleData raw);

  const SemiringPtr& scalars() const { return data_.scalars; }
  int size() const { return data_.size; }
  int add(int a, int b) const { return data_.add[a][b]; }
  int act(int s, int m) const { return data_.action[s][m]; }
  int zero() const { return 0; }

  const std::string& label() const { return data_.label; }
  const std::string& element_label(int a) const { return data_.element_labels[a]; }
  const SemimoduleData& data() const { return data_; }

  // Tables plus scalar tables; labels are ignored.
  bool same_tables(const FiniteSemimodule& other) const;

 private:
  explicit FiniteSemimodule(SemimoduleData d) : data_(std::move(d)) {}
  SemimoduleData data_;
};

using ModulePtr = std::shared_ptr<const FiniteSemimodule>;

// The semiring acting on itself from the left.
ModulePtr regular_module(const SemiringPtr& s);

// One-element module over the given scalars.
ModulePtr zero_module(const SemiringPtr& s);

// Componentwise product of modules over the same scalar semiring; for
// finitely many factors this is also their direct sum.
ModulePtr product_module(const std::vector<ModulePtr>& factors,
                         const Caps& caps = {});

// A subset of a parent module, sorted, known to be closed under addition
// and scalar action and to contain zero.
struct Subsemimodule {
  ModulePtr parent;
  std::vector<int> members;

  bool contains(int m) const;
  bool operator==(const Subsemimodule& other) const {
    return members == other.members;
  }
};

// Checked constructor: throws precondition_error with a witness if the
// member set is not closed or misses zero.
Subsemimodule subsemimodule(const ModulePtr& parent, std::vector<int> members);

Subsemimodule trivial_subsemimodule(const ModulePtr& m);
Subsemimodule full_subsemimodule(const ModulePtr& m);

// Least subsemimodule containing the generators.
Subsemimodule generate_subsemimodule(const ModulePtr& m,
                                     const std::vector<int>& gens);

// {m : m + l = l' for some l, l' in L}.  Always a subsemimodule containing
// L; the operator is extensive, monotone and idempotent.
Subsemimodule subtractive_closure(const Subsemimodule& L);

// L equals its subtractive closure.
bool is_subtractive(const Subsemimodule& L);

// First (m, l, l') in scan order with m outside L but m + l = l' inside,
// or nothing when L is subtractive.
std::optional<std::array<int, 3>> subtractive_failure_witness(
    const Subsemimodule& L);

// Set intersection; always a subsemimodule.
Subsemimodule intersect_subsemimodules(const Subsemimodule& a,
                                       const Subsemimodule& b);

// Pairwise sums {x + y}; this is the least subsemimodule containing both.
Subsemimodule join_subsemimodules(const Subsemimodule& a,
                                  const Subsemimodule& b);

// Quotient of the parent by the smallest congruence identifying m with m'
// whenever m + l = m' + l' for some l, l' in L.  projection[m] is the class
// index of m; classes lists each class as a sorted member set.  The class
// of zero is exactly the subtractive closure of L.
struct BourneQuotient {
  ModulePtr parent;
  ModulePtr quotient;
  std::vector<int> projection;
  std::vector<std::vector<int>> classes;
};

BourneQuotient bourne_quotient(const Subsemimodule& L);

// Every subsemimodule, built as the closure of the cyclic ones under
// pairwise join; deterministic order (by size, then lexicographic member
// sets).  Throws resource_error when the module exceeds caps.module_size.
std::vector<Subsemimodule> enumerate_subsemimodules(const ModulePtr& m,
                                                    const Caps& caps = {});

// Only the subtractive subsemimodules, same ordering.  Walks closures of
// one-element extensions instead of the full subsemimodule poset, so it
// stays cheap on modules whose full poset is enormous (Boolean powers).
std::vector<Subsemimodule> enumerate_k_subsemimodules(const ModulePtr& m,
                                                      const Caps& caps = {});

// The subtractive subsemimodules of m ordered by inclusion.  edges holds
// covering pairs (i, j): node i is covered by node j.  height is the edge
// count of a longest chain, width the size of a largest antichain.
struct KIdealLattice {
  ModulePtr module;
  std::vector<Subsemimodule> nodes;
  std::vector<std::pair<int, int>> edges;
  int height = 0;
  int width = 0;
};

KIdealLattice k_ideal_lattice(const ModulePtr& m, const Caps& caps = {});

struct LatticeMetrics {
  int height = 0;
  int width = 0;
  std::vector<int> longest_chain;  // node indices, bottom to top
};

LatticeMetrics lattice_metrics(const KIdealLattice& lat);

// The members of L as a module in their own right, indices compressed in
// member order (zero first).
ModulePtr submodule_restrict(const Subsemimodule& L);

// Elements x with x+a = x+b only when a = b; closed under addition and
// containing zero, but in general not a subsemimodule.
struct CancellativeSet {
  std::vector<int> elements;
  bool whole_module = false;
};

CancellativeSet cancellative_elements(const FiniteSemimodule& m);

// Deterministic small generating set: greedy sweep in index order followed
// by a pruning pass.
std::vector<int> minimal_generating_set(const FiniteSemimodule& m);

// Generators that extend the span of `base` to the whole module, chosen by
// the same deterministic procedure.
std::vector<int> generators_extending(const FiniteSemimodule& m,
                                      const std::vector<int>& base);

// Any finite commutative monoid is a module over a suitable truncated
// counting semiring B(n, i): scalar k acts as the k-fold sum.  These two
// helpers pick one semiring that works for several addition tables at once
// and wrap a table as a module over it.
SemiringPtr counting_scalars(
    const std::vector<const std::vector<std::vector<int>>*>& add_tables);

ModulePtr monoid_module(const SemiringPtr& counting,
                        const std::vector<std::vector<int>>& add,
                        const std::string& label);

}  // namespace kideal

#endif

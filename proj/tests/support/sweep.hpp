#ifndef KIDEAL_TESTS_SUPPORT_SWEEP_HPP
#define KIDEAL_TESTS_SUPPORT_SWEEP_HPP

// Shared sweep family and brute-force oracles.  The exhaustive suites run
// over a closed family of small modules: for each scalar semiring, the
// powers of the regular module up to a size bound, every subobject of
// those as a standalone module, and every Bourne quotient, deduplicated by
// table equality.  The oracles recompute answers from the definitions by
// raw subset or table scans, independent of the library's algorithms.

#include <string>
#include <vector>

#include "kideal/morphism.hpp"
#include "kideal/semimodule.hpp"
#include "kideal/semiring.hpp"

namespace sweep {

using kideal::Caps;
using kideal::ModulePtr;
using kideal::SemiringPtr;
using kideal::Subsemimodule;

inline SemiringPtr scalar(const std::string& family, int n = 0, int i = 0) {
  return std::make_shared<kideal::FiniteSemiring>(
      kideal::build_named(family, n, i));
}

// The scalar semirings every exhaustive suite quantifies over.
inline std::vector<SemiringPtr> scalar_family() {
  return {scalar("boolean"), scalar("zmod", 2), scalar("zmod", 3),
          scalar("bni", 3, 1), scalar("chain-lattice", 3)};
}

inline std::vector<ModulePtr> modules_over(const SemiringPtr& s,
                                           int max_size = 8) {
  std::vector<ModulePtr> out;
  auto add_unique = [&](const ModulePtr& m) {
    if (m->size() > max_size) return;
    for (const ModulePtr& have : out)
      if (have->same_tables(*m)) return;
    out.push_back(m);
  };

  Caps caps;
  caps.module_size = 64;
  std::vector<ModulePtr> powers;
  ModulePtr reg = kideal::regular_module(s);
  std::vector<ModulePtr> factors;
  while (true) {
    factors.push_back(reg);
    if (factors.size() == 1) {
      powers.push_back(reg);
    } else {
      long long size = 1;
      for (const ModulePtr& f : factors) size *= f->size();
      if (size > max_size) break;
      powers.push_back(kideal::product_module(factors, caps));
    }
    if (powers.back()->size() >= max_size) break;
  }

  for (const ModulePtr& p : powers) {
    add_unique(p);
    for (const Subsemimodule& sub : kideal::enumerate_subsemimodules(p, caps)) {
      add_unique(kideal::submodule_restrict(sub));
      add_unique(kideal::bourne_quotient(sub).quotient);
    }
  }
  return out;
}

inline std::vector<ModulePtr> sweep_modules(int max_size = 8) {
  std::vector<ModulePtr> out;
  for (const SemiringPtr& s : scalar_family())
    for (const ModulePtr& m : modules_over(s, max_size))
      out.push_back(m);
  return out;
}

// A join table wrapped as a module over the booleans: scalar 0 kills,
// scalar 1 fixes.
inline ModulePtr bool_module(const std::vector<std::vector<int>>& add,
                             const std::string& label) {
  kideal::SemimoduleData d;
  d.scalars = scalar("boolean");
  d.size = static_cast<int>(add.size());
  d.add = add;
  d.action.assign(2, std::vector<int>(d.size));
  for (int m = 0; m < d.size; ++m) {
    d.action[0][m] = 0;
    d.action[1][m] = m;
  }
  d.label = label;
  return std::make_shared<kideal::FiniteSemimodule>(
      kideal::FiniteSemimodule::validate(std::move(d)));
}

// One module per isomorphism class of modules over the booleans with at
// most four elements: such a module is exactly a join semilattice with
// bottom, and up to size four those are the chains and the diamond.
inline std::vector<ModulePtr> small_bool_modules() {
  auto chain = [](int n) {
    std::vector<std::vector<int>> add(n, std::vector<int>(n));
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) add[a][b] = a > b ? a : b;
    return add;
  };
  std::vector<std::vector<int>> diamond = {
      {0, 1, 2, 3}, {1, 1, 3, 3}, {2, 3, 2, 3}, {3, 3, 3, 3}};
  return {bool_module(chain(1), "point"), bool_module(chain(2), "two-chain"),
          bool_module(chain(3), "three-chain"),
          bool_module(chain(4), "four-chain"), bool_module(diamond, "diamond")};
}

// Oracle: subsets containing zero and closed under addition and the scalar
// action, by scanning all subsets.  Usable up to size 16.
inline std::vector<std::vector<int>> oracle_subsemimodules(const ModulePtr& m) {
  int n = m->size();
  int scalars = m->scalars()->size();
  std::vector<std::vector<int>> out;
  for (unsigned long mask = 1; mask < (1ul << n); mask += 2) {
    bool closed = true;
    for (int a = 0; a < n && closed; ++a) {
      if (!((mask >> a) & 1)) continue;
      for (int b = a; b < n && closed; ++b) {
        if (!((mask >> b) & 1)) continue;
        if (!((mask >> m->add(a, b)) & 1)) closed = false;
      }
      for (int s = 0; s < scalars && closed; ++s)
        if (!((mask >> m->act(s, a)) & 1)) closed = false;
    }
    if (!closed) continue;
    std::vector<int> members;
    for (int a = 0; a < n; ++a)
      if ((mask >> a) & 1) members.push_back(a);
    out.push_back(std::move(members));
  }
  return out;
}

// Additivity plus scalar compatibility for a raw value table.
inline bool is_linear_table(const ModulePtr& domain, const ModulePtr& codomain,
                            const std::vector<int>& table) {
  int n = domain->size();
  for (int a = 0; a < n; ++a)
    for (int b = a; b < n; ++b)
      if (table[domain->add(a, b)] != codomain->add(table[a], table[b]))
        return false;
  for (int s = 0; s < domain->scalars()->size(); ++s)
    for (int a = 0; a < n; ++a)
      if (table[domain->act(s, a)] != codomain->act(s, table[a])) return false;
  return true;
}

// Oracle: every linear value table domain -> codomain, in lexicographic
// order, by scanning all |codomain|^|domain| tables.
inline std::vector<std::vector<int>> oracle_homs(const ModulePtr& domain,
                                                 const ModulePtr& codomain) {
  int n = domain->size();
  int c = codomain->size();
  std::vector<std::vector<int>> out;
  std::vector<int> table(n, 0);
  while (true) {
    if (is_linear_table(domain, codomain, table)) out.push_back(table);
    int pos = n - 1;
    while (pos >= 0 && table[pos] == c - 1) table[pos--] = 0;
    if (pos < 0) break;
    ++table[pos];
  }
  return out;
}

// Oracle: does g on the members of L extend to a linear map on the whole
// parent?  g_on_members[i] is the value at L.members[i].
inline bool oracle_has_extension(const Subsemimodule& L,
                                 const std::vector<int>& g_on_members,
                                 const ModulePtr& target) {
  const ModulePtr& parent = L.parent;
  int n = parent->size();
  int c = target->size();
  std::vector<int> table(n, 0);
  while (true) {
    bool matches = true;
    for (std::size_t i = 0; i < L.members.size() && matches; ++i)
      if (table[L.members[i]] != g_on_members[i]) matches = false;
    if (matches && is_linear_table(parent, target, table)) return true;
    int pos = n - 1;
    while (pos >= 0 && table[pos] == c - 1) table[pos--] = 0;
    if (pos < 0) return false;
    ++table[pos];
  }
}

}  // namespace sweep

#endif

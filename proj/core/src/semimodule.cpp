#include "kideal/semimodule.hpp"

#include <algorithm>
#include <iterator>
#include <numeric>
#include <set>

namespace kideal {

namespace {

void check_structure(const SemimoduleData& d) {
  if (!d.scalars) throw structural_error("module has no scalar semiring");
  if (d.size < 1) throw structural_error("module carrier must be non-empty");
  if (static_cast<int>(d.add.size()) != d.size)
    throw structural_error("module add table has wrong row count");
  for (const auto& row : d.add) {
    if (static_cast<int>(row.size()) != d.size)
      throw structural_error("module add table is ragged");
    for (int e : row)
      if (e < 0 || e >= d.size)
        throw structural_error("module add entry out of range");
  }
  if (static_cast<int>(d.action.size()) != d.scalars->size())
    throw structural_error("action table must have one row per scalar");
  for (const auto& row : d.action) {
    if (static_cast<int>(row.size()) != d.size)
      throw structural_error("action table is ragged");
    for (int e : row)
      if (e < 0 || e >= d.size)
        throw structural_error("action entry out of range");
  }
  if (d.zero < 0 || d.zero >= d.size)
    throw structural_error("module zero index out of range");
  if (!d.element_labels.empty() &&
      static_cast<int>(d.element_labels.size()) != d.size)
    throw structural_error("module label count does not match carrier size");
}

SemimoduleData canonicalize(const SemimoduleData& d) {
  const int n = d.size;
  std::vector<int> perm(n, -1);
  perm[d.zero] = 0;
  int next = 1;
  for (int a = 0; a < n; ++a)
    if (a != d.zero) perm[a] = next++;

  SemimoduleData out;
  out.scalars = d.scalars;
  out.size = n;
  out.zero = 0;
  out.label = d.label;
  out.add.assign(n, std::vector<int>(n, 0));
  out.action.assign(d.scalars->size(), std::vector<int>(n, 0));
  out.element_labels.assign(n, "");
  for (int a = 0; a < n; ++a) {
    out.element_labels[perm[a]] =
        d.element_labels.empty() ? std::to_string(a) : d.element_labels[a];
    for (int b = 0; b < n; ++b) out.add[perm[a]][perm[b]] = perm[d.add[a][b]];
    for (int s = 0; s < d.scalars->size(); ++s)
      out.action[s][perm[a]] = perm[d.action[s][a]];
  }
  return out;
}

std::string member_set_label(const FiniteSemimodule& m,
                             const std::vector<int>& members) {
  std::string out = "{";
  for (size_t i = 0; i < members.size(); ++i) {
    if (i) out += ",";
    out += m.element_label(members[i]);
  }
  return out + "}";
}

}  // namespace

AxiomReport check_semimodule_axioms(const SemimoduleData& d) {
  check_structure(d);
  const int n = d.size;
  const int ns = d.scalars->size();
  const auto& A = d.add;
  const auto& T = d.action;
  const FiniteSemiring& S = *d.scalars;
  const int z = d.zero;
  AxiomReport rep;
  auto fail = [&rep](const char* axiom, int a, int b, int c) {
    rep.violations.push_back({axiom, {a, b, c}});
  };

  [&] {
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int c = 0; c < n; ++c)
          if (A[A[a][b]][c] != A[a][A[b][c]]) {
            fail("add-associativity", a, b, c);
            return;
          }
  }();
  [&] {
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        if (A[a][b] != A[b][a]) {
          fail("add-commutativity", a, b, -1);
          return;
        }
  }();
  [&] {
    for (int a = 0; a < n; ++a)
      if (A[a][z] != a || A[z][a] != a) {
        fail("add-identity", a, -1, -1);
        return;
      }
  }();
  [&] {
    for (int m = 0; m < n; ++m)
      if (T[S.one()][m] != m) {
        fail("action-identity", m, -1, -1);
        return;
      }
  }();
  [&] {
    for (int s = 0; s < ns; ++s)
      for (int t = 0; t < ns; ++t)
        for (int m = 0; m < n; ++m)
          if (T[S.mul(s, t)][m] != T[s][T[t][m]]) {
            fail("action-associativity", s, t, m);
            return;
          }
  }();
  [&] {
    for (int s = 0; s < ns; ++s)
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
          if (T[s][A[a][b]] != A[T[s][a]][T[s][b]]) {
            fail("action-distributes-over-add", s, a, b);
            return;
          }
  }();
  [&] {
    for (int s = 0; s < ns; ++s)
      for (int t = 0; t < ns; ++t)
        for (int m = 0; m < n; ++m)
          if (T[S.add(s, t)][m] != A[T[s][m]][T[t][m]]) {
            fail("scalar-sum-distributes", s, t, m);
            return;
          }
  }();
  [&] {
    for (int s = 0; s < ns; ++s)
      if (T[s][z] != z) {
        fail("action-annihilates-zero", s, -1, -1);
        return;
      }
  }();
  [&] {
    for (int m = 0; m < n; ++m)
      if (T[S.zero()][m] != z) {
        fail("zero-scalar-annihilates", m, -1, -1);
        return;
      }
  }();

  rep.passed = rep.violations.empty();
  return rep;
}

FiniteSemimodule FiniteSemimodule::validate(SemimoduleData raw) {
  AxiomReport rep = check_semimodule_axioms(raw);
  if (!rep.passed)
    throw validation_error(
        "semimodule axioms failed, first: " + rep.violations.front().axiom,
        std::move(rep));
  if (raw.element_labels.empty()) {
    raw.element_labels.resize(raw.size);
    for (int a = 0; a < raw.size; ++a) raw.element_labels[a] = std::to_string(a);
  }
  return FiniteSemimodule(canonicalize(std::move(raw)));
}

bool FiniteSemimodule::same_tables(const FiniteSemimodule& other) const {
  return data_.size == other.data_.size && data_.add == other.data_.add &&
         data_.action == other.data_.action &&
         data_.scalars->same_tables(*other.data_.scalars);
}

ModulePtr regular_module(const SemiringPtr& s) {
  SemimoduleData d;
  d.scalars = s;
  d.size = s->size();
  d.add = s->data().add;
  d.zero = s->zero();
  d.action = s->data().mul;
  d.label = s->label();
  d.element_labels = s->data().element_labels;
  return std::make_shared<FiniteSemimodule>(
      FiniteSemimodule::validate(std::move(d)));
}

ModulePtr zero_module(const SemiringPtr& s) {
  SemimoduleData d;
  d.scalars = s;
  d.size = 1;
  d.add = {{0}};
  d.zero = 0;
  d.action.assign(s->size(), {0});
  d.label = "0";
  d.element_labels = {"0"};
  return std::make_shared<FiniteSemimodule>(
      FiniteSemimodule::validate(std::move(d)));
}

ModulePtr product_module(const std::vector<ModulePtr>& factors,
                         const Caps& caps) {
  if (factors.empty()) throw parameter_error("product needs at least one factor");
  for (size_t j = 1; j < factors.size(); ++j)
    if (!factors[j]->scalars()->same_tables(*factors[0]->scalars()))
      throw precondition_error("product factors must share the scalar semiring");
  long long total = 1;
  for (const auto& f : factors) {
    total *= f->size();
    if (total > caps.module_size)
      throw resource_error("product module size exceeds module cap");
  }
  const int n = static_cast<int>(total);
  const int k = static_cast<int>(factors.size());
  const SemiringPtr& S = factors[0]->scalars();

  auto decompose = [&](int idx) {
    std::vector<int> digits(k);
    for (int j = k - 1; j >= 0; --j) {
      digits[j] = idx % factors[j]->size();
      idx /= factors[j]->size();
    }
    return digits;
  };
  auto compose = [&](const std::vector<int>& digits) {
    int idx = 0;
    for (int j = 0; j < k; ++j) idx = idx * factors[j]->size() + digits[j];
    return idx;
  };

  SemimoduleData d;
  d.scalars = S;
  d.size = n;
  d.zero = 0;
  d.add.assign(n, std::vector<int>(n, 0));
  d.action.assign(S->size(), std::vector<int>(n, 0));
  {
    std::string lbl;
    for (int j = 0; j < k; ++j) {
      if (j) lbl += " x ";
      lbl += factors[j]->label();
    }
    d.label = lbl;
  }
  d.element_labels.resize(n);
  for (int x = 0; x < n; ++x) {
    auto dx = decompose(x);
    std::string lbl = "(";
    for (int j = 0; j < k; ++j) {
      if (j) lbl += ",";
      lbl += factors[j]->element_label(dx[j]);
    }
    d.element_labels[x] = lbl + ")";
    for (int y = 0; y < n; ++y) {
      auto dy = decompose(y);
      std::vector<int> s(k);
      for (int j = 0; j < k; ++j) s[j] = factors[j]->add(dx[j], dy[j]);
      d.add[x][y] = compose(s);
    }
    for (int s = 0; s < S->size(); ++s) {
      std::vector<int> a(k);
      for (int j = 0; j < k; ++j) a[j] = factors[j]->act(s, dx[j]);
      d.action[s][x] = compose(a);
    }
  }
  return std::make_shared<FiniteSemimodule>(
      FiniteSemimodule::validate(std::move(d)));
}

bool Subsemimodule::contains(int m) const {
  return std::binary_search(members.begin(), members.end(), m);
}

Subsemimodule subsemimodule(const ModulePtr& parent, std::vector<int> members) {
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  for (int m : members)
    if (m < 0 || m >= parent->size())
      throw structural_error("member index out of range");
  std::vector<char> in(parent->size(), 0);
  for (int m : members) in[m] = 1;
  if (!in[parent->zero()])
    throw precondition_error("member set does not contain zero");
  for (int a : members)
    for (int b : members)
      if (!in[parent->add(a, b)])
        throw precondition_error(
            "member set not closed under addition at (" + std::to_string(a) +
            "," + std::to_string(b) + ")");
  for (int s = 0; s < parent->scalars()->size(); ++s)
    for (int a : members)
      if (!in[parent->act(s, a)])
        throw precondition_error("member set not closed under scalar " +
                                 std::to_string(s) + " acting on " +
                                 std::to_string(a));
  return Subsemimodule{parent, std::move(members)};
}

Subsemimodule trivial_subsemimodule(const ModulePtr& m) {
  return Subsemimodule{m, {m->zero()}};
}

Subsemimodule full_subsemimodule(const ModulePtr& m) {
  std::vector<int> all(m->size());
  std::iota(all.begin(), all.end(), 0);
  return Subsemimodule{m, std::move(all)};
}

Subsemimodule generate_subsemimodule(const ModulePtr& m,
                                     const std::vector<int>& gens) {
  std::vector<char> in(m->size(), 0);
  in[m->zero()] = 1;
  for (int g : gens) {
    if (g < 0 || g >= m->size())
      throw parameter_error("generator index out of range");
    in[g] = 1;
  }
  bool changed = true;
  while (changed) {
    changed = false;
    for (int a = 0; a < m->size(); ++a) {
      if (!in[a]) continue;
      for (int b = a; b < m->size(); ++b) {
        if (!in[b]) continue;
        int c = m->add(a, b);
        if (!in[c]) in[c] = 1, changed = true;
      }
      for (int s = 0; s < m->scalars()->size(); ++s) {
        int c = m->act(s, a);
        if (!in[c]) in[c] = 1, changed = true;
      }
    }
  }
  std::vector<int> members;
  for (int a = 0; a < m->size(); ++a)
    if (in[a]) members.push_back(a);
  return Subsemimodule{m, std::move(members)};
}

Subsemimodule subtractive_closure(const Subsemimodule& L) {
  const FiniteSemimodule& M = *L.parent;
  std::vector<char> in_l(M.size(), 0);
  for (int l : L.members) in_l[l] = 1;
  std::vector<int> members;
  for (int m = 0; m < M.size(); ++m) {
    bool hit = false;
    for (size_t i = 0; i < L.members.size() && !hit; ++i)
      if (in_l[M.add(m, L.members[i])]) hit = true;
    if (hit) members.push_back(m);
  }
  // The closure is provably a subsemimodule; route through the checked
  // constructor so that stays an enforced invariant.
  return subsemimodule(L.parent, std::move(members));
}

bool is_subtractive(const Subsemimodule& L) {
  return subtractive_closure(L).members == L.members;
}

std::optional<std::array<int, 3>> subtractive_failure_witness(
    const Subsemimodule& L) {
  const FiniteSemimodule& M = *L.parent;
  std::vector<char> in_l(M.size(), 0);
  for (int l : L.members) in_l[l] = 1;
  for (int m = 0; m < M.size(); ++m) {
    if (in_l[m]) continue;
    for (int l : L.members) {
      int sum = M.add(m, l);
      if (in_l[sum]) return std::array<int, 3>{m, l, sum};
    }
  }
  return std::nullopt;
}

Subsemimodule intersect_subsemimodules(const Subsemimodule& a,
                                       const Subsemimodule& b) {
  if (!a.parent->same_tables(*b.parent))
    throw precondition_error("intersection needs a common parent module");
  std::vector<int> common;
  std::set_intersection(a.members.begin(), a.members.end(), b.members.begin(),
                        b.members.end(), std::back_inserter(common));
  return subsemimodule(a.parent, std::move(common));
}

Subsemimodule join_subsemimodules(const Subsemimodule& a,
                                  const Subsemimodule& b) {
  if (!a.parent->same_tables(*b.parent))
    throw precondition_error("join needs a common parent module");
  const FiniteSemimodule& M = *a.parent;
  std::vector<char> in(M.size(), 0);
  for (int x : a.members)
    for (int y : b.members) in[M.add(x, y)] = 1;
  std::vector<int> members;
  for (int m = 0; m < M.size(); ++m)
    if (in[m]) members.push_back(m);
  return subsemimodule(a.parent, std::move(members));
}

namespace {

struct UnionFind {
  std::vector<int> up;
  explicit UnionFind(int n) : up(n) { std::iota(up.begin(), up.end(), 0); }
  int find(int x) {
    while (up[x] != x) x = up[x] = up[up[x]];
    return x;
  }
  void join(int a, int b) { up[find(a)] = find(b); }
};

}  // namespace

BourneQuotient bourne_quotient(const Subsemimodule& L) {
  const ModulePtr& Mp = L.parent;
  const FiniteSemimodule& M = *Mp;
  const int n = M.size();

  // reach[m] = {m + l : l in L}; m and m' are identified when the sets meet.
  std::vector<std::vector<char>> reach(n, std::vector<char>(n, 0));
  for (int m = 0; m < n; ++m)
    for (int l : L.members) reach[m][M.add(m, l)] = 1;

  UnionFind uf(n);
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) {
      if (uf.find(a) == uf.find(b)) continue;
      for (int x = 0; x < n; ++x)
        if (reach[a][x] && reach[b][x]) {
          uf.join(a, b);
          break;
        }
    }

  // Class ids in order of smallest member, so the class of zero is class 0.
  std::vector<int> class_of(n, -1);
  std::vector<std::vector<int>> classes;
  for (int m = 0; m < n; ++m) {
    int r = uf.find(m);
    if (class_of[r] == -1) {
      class_of[r] = static_cast<int>(classes.size());
      classes.emplace_back();
    }
    classes[class_of[r]].push_back(m);
  }
  std::vector<int> proj(n);
  for (int m = 0; m < n; ++m) proj[m] = class_of[uf.find(m)];

  const int q = static_cast<int>(classes.size());
  SemimoduleData d;
  d.scalars = M.scalars();
  d.size = q;
  d.zero = proj[M.zero()];
  d.add.assign(q, std::vector<int>(q, 0));
  d.action.assign(M.scalars()->size(), std::vector<int>(q, 0));
  d.label = M.label() + "/" + member_set_label(M, L.members);
  d.element_labels.resize(q);
  for (int ci = 0; ci < q; ++ci) {
    d.element_labels[ci] = "[" + M.element_label(classes[ci][0]) + "]";
    int rep_i = classes[ci][0];
    for (int cj = 0; cj < q; ++cj)
      d.add[ci][cj] = proj[M.add(rep_i, classes[cj][0])];
    for (int s = 0; s < M.scalars()->size(); ++s)
      d.action[s][ci] = proj[M.act(s, rep_i)];
  }

  BourneQuotient out;
  out.parent = Mp;
  out.quotient = std::make_shared<FiniteSemimodule>(
      FiniteSemimodule::validate(std::move(d)));
  out.projection = std::move(proj);
  out.classes = std::move(classes);
  return out;
}

std::vector<Subsemimodule> enumerate_subsemimodules(const ModulePtr& m,
                                                    const Caps& caps) {
  if (m->size() > caps.module_size)
    throw resource_error("module size " + std::to_string(m->size()) +
                         " exceeds enumeration cap " +
                         std::to_string(caps.module_size));

  std::set<std::vector<int>> seen;
  std::vector<std::vector<int>> pool;
  auto push = [&](std::vector<int> mem) {
    if (seen.insert(mem).second) pool.push_back(std::move(mem));
  };

  push(trivial_subsemimodule(m).members);
  for (int x = 0; x < m->size(); ++x)
    push(generate_subsemimodule(m, {x}).members);

  // Join of two subsemimodules is the set of pairwise sums; closing the
  // cyclic ones under join reaches every subsemimodule.
  for (size_t i = 0; i < pool.size(); ++i)
    for (size_t j = 0; j < i; ++j) {
      std::vector<char> in(m->size(), 0);
      for (int a : pool[i])
        for (int b : pool[j]) in[m->add(a, b)] = 1;
      std::vector<int> join;
      for (int x = 0; x < m->size(); ++x)
        if (in[x]) join.push_back(x);
      push(std::move(join));
    }

  std::vector<Subsemimodule> out;
  out.reserve(pool.size());
  for (auto& mem : seen) out.push_back(Subsemimodule{m, mem});
  std::sort(out.begin(), out.end(),
            [](const Subsemimodule& a, const Subsemimodule& b) {
              if (a.members.size() != b.members.size())
                return a.members.size() < b.members.size();
              return a.members < b.members;
            });
  return out;
}

std::vector<Subsemimodule> enumerate_k_subsemimodules(const ModulePtr& m,
                                                      const Caps& caps) {
  if (m->size() > caps.module_size)
    throw resource_error("module size " + std::to_string(m->size()) +
                         " exceeds enumeration cap " +
                         std::to_string(caps.module_size));

  // Every subtractive subsemimodule is reached from {0} by repeatedly
  // adjoining one of its elements and closing: closures of subsets of a
  // subtractive K stay inside K.
  std::set<std::vector<int>> seen;
  std::vector<std::vector<int>> pool;
  auto push = [&](std::vector<int> mem) {
    if (seen.insert(mem).second) pool.push_back(std::move(mem));
  };

  push(subtractive_closure(trivial_subsemimodule(m)).members);
  for (size_t i = 0; i < pool.size(); ++i)
    for (int x = 0; x < m->size(); ++x) {
      if (std::binary_search(pool[i].begin(), pool[i].end(), x)) continue;
      std::vector<int> gens = pool[i];
      gens.push_back(x);
      push(subtractive_closure(generate_subsemimodule(m, gens)).members);
    }

  std::vector<Subsemimodule> out;
  out.reserve(seen.size());
  for (auto& mem : seen) out.push_back(Subsemimodule{m, mem});
  std::sort(out.begin(), out.end(),
            [](const Subsemimodule& a, const Subsemimodule& b) {
              if (a.members.size() != b.members.size())
                return a.members.size() < b.members.size();
              return a.members < b.members;
            });
  return out;
}

namespace {

bool subset_of(const std::vector<int>& a, const std::vector<int>& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

// Maximum bipartite matching (Kuhn), used for the antichain width via
// Dilworth: width = nodes - matching over the strict comparability graph.
struct Matcher {
  const std::vector<std::vector<int>>& adj;
  std::vector<int> match_right;
  std::vector<char> used;

  explicit Matcher(const std::vector<std::vector<int>>& a, int n)
      : adj(a), match_right(n, -1) {}

  bool try_kuhn(int v) {
    for (int to : adj[v]) {
      if (used[to]) continue;
      used[to] = 1;
      if (match_right[to] == -1 || try_kuhn(match_right[to])) {
        match_right[to] = v;
        return true;
      }
    }
    return false;
  }

  int run() {
    int result = 0;
    for (size_t v = 0; v < adj.size(); ++v) {
      used.assign(match_right.size(), 0);
      if (try_kuhn(static_cast<int>(v))) ++result;
    }
    return result;
  }
};

}  // namespace

KIdealLattice k_ideal_lattice(const ModulePtr& m, const Caps& caps) {
  KIdealLattice lat;
  lat.module = m;
  lat.nodes = enumerate_k_subsemimodules(m, caps);

  const int k = static_cast<int>(lat.nodes.size());
  std::vector<std::vector<char>> below(k, std::vector<char>(k, 0));
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      if (i != j && lat.nodes[i].members.size() < lat.nodes[j].members.size() &&
          subset_of(lat.nodes[i].members, lat.nodes[j].members))
        below[i][j] = 1;

  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      if (!below[i][j]) continue;
      bool covering = true;
      for (int t = 0; t < k && covering; ++t)
        if (below[i][t] && below[t][j]) covering = false;
      if (covering) lat.edges.emplace_back(i, j);
    }

  LatticeMetrics metrics;
  {
    // Longest chain: nodes are sorted by size, so index order is already
    // topological for the covering DAG.
    std::vector<int> dist(k, 0), from(k, -1);
    for (auto [i, j] : lat.edges)
      if (dist[i] + 1 > dist[j]) dist[j] = dist[i] + 1, from[j] = i;
    int best = 0;
    for (int i = 1; i < k; ++i)
      if (dist[i] > dist[best]) best = i;
    metrics.height = k ? dist[best] : 0;
    for (int v = best; v != -1; v = from[v]) metrics.longest_chain.push_back(v);
    std::reverse(metrics.longest_chain.begin(), metrics.longest_chain.end());

    std::vector<std::vector<int>> adj(k);
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j)
        if (below[i][j]) adj[i].push_back(j);
    Matcher matcher(adj, k);
    metrics.width = k - matcher.run();
  }
  lat.height = metrics.height;
  lat.width = metrics.width;
  return lat;
}

LatticeMetrics lattice_metrics(const KIdealLattice& lat) {
  LatticeMetrics out;
  out.height = lat.height;
  out.width = lat.width;
  const int k = static_cast<int>(lat.nodes.size());
  std::vector<int> dist(k, 0), from(k, -1);
  for (auto [i, j] : lat.edges)
    if (dist[i] + 1 > dist[j]) dist[j] = dist[i] + 1, from[j] = i;
  int best = 0;
  for (int i = 1; i < k; ++i)
    if (dist[i] > dist[best]) best = i;
  for (int v = best; v != -1; v = from[v]) out.longest_chain.push_back(v);
  std::reverse(out.longest_chain.begin(), out.longest_chain.end());
  return out;
}

ModulePtr submodule_restrict(const Subsemimodule& L) {
  const FiniteSemimodule& M = *L.parent;
  const int n = static_cast<int>(L.members.size());
  std::vector<int> local(M.size(), -1);
  for (int i = 0; i < n; ++i) local[L.members[i]] = i;

  SemimoduleData d;
  d.scalars = M.scalars();
  d.size = n;
  d.zero = local[M.zero()];
  d.add.assign(n, std::vector<int>(n, 0));
  d.action.assign(M.scalars()->size(), std::vector<int>(n, 0));
  d.label = M.label() + "|" + member_set_label(M, L.members);
  d.element_labels.resize(n);
  for (int i = 0; i < n; ++i) {
    d.element_labels[i] = M.element_label(L.members[i]);
    for (int j = 0; j < n; ++j)
      d.add[i][j] = local[M.add(L.members[i], L.members[j])];
    for (int s = 0; s < M.scalars()->size(); ++s)
      d.action[s][i] = local[M.act(s, L.members[i])];
  }
  return std::make_shared<FiniteSemimodule>(
      FiniteSemimodule::validate(std::move(d)));
}

CancellativeSet cancellative_elements(const FiniteSemimodule& m) {
  CancellativeSet out;
  const int n = m.size();
  for (int x = 0; x < n; ++x) {
    bool ok = true;
    for (int a = 0; a < n && ok; ++a)
      for (int b = a + 1; b < n && ok; ++b)
        if (m.add(x, a) == m.add(x, b)) ok = false;
    if (ok) out.elements.push_back(x);
  }
  out.whole_module = static_cast<int>(out.elements.size()) == n;
  return out;
}

std::vector<int> minimal_generating_set(const FiniteSemimodule& m) {
  return generators_extending(m, {});
}

std::vector<int> generators_extending(const FiniteSemimodule& m,
                                      const std::vector<int>& base) {
  // Shared_ptr wrapper around m without taking ownership; the pointer is
  // only used within this call.
  ModulePtr self(&m, [](const FiniteSemimodule*) {});

  std::vector<int> gens;
  auto span = [&](const std::vector<int>& extra) {
    std::vector<int> all = base;
    all.insert(all.end(), extra.begin(), extra.end());
    return generate_subsemimodule(self, all).members;
  };

  std::vector<int> covered = span({});
  for (int x = 0; x < m.size(); ++x) {
    if (std::binary_search(covered.begin(), covered.end(), x)) continue;
    gens.push_back(x);
    covered = span(gens);
  }

  bool changed = true;
  while (changed) {
    changed = false;
    for (size_t i = 0; i < gens.size(); ++i) {
      std::vector<int> rest = gens;
      rest.erase(rest.begin() + i);
      if (static_cast<int>(span(rest).size()) == m.size() &&
          static_cast<int>(covered.size()) == m.size()) {
        gens = rest;
        changed = true;
        break;
      }
    }
  }
  return gens;
}

SemiringPtr counting_scalars(
    const std::vector<const std::vector<std::vector<int>>*>& add_tables) {
  long long max_idx = 0, lcm_per = 1;
  for (const auto* table : add_tables) {
    const auto& A = *table;
    const int n = static_cast<int>(A.size());
    for (int x = 0; x < n; ++x) {
      // Walk 0, x, 2x, ... until the first repeat; that yields the
      // preperiod and period of x under iterated addition.
      std::vector<int> seen_at(n, -1);
      int value = 0, step = 0;
      while (seen_at[value] == -1) {
        seen_at[value] = step;
        value = A[value][x];
        ++step;
      }
      int idx = seen_at[value];
      int per = step - idx;
      max_idx = std::max<long long>(max_idx, idx);
      lcm_per = std::lcm(lcm_per, static_cast<long long>(per));
    }
  }
  if (max_idx + lcm_per < 2) max_idx = 1, lcm_per = 1;
  if (max_idx + lcm_per > 1'000'000)
    throw resource_error("counting semiring would be too large");
  return std::make_shared<FiniteSemiring>(
      build_bni(static_cast<int>(max_idx + lcm_per), static_cast<int>(max_idx)));
}

ModulePtr monoid_module(const SemiringPtr& counting,
                        const std::vector<std::vector<int>>& add,
                        const std::string& label) {
  const int n = static_cast<int>(add.size());
  SemimoduleData d;
  d.scalars = counting;
  d.size = n;
  d.zero = 0;
  d.add = add;
  d.action.assign(counting->size(), std::vector<int>(n, 0));
  d.label = label;
  for (int x = 0; x < n; ++x) {
    int acc = 0;
    for (int k = 1; k < counting->size(); ++k) {
      acc = add[acc][x];
      // Scalar at canonical index k is the k-fold sum; index 1 is the
      // multiplicative identity of the counting semiring, acting as one
      // copy.
      d.action[k][x] = acc;
    }
  }
  return std::make_shared<FiniteSemimodule>(
      FiniteSemimodule::validate(std::move(d)));
}

}  // namespace kideal

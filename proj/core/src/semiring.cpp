#include "kideal/semiring.hpp"

#include <algorithm>
#include <numeric>

namespace kideal {

namespace {

void check_table_shape(const std::vector<std::vector<int>>& t, int n,
                       const char* name) {
  if (static_cast<int>(t.size()) != n)
    throw structural_error(std::string(name) + " table has wrong row count");
  for (const auto& row : t) {
    if (static_cast<int>(row.size()) != n)
      throw structural_error(std::string(name) + " table is ragged");
    for (int e : row)
      if (e < 0 || e >= n)
        throw structural_error(std::string(name) +
                               " table entry out of range: " + std::to_string(e));
  }
}

void check_structure(const SemiringData& d) {
  if (d.size < 1) throw structural_error("carrier must be non-empty");
  check_table_shape(d.add, d.size, "add");
  check_table_shape(d.mul, d.size, "mul");
  if (d.zero < 0 || d.zero >= d.size) throw structural_error("zero index out of range");
  if (d.one < 0 || d.one >= d.size) throw structural_error("one index out of range");
  if (!d.element_labels.empty() &&
      static_cast<int>(d.element_labels.size()) != d.size)
    throw structural_error("element label count does not match carrier size");
}

// Reindex so that zero lands on 0 and one on 1, remaining elements keeping
// their relative order.  Assumes zero != one.
SemiringData canonicalize(const SemiringData& d) {
  const int n = d.size;
  std::vector<int> perm(n, -1);
  perm[d.zero] = 0;
  perm[d.one] = 1;
  int next = 2;
  for (int a = 0; a < n; ++a)
    if (a != d.zero && a != d.one) perm[a] = next++;

  SemiringData out;
  out.size = n;
  out.zero = 0;
  out.one = 1;
  out.label = d.label;
  out.add.assign(n, std::vector<int>(n, 0));
  out.mul.assign(n, std::vector<int>(n, 0));
  out.element_labels.assign(n, "");
  for (int a = 0; a < n; ++a) {
    out.element_labels[perm[a]] =
        d.element_labels.empty() ? std::to_string(a) : d.element_labels[a];
    for (int b = 0; b < n; ++b) {
      out.add[perm[a]][perm[b]] = perm[d.add[a][b]];
      out.mul[perm[a]][perm[b]] = perm[d.mul[a][b]];
    }
  }
  return out;
}

}  // namespace

AxiomReport check_semiring_axioms(const SemiringData& d) {
  check_structure(d);
  const int n = d.size;
  const auto& A = d.add;
  const auto& M = d.mul;
  const int z = d.zero, o = d.one;
  AxiomReport rep;
  auto fail = [&rep](const char* axiom, int a, int b, int c) {
    rep.violations.push_back({axiom, {a, b, c}});
  };

  if (z == o) fail("zero-one-distinct", z, o, -1);

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
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int c = 0; c < n; ++c)
          if (M[M[a][b]][c] != M[a][M[b][c]]) {
            fail("mul-associativity", a, b, c);
            return;
          }
  }();
  [&] {
    for (int a = 0; a < n; ++a)
      if (M[a][o] != a || M[o][a] != a) {
        fail("mul-identity", a, -1, -1);
        return;
      }
  }();
  [&] {
    for (int a = 0; a < n; ++a)
      if (M[a][z] != z || M[z][a] != z) {
        fail("annihilation", a, -1, -1);
        return;
      }
  }();
  [&] {
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int c = 0; c < n; ++c)
          if (M[a][A[b][c]] != A[M[a][b]][M[a][c]]) {
            fail("left-distributivity", a, b, c);
            return;
          }
  }();
  [&] {
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int c = 0; c < n; ++c)
          if (M[A[a][b]][c] != A[M[a][c]][M[b][c]]) {
            fail("right-distributivity", a, b, c);
            return;
          }
  }();

  rep.passed = rep.violations.empty();
  return rep;
}

FiniteSemiring FiniteSemiring::validate(SemiringData raw) {
  AxiomReport rep = check_semiring_axioms(raw);
  if (!rep.passed)
    throw validation_error(
        "semiring axioms failed, first: " + rep.violations.front().axiom,
        std::move(rep));
  if (raw.element_labels.empty()) {
    raw.element_labels.resize(raw.size);
    for (int a = 0; a < raw.size; ++a) raw.element_labels[a] = std::to_string(a);
  }
  return FiniteSemiring(canonicalize(raw));
}

bool FiniteSemiring::same_tables(const FiniteSemiring& other) const {
  return data_.size == other.data_.size && data_.add == other.data_.add &&
         data_.mul == other.data_.mul;
}

FiniteSemiring build_bni(int n, int i) {
  if (n < 2) throw parameter_error("bni needs n >= 2");
  if (i < 0 || i >= n) throw parameter_error("bni needs 0 <= i < n");
  auto fold = [n, i](long long x) -> int {
    if (x < n) return static_cast<int>(x);
    return static_cast<int>(i + (x - i) % (n - i));
  };
  SemiringData d;
  d.size = n;
  d.zero = 0;
  d.one = 1;
  d.label = "B(" + std::to_string(n) + "," + std::to_string(i) + ")";
  d.add.assign(n, std::vector<int>(n, 0));
  d.mul.assign(n, std::vector<int>(n, 0));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      d.add[a][b] = fold(static_cast<long long>(a) + b);
      d.mul[a][b] = fold(static_cast<long long>(a) * b);
    }
  return FiniteSemiring::validate(std::move(d));
}

FiniteSemiring build_named(const std::string& family, int n, int i) {
  if (family == "boolean") {
    SemiringData d = build_bni(2, 1).data();
    d.label = "B";
    return FiniteSemiring::validate(std::move(d));
  }
  if (family == "zmod") {
    SemiringData d = build_bni(n, 0).data();
    d.label = "Z_" + std::to_string(n);
    return FiniteSemiring::validate(std::move(d));
  }
  if (family == "chain-lattice") {
    if (n < 2) throw parameter_error("chain-lattice needs n >= 2");
    SemiringData d;
    d.size = n;
    d.zero = 0;
    d.one = n - 1;
    d.label = "C_" + std::to_string(n);
    d.add.assign(n, std::vector<int>(n, 0));
    d.mul.assign(n, std::vector<int>(n, 0));
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) {
        d.add[a][b] = std::max(a, b);
        d.mul[a][b] = std::min(a, b);
      }
    return FiniteSemiring::validate(std::move(d));
  }
  if (family == "bni") return build_bni(n, i);
  throw parameter_error("unknown semiring family: " + family);
}

FiniteSemiring product_semiring(const std::vector<SemiringPtr>& factors,
                                const Caps& caps) {
  if (factors.empty()) throw parameter_error("product needs at least one factor");
  long long total = 1;
  for (const auto& f : factors) {
    total *= f->size();
    if (total > caps.semiring_size)
      throw resource_error("product size exceeds semiring cap");
  }
  const int n = static_cast<int>(total);
  const int k = static_cast<int>(factors.size());

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

  SemiringData d;
  d.size = n;
  d.add.assign(n, std::vector<int>(n, 0));
  d.mul.assign(n, std::vector<int>(n, 0));
  {
    std::string lbl;
    for (int j = 0; j < k; ++j) {
      if (j) lbl += " x ";
      lbl += factors[j]->label();
    }
    d.label = lbl;
  }
  d.element_labels.resize(n);
  std::vector<int> zero_digits(k), one_digits(k);
  for (int j = 0; j < k; ++j) {
    zero_digits[j] = factors[j]->zero();
    one_digits[j] = factors[j]->one();
  }
  d.zero = compose(zero_digits);
  d.one = compose(one_digits);

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
      std::vector<int> s(k), p(k);
      for (int j = 0; j < k; ++j) {
        s[j] = factors[j]->add(dx[j], dy[j]);
        p[j] = factors[j]->mul(dx[j], dy[j]);
      }
      d.add[x][y] = compose(s);
      d.mul[x][y] = compose(p);
    }
  }
  return FiniteSemiring::validate(std::move(d));
}

FiniteSemiring matrix_semiring(const SemiringPtr& base, int n, const Caps& caps) {
  if (n < 1) throw parameter_error("matrix dimension must be >= 1");
  const int s = base->size();
  const int cells = n * n;
  long long total = 1;
  for (int j = 0; j < cells; ++j) {
    total *= s;
    if (total > caps.semiring_size)
      throw resource_error("matrix semiring size exceeds semiring cap");
  }
  const int N = static_cast<int>(total);

  // Entry (r,c) is digit r*n+c of the index, most significant first, so the
  // zero matrix is index 0 and index order is lexicographic on entries.
  auto decompose = [&](int idx) {
    std::vector<int> m(cells);
    for (int j = cells - 1; j >= 0; --j) {
      m[j] = idx % s;
      idx /= s;
    }
    return m;
  };
  auto compose = [&](const std::vector<int>& m) {
    int idx = 0;
    for (int j = 0; j < cells; ++j) idx = idx * s + m[j];
    return idx;
  };

  SemiringData d;
  d.size = N;
  d.add.assign(N, std::vector<int>(N, 0));
  d.mul.assign(N, std::vector<int>(N, 0));
  d.label = "M_" + std::to_string(n) + "(" + base->label() + ")";
  d.element_labels.resize(N);

  std::vector<int> id(cells, base->zero());
  for (int r = 0; r < n; ++r) id[r * n + r] = base->one();
  d.zero = 0;
  d.one = compose(id);

  for (int x = 0; x < N; ++x) {
    auto mx = decompose(x);
    std::string lbl = "[";
    for (int r = 0; r < n; ++r) {
      lbl += "[";
      for (int c = 0; c < n; ++c) {
        if (c) lbl += ",";
        lbl += base->element_label(mx[r * n + c]);
      }
      lbl += "]";
    }
    d.element_labels[x] = lbl + "]";
    for (int y = 0; y < N; ++y) {
      auto my = decompose(y);
      std::vector<int> sum(cells), prod(cells);
      for (int j = 0; j < cells; ++j) sum[j] = base->add(mx[j], my[j]);
      for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) {
          int acc = base->zero();
          for (int t = 0; t < n; ++t)
            acc = base->add(acc, base->mul(mx[r * n + t], my[t * n + c]));
          prod[r * n + c] = acc;
        }
      d.add[x][y] = compose(sum);
      d.mul[x][y] = compose(prod);
    }
  }
  return FiniteSemiring::validate(std::move(d));
}

std::vector<std::pair<int, int>> complemented_pairs(const FiniteSemiring& s) {
  std::vector<std::pair<int, int>> out;
  const int n = s.size();
  for (int t = 0; t < n; ++t)
    for (int u = 0; u < n; ++u)
      if (s.add(t, u) == s.one() && s.mul(t, u) == s.zero() &&
          s.mul(u, t) == s.zero())
        out.emplace_back(t, u);
  return out;
}

bool is_additively_idempotent(const FiniteSemiring& s) {
  for (int a = 0; a < s.size(); ++a)
    if (s.add(a, a) != a) return false;
  return true;
}

bool has_additive_inverses(const FiniteSemiring& s) {
  for (int a = 0; a < s.size(); ++a) {
    bool found = false;
    for (int b = 0; b < s.size() && !found; ++b)
      if (s.add(a, b) == s.zero()) found = true;
    if (!found) return false;
  }
  return true;
}

}  // namespace kideal

#include "kideal/mat2.hpp"

#include <algorithm>
#include <utility>

#include "kideal/errors.hpp"

namespace kideal {

std::string Mat2::str() const {
  return "[[" + a.str() + ", " + c.str() + "], [" + b.str() + ", " + d.str() +
         "]]";
}

Mat2 mat2_zero() { return Mat2{}; }

Mat2 mat2_identity() {
  Mat2 m;
  m.a = QPlus::one();
  m.d = QPlus::one();
  return m;
}

Mat2 mat2_add(const Mat2& x, const Mat2& y) {
  return Mat2{x.a + y.a, x.b + y.b, x.c + y.c, x.d + y.d};
}

Mat2 mat2_mul(const Mat2& x, const Mat2& y) {
  Mat2 r;
  r.a = x.a * y.a + x.c * y.b;
  r.c = x.a * y.c + x.c * y.d;
  r.b = x.b * y.a + x.d * y.b;
  r.d = x.b * y.c + x.d * y.d;
  return r;
}

std::optional<Mat2> mat2_try_sub(const Mat2& x, const Mat2& y) {
  auto da = x.a.try_sub(y.a);
  auto db = x.b.try_sub(y.b);
  auto dc = x.c.try_sub(y.c);
  auto dd = x.d.try_sub(y.d);
  if (!da || !db || !dc || !dd) return std::nullopt;
  return Mat2{*da, *db, *dc, *dd};
}

std::string IdealFamily::str() const {
  switch (tag) {
    case Tag::zero:
      return "Zero";
    case Tag::e1:
      return "E1";
    case Tag::e2:
      return "E2";
    case Tag::n:
      return "N(" + r.str() + ")";
    case Tag::n_geq:
      return "NGeq(" + r.str() + ")";
    case Tag::full:
      return "Full";
  }
  throw error("unreachable family tag");
}

IdealFamily zero_family() { return IdealFamily{IdealFamily::Tag::zero, {}}; }
IdealFamily e1_family() { return IdealFamily{IdealFamily::Tag::e1, {}}; }
IdealFamily e2_family() { return IdealFamily{IdealFamily::Tag::e2, {}}; }
IdealFamily full_family() { return IdealFamily{IdealFamily::Tag::full, {}}; }

IdealFamily n_family(const QPlus& r) {
  if (r.is_zero())
    throw parameter_error("the ratio of an N family must be positive");
  return IdealFamily{IdealFamily::Tag::n, r};
}

IdealFamily n_geq_family(const QPlus& r) {
  if (r.is_zero())
    throw parameter_error("the threshold of an NGeq family must be positive");
  return IdealFamily{IdealFamily::Tag::n_geq, r};
}

bool ideal_membership(const IdealFamily& fam, const Mat2& x) {
  switch (fam.tag) {
    case IdealFamily::Tag::zero:
      return x.is_zero();
    case IdealFamily::Tag::e1:
      return x.c.is_zero() && x.d.is_zero();
    case IdealFamily::Tag::e2:
      return x.a.is_zero() && x.b.is_zero();
    case IdealFamily::Tag::n:
      return x.a == fam.r * x.c && x.b == fam.r * x.d;
    case IdealFamily::Tag::n_geq:
      return x.c >= fam.r * x.a && x.d >= fam.r * x.b;
    case IdealFamily::Tag::full:
      return true;
  }
  throw error("unreachable family tag");
}

bool family_subset(const IdealFamily& f, const IdealFamily& g) {
  using Tag = IdealFamily::Tag;
  if (f.tag == Tag::zero || g.tag == Tag::full) return true;
  if (f.tag == Tag::full || g.tag == Tag::zero) return false;
  switch (f.tag) {
    case Tag::e1:
      // [[1,0],[0,0]] separates E1 from everything else.
      return g.tag == Tag::e1;
    case Tag::e2:
      // A zero left column meets every NGeq threshold vacuously.
      return g.tag == Tag::e2 || g.tag == Tag::n_geq;
    case Tag::n:
      // [[r,1],[0,0]] pins the ratio, and N(r) inside NGeq(s) needs
      // c >= s*r*c for all c, i.e. s <= 1/r, tight at s = 1/r.
      if (g.tag == Tag::n) return g.r == f.r;
      if (g.tag == Tag::n_geq) return g.r <= f.r.reciprocal();
      return false;
    case Tag::n_geq:
      // Thresholds compare pointwise; [[1,r],[0,0]] is tight.
      return g.tag == Tag::n_geq && g.r <= f.r;
    default:
      throw error("unreachable family tag");
  }
}

bool family_is_subtractive(const IdealFamily& fam) {
  // Zero, E1, E2 and N(r) are cut out by equations between entries, and
  // sums of nonnegative rationals cancel, so they absorb differences.
  // Full trivially does.  NGeq(r) is cut out by inequalities and loses
  // [[1,0],[0,0]] = [[1,r],[0,0]] - [[0,r],[0,0]].
  return fam.tag != IdealFamily::Tag::n_geq;
}

QPlus Mat2Sampler::rational() {
  std::uniform_int_distribution<long long> numerator(0, 100);
  std::uniform_int_distribution<long long> denominator(1, 100);
  long long p = numerator(rng_);
  long long q = denominator(rng_);
  return QPlus(p, q);
}

Mat2 Mat2Sampler::matrix() {
  Mat2 m;
  m.a = rational();
  m.b = rational();
  m.c = rational();
  m.d = rational();
  return m;
}

Mat2 Mat2Sampler::member(const IdealFamily& fam) {
  using Tag = IdealFamily::Tag;
  Mat2 m;
  switch (fam.tag) {
    case Tag::zero:
      return m;
    case Tag::e1:
      m.a = rational();
      m.b = rational();
      return m;
    case Tag::e2:
      m.c = rational();
      m.d = rational();
      return m;
    case Tag::n:
      m.c = rational();
      m.d = rational();
      m.a = fam.r * m.c;
      m.b = fam.r * m.d;
      return m;
    case Tag::n_geq:
      m.a = rational();
      m.b = rational();
      m.c = fam.r * m.a + rational();
      m.d = fam.r * m.b + rational();
      return m;
    case Tag::full:
      return matrix();
  }
  throw error("unreachable family tag");
}

std::optional<ClosureWitness> closure_witness_search(const IdealFamily& fam,
                                                     int trials,
                                                     unsigned long long seed) {
  if (trials < 1)
    throw parameter_error("witness search needs at least one trial");
  if (fam.tag == IdealFamily::Tag::n_geq) {
    // Known failure shape, verified exactly before it is reported.
    ClosureWitness w;
    w.outside = Mat2{QPlus::one(), {}, {}, {}};
    w.member = Mat2{{}, {}, fam.r, {}};
    w.sum = Mat2{QPlus::one(), {}, fam.r, {}};
    if (mat2_add(w.outside, w.member) == w.sum &&
        ideal_membership(fam, w.member) && ideal_membership(fam, w.sum) &&
        !ideal_membership(fam, w.outside))
      return w;
  }
  Mat2Sampler sampler(seed);
  for (int t = 0; t < trials; ++t) {
    Mat2 sum = sampler.member(fam);
    Mat2 inside = sampler.member(fam);
    auto rest = mat2_try_sub(sum, inside);
    if (!rest || ideal_membership(fam, *rest)) continue;
    return ClosureWitness{*rest, inside, sum};
  }
  return std::nullopt;
}

SamplerVerdict closure_law_sampler(const IdealFamily& fam, int trials,
                                   unsigned long long seed) {
  if (trials < 1)
    throw parameter_error("the closure law sampler needs at least one trial");
  Mat2Sampler sampler(seed);
  SamplerVerdict v;
  for (int t = 0; t < trials; ++t) {
    Mat2 s = sampler.matrix();
    Mat2 x = sampler.member(fam);
    Mat2 y = sampler.member(fam);
    Mat2 combined = mat2_add(mat2_mul(s, x), y);
    v.trials = t + 1;
    if (!ideal_membership(fam, combined)) {
      v.counterexample = combined;
      return v;
    }
  }
  v.passed = true;
  return v;
}

bool verify_derivation(const std::vector<Mat2>& gens,
                       const std::vector<DerivationStep>& steps) {
  for (std::size_t i = 0; i < steps.size(); ++i) {
    const DerivationStep& s = steps[i];
    if (s.by_subtraction) {
      if (!s.terms.empty()) return false;
      if (s.addend < 0 || s.addend >= static_cast<int>(i)) return false;
      if (s.minuend < 0 || s.minuend >= static_cast<int>(i)) return false;
      if (!(mat2_add(s.result, steps[s.addend].result) ==
            steps[s.minuend].result))
        return false;
      continue;
    }
    if (s.terms.empty()) return false;
    Mat2 total = mat2_zero();
    for (const DerivationTerm& term : s.terms) {
      const Mat2* source = nullptr;
      if (term.from_step) {
        if (term.index < 0 || term.index >= static_cast<int>(i)) return false;
        source = &steps[term.index].result;
      } else {
        if (term.index < 0 || term.index >= static_cast<int>(gens.size()))
          return false;
        source = &gens[term.index];
      }
      total = mat2_add(total, mat2_mul(term.factor, *source));
    }
    if (!(total == s.result)) return false;
  }
  return true;
}

namespace {

// A nonzero generator row, remembered by where it came from.
struct RowTag {
  IdealFamily::Tag tag;
  QPlus ratio;       // for Tag::n
  int gen = 0;       // generator index
  bool bottom = false;
  QPlus k, l;        // the row itself

  bool same_family(const RowTag& o) const {
    return tag == o.tag && (tag != IdealFamily::Tag::n || ratio == o.ratio);
  }
};

Mat2 row_matrix(const QPlus& k, const QPlus& l) {
  return Mat2{k, {}, l, {}};
}

Mat2 scale_matrix(const QPlus& s) { return Mat2{s, {}, {}, {}}; }

// P*g keeps the top row ([[1,0],[0,0]]) or raises the bottom row
// ([[0,1],[0,0]]), landing [[k,l],[0,0]] on the top with zeros below.
Mat2 row_selector(bool bottom) {
  Mat2 p;
  if (bottom)
    p.c = QPlus::one();
  else
    p.a = QPlus::one();
  return p;
}

// Appends the extract + normalize pair for one tagged row; returns the
// index of the normalized step, whose result is the tag's canonical
// generator ([[1,0],[0,0]], [[0,1],[0,0]] or [[r,1],[0,0]]).
int emit_canonical(const RowTag& row, std::vector<DerivationStep>& steps) {
  DerivationStep extract;
  extract.result = row_matrix(row.k, row.l);
  extract.terms.push_back({row_selector(row.bottom), false, row.gen});
  extract.note = row.bottom ? "select the bottom row of a generator"
                            : "select the top row of a generator";
  steps.push_back(std::move(extract));
  int extracted = static_cast<int>(steps.size()) - 1;

  QPlus divisor = row.l.is_zero() ? row.k : row.l;
  DerivationStep normalize;
  switch (row.tag) {
    case IdealFamily::Tag::e1:
      normalize.result = row_matrix(QPlus::one(), {});
      break;
    case IdealFamily::Tag::e2:
      normalize.result = row_matrix({}, QPlus::one());
      break;
    default:
      normalize.result = row_matrix(row.ratio, QPlus::one());
      break;
  }
  normalize.terms.push_back(
      {scale_matrix(divisor.reciprocal()), true, extracted});
  normalize.note = "rescale the row";
  steps.push_back(std::move(normalize));
  return static_cast<int>(steps.size()) - 1;
}

}  // namespace

Classification classify_k_closure(const std::vector<Mat2>& gens) {
  if (gens.empty())
    throw parameter_error("classification needs at least one generator");

  // Distinct row shapes in scan order, generators first, top row before
  // bottom.  Zero rows constrain nothing and are skipped.
  std::vector<RowTag> distinct;
  for (int gi = 0; gi < static_cast<int>(gens.size()); ++gi) {
    const Mat2& g = gens[gi];
    const std::pair<QPlus, QPlus> rows[2] = {{g.a, g.c}, {g.b, g.d}};
    for (int ri = 0; ri < 2; ++ri) {
      const QPlus& k = rows[ri].first;
      const QPlus& l = rows[ri].second;
      if (k.is_zero() && l.is_zero()) continue;
      RowTag tag;
      if (l.is_zero())
        tag.tag = IdealFamily::Tag::e1;
      else if (k.is_zero())
        tag.tag = IdealFamily::Tag::e2;
      else {
        tag.tag = IdealFamily::Tag::n;
        tag.ratio = k / l;
      }
      tag.gen = gi;
      tag.bottom = ri == 1;
      tag.k = k;
      tag.l = l;
      bool seen = false;
      for (const RowTag& d : distinct)
        if (d.same_family(tag)) {
          seen = true;
          break;
        }
      if (!seen) distinct.push_back(tag);
    }
  }

  Classification out;
  if (distinct.empty()) {
    out.family = zero_family();
  } else if (distinct.size() == 1) {
    switch (distinct[0].tag) {
      case IdealFamily::Tag::e1:
        out.family = e1_family();
        out.canonical_generators = {row_matrix(QPlus::one(), {})};
        break;
      case IdealFamily::Tag::e2:
        out.family = e2_family();
        out.canonical_generators = {row_matrix({}, QPlus::one())};
        break;
      default:
        out.family = n_family(distinct[0].ratio);
        out.canonical_generators = {
            row_matrix(distinct[0].ratio, QPlus::one())};
        break;
    }
    emit_canonical(distinct[0], out.derivation);
  } else {
    // Two distinct row shapes already force the whole semiring: derive
    // [[1,0],[0,0]] and [[0,1],[0,0]] from the first two and the closure
    // law fills in the rest.
    out.family = full_family();
    out.canonical_generators = {row_matrix(QPlus::one(), {}),
                                row_matrix({}, QPlus::one())};
    RowTag first = distinct[0];
    RowTag second = distinct[1];
    // Order the pair so the join case analysis below sees e1 before e2
    // before n, and the smaller ratio first among two n tags.
    auto rank = [](const RowTag& t) {
      switch (t.tag) {
        case IdealFamily::Tag::e1:
          return 0;
        case IdealFamily::Tag::e2:
          return 1;
        default:
          return 2;
      }
    };
    if (rank(second) < rank(first) ||
        (rank(first) == 2 && rank(second) == 2 && second.ratio < first.ratio))
      std::swap(first, second);

    std::vector<DerivationStep>& steps = out.derivation;
    int left = emit_canonical(first, steps);
    int right = emit_canonical(second, steps);
    using Tag = IdealFamily::Tag;
    if (first.tag == Tag::e1 && second.tag == Tag::e2) {
      // Both canonical generators already sit in the step list.
    } else if (first.tag == Tag::e1) {
      // Have u = [[1,0],[0,0]] and w = [[r,1],[0,0]]; then
      // [[0,1],[0,0]] + r*u = w.
      const QPlus& r = second.ratio;
      DerivationStep comb;
      comb.result = row_matrix(r, {});
      comb.terms.push_back({scale_matrix(r), true, left});
      comb.note = "left column at ratio r";
      steps.push_back(std::move(comb));
      DerivationStep sub;
      sub.result = row_matrix({}, QPlus::one());
      sub.by_subtraction = true;
      sub.addend = static_cast<int>(steps.size()) - 1;
      sub.minuend = right;
      sub.note = "cancel the left column";
      steps.push_back(std::move(sub));
    } else if (first.tag == Tag::e2) {
      // Have v = [[0,1],[0,0]] and w = [[r,1],[0,0]]; scale both by 1/r:
      // [[1,0],[0,0]] + (1/r)*v = (1/r)*w.
      const QPlus& r = second.ratio;
      QPlus inv = r.reciprocal();
      DerivationStep comb_v;
      comb_v.result = row_matrix({}, inv);
      comb_v.terms.push_back({scale_matrix(inv), true, left});
      comb_v.note = "right column shrunk by 1/r";
      steps.push_back(std::move(comb_v));
      int small_v = static_cast<int>(steps.size()) - 1;
      DerivationStep comb_w;
      comb_w.result = row_matrix(QPlus::one(), inv);
      comb_w.terms.push_back({scale_matrix(inv), true, right});
      comb_w.note = "ratio row shrunk by 1/r";
      steps.push_back(std::move(comb_w));
      DerivationStep sub;
      sub.result = row_matrix(QPlus::one(), {});
      sub.by_subtraction = true;
      sub.addend = small_v;
      sub.minuend = static_cast<int>(steps.size()) - 1;
      sub.note = "cancel the right column";
      steps.push_back(std::move(sub));
    } else {
      // Two ratio rows r < s.  With T = 1/(s - r):
      // [[1,0],[0,0]] + T*w_r = T*w_s, since 1 + rT = sT exactly.
      const QPlus& r = first.ratio;
      const QPlus& s = second.ratio;
      auto gap = s.try_sub(r);
      if (!gap || gap->is_zero())
        throw error("ratio rows out of order in the join derivation");
      QPlus t = gap->reciprocal();
      DerivationStep comb_r;
      comb_r.result = row_matrix(r * t, t);
      comb_r.terms.push_back({scale_matrix(t), true, left});
      comb_r.note = "small ratio row scaled to the gap";
      steps.push_back(std::move(comb_r));
      int scaled_r = static_cast<int>(steps.size()) - 1;
      DerivationStep comb_s;
      comb_s.result = row_matrix(s * t, t);
      comb_s.terms.push_back({scale_matrix(t), true, right});
      comb_s.note = "large ratio row scaled to the gap";
      steps.push_back(std::move(comb_s));
      DerivationStep sub_u;
      sub_u.result = row_matrix(QPlus::one(), {});
      sub_u.by_subtraction = true;
      sub_u.addend = scaled_r;
      sub_u.minuend = static_cast<int>(steps.size()) - 1;
      sub_u.note = "the scaled rows differ by the unit row";
      steps.push_back(std::move(sub_u));
      int unit = static_cast<int>(steps.size()) - 1;
      DerivationStep comb_u;
      comb_u.result = row_matrix(r, {});
      comb_u.terms.push_back({scale_matrix(r), true, unit});
      comb_u.note = "left column at ratio r";
      steps.push_back(std::move(comb_u));
      DerivationStep sub_v;
      sub_v.result = row_matrix({}, QPlus::one());
      sub_v.by_subtraction = true;
      sub_v.addend = static_cast<int>(steps.size()) - 1;
      sub_v.minuend = left;
      sub_v.note = "cancel the left column";
      steps.push_back(std::move(sub_v));
    }
  }

  out.generators_inside = true;
  for (const Mat2& g : gens)
    if (!ideal_membership(out.family, g)) out.generators_inside = false;
  out.derivation_checks = verify_derivation(gens, out.derivation);

  // Random left combinations of the inputs must satisfy the predicate too;
  // fixed seed keeps the report reproducible.
  Mat2Sampler sampler(0x5eed);
  out.sampled_combinations_inside = true;
  for (int t = 0; t < 64; ++t) {
    Mat2 total = mat2_zero();
    for (const Mat2& g : gens)
      total = mat2_add(total, mat2_mul(sampler.matrix(), g));
    if (!ideal_membership(out.family, total))
      out.sampled_combinations_inside = false;
  }
  return out;
}

bool threshold_ideal_member(long long k, long long n) {
  return n == 0 || n >= k;
}

ChainDemo chain_demo(const std::string& kind, int depth) {
  if (depth < 2)
    throw parameter_error("a chain demonstration needs depth at least 2");
  std::string name = kind;
  if (name == "ngeq-desc") name = "threshold-descending";
  if (name == "ngeq-asc") name = "threshold-ascending";
  ChainDemo demo;
  demo.kind = name;
  demo.depth = depth;
  if (name == "threshold-descending") {
    // NGeq(1) > NGeq(2) > ...: raising the threshold cuts the set down,
    // and [[1,m],[0,0]] meets threshold m but not m+1.
    for (int m = 1; m < depth; ++m) {
      IdealFamily larger = n_geq_family(QPlus::from_integer(m));
      IdealFamily smaller = n_geq_family(QPlus::from_integer(m + 1));
      Mat2 w = Mat2{QPlus::one(), {}, QPlus::from_integer(m), {}};
      ChainSeparation sep;
      sep.larger = larger.str();
      sep.smaller = smaller.str();
      sep.witness = w.str();
      sep.verified = family_subset(smaller, larger) &&
                     ideal_membership(larger, w) &&
                     !ideal_membership(smaller, w);
      demo.separations.push_back(std::move(sep));
    }
  } else if (name == "threshold-ascending") {
    // NGeq(1) < NGeq(1/2) < ...: lowering the threshold lets more in,
    // and [[m+1,1],[0,0]] clears 1/(m+1) exactly but not 1/m.
    for (int m = 1; m < depth; ++m) {
      IdealFamily smaller = n_geq_family(QPlus(1, m));
      IdealFamily larger = n_geq_family(QPlus(1, m + 1));
      Mat2 w = Mat2{QPlus::from_integer(m + 1), {}, QPlus::one(), {}};
      ChainSeparation sep;
      sep.larger = larger.str();
      sep.smaller = smaller.str();
      sep.witness = w.str();
      sep.verified = family_subset(smaller, larger) &&
                     ideal_membership(larger, w) &&
                     !ideal_membership(smaller, w);
      demo.separations.push_back(std::move(sep));
    }
  } else if (name == "integer-thresholds") {
    // Over the nonnegative integers, I(k) = {0, k, k+1, ...} is an ideal
    // and the chain I(1) > I(2) > ... never stops.  I(j) lies in I(k)
    // exactly when k <= j, so inclusion and separation are both decided
    // by the thresholds; the witness m sits in I(m) but not I(m+1).
    for (int m = 1; m < depth; ++m) {
      ChainSeparation sep;
      sep.larger = "I(" + std::to_string(m) + ")";
      sep.smaller = "I(" + std::to_string(m + 1) + ")";
      sep.witness = std::to_string(m);
      sep.verified = threshold_ideal_member(m, m) &&
                     !threshold_ideal_member(m + 1, m) &&
                     threshold_ideal_member(m, m + 1);
      demo.separations.push_back(std::move(sep));
    }
  } else {
    throw parameter_error(
        "unknown chain kind: " + kind +
        " (use threshold-descending, threshold-ascending or "
        "integer-thresholds)");
  }
  demo.all_strict = true;
  for (const ChainSeparation& sep : demo.separations)
    if (!sep.verified) demo.all_strict = false;
  return demo;
}

}  // namespace kideal

#include "kideal/morphism.hpp"

#include <algorithm>
#include <numeric>

namespace kideal {

namespace {

std::string table_label(const std::vector<int>& image) {
  std::string out = "[";
  for (size_t i = 0; i < image.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(image[i]);
  }
  return out + "]";
}

// Fixpoint propagation from a partial assignment: every sum and scalar
// multiple of assigned elements gets a forced value.  A conflict means no
// linear map extends the assignment; full coverage yields the unique map
// determined by it.  At fixpoint one complete consistency pass has run, so
// a fully assigned table is already verified.
std::optional<std::vector<int>> propagate(const FiniteSemimodule& D,
                                          const FiniteSemimodule& C,
                                          std::vector<int> value) {
  if (value[D.zero()] == -1)
    value[D.zero()] = C.zero();
  else if (value[D.zero()] != C.zero())
    return std::nullopt;

  const int ns = D.scalars()->size();
  bool changed = true;
  while (changed) {
    changed = false;
    for (int a = 0; a < D.size(); ++a) {
      if (value[a] == -1) continue;
      for (int b = a; b < D.size(); ++b) {
        if (value[b] == -1) continue;
        int c = D.add(a, b);
        int want = C.add(value[a], value[b]);
        if (value[c] == -1)
          value[c] = want, changed = true;
        else if (value[c] != want)
          return std::nullopt;
      }
      for (int s = 0; s < ns; ++s) {
        int c = D.act(s, a);
        int want = C.act(s, value[a]);
        if (value[c] == -1)
          value[c] = want, changed = true;
        else if (value[c] != want)
          return std::nullopt;
      }
    }
  }
  return value;
}

void require_common_scalars(const ModulePtr& a, const ModulePtr& b) {
  if (!a->scalars()->same_tables(*b->scalars()))
    throw precondition_error("modules do not share a scalar semiring");
}

long long checked_search_size(int base, size_t exponent, const Caps& caps) {
  long long count = 1;
  for (size_t i = 0; i < exponent; ++i) {
    count *= base;
    if (count > caps.hom_search)
      throw resource_error("hom search space " + std::to_string(base) + "^" +
                           std::to_string(exponent) + " exceeds cap " +
                           std::to_string(caps.hom_search));
  }
  return count;
}

}  // namespace

LinearMap linear_map(ModulePtr domain, ModulePtr codomain,
                     std::vector<int> image, std::string label) {
  if (!domain || !codomain) throw parameter_error("linear map needs two modules");
  require_common_scalars(domain, codomain);
  if (static_cast<int>(image.size()) != domain->size())
    throw structural_error("value table size does not match the domain");
  for (int v : image)
    if (v < 0 || v >= codomain->size())
      throw structural_error("value table entry out of range");
  if (image[domain->zero()] != codomain->zero())
    throw precondition_error("map does not send zero to zero");
  for (int a = 0; a < domain->size(); ++a)
    for (int b = a; b < domain->size(); ++b)
      if (image[domain->add(a, b)] != codomain->add(image[a], image[b]))
        throw precondition_error("map is not additive at (" +
                                 std::to_string(a) + "," + std::to_string(b) +
                                 ")");
  for (int s = 0; s < domain->scalars()->size(); ++s)
    for (int a = 0; a < domain->size(); ++a)
      if (image[domain->act(s, a)] != codomain->act(s, image[a]))
        throw precondition_error("map does not commute with scalar " +
                                 std::to_string(s) + " at " +
                                 std::to_string(a));
  LinearMap f;
  f.domain = std::move(domain);
  f.codomain = std::move(codomain);
  f.label = label.empty() ? table_label(image) : std::move(label);
  f.image = std::move(image);
  return f;
}

LinearMap identity_map(const ModulePtr& m) {
  std::vector<int> image(m->size());
  std::iota(image.begin(), image.end(), 0);
  return linear_map(m, m, std::move(image), "id");
}

LinearMap zero_map(const ModulePtr& domain, const ModulePtr& codomain) {
  return linear_map(domain, codomain,
                    std::vector<int>(domain->size(), codomain->zero()), "0");
}

LinearMap inclusion_map(const Subsemimodule& sub) {
  // submodule_restrict keeps member order, so local index i is members[i].
  return linear_map(submodule_restrict(sub), sub.parent, sub.members, "incl");
}

LinearMap quotient_map(const BourneQuotient& q) {
  return linear_map(q.parent, q.quotient, q.projection, "proj");
}

LinearMap compose(const LinearMap& g, const LinearMap& f) {
  if (!g.domain->same_tables(*f.codomain))
    throw precondition_error("composition needs matching middle modules");
  std::vector<int> image(f.domain->size());
  for (int m = 0; m < f.domain->size(); ++m) image[m] = g.image[f.image[m]];
  return linear_map(f.domain, g.codomain, std::move(image),
                    g.label + "." + f.label);
}

MapInvariants map_invariants(const LinearMap& f) {
  std::vector<int> ker, im;
  std::vector<char> hit(f.codomain->size(), 0);
  for (int m = 0; m < f.domain->size(); ++m) {
    if (f.image[m] == f.codomain->zero()) ker.push_back(m);
    hit[f.image[m]] = 1;
  }
  for (int x = 0; x < f.codomain->size(); ++x)
    if (hit[x]) im.push_back(x);

  MapInvariants out{subsemimodule(f.domain, std::move(ker)),
                    subsemimodule(f.codomain, std::move(im)), {}};
  out.image_closure = subtractive_closure(out.image);
  return out;
}

bool is_injective_map(const LinearMap& f) {
  std::vector<char> hit(f.codomain->size(), 0);
  for (int v : f.image) {
    if (hit[v]) return false;
    hit[v] = 1;
  }
  return true;
}

bool is_surjective_map(const LinearMap& f) {
  std::vector<char> hit(f.codomain->size(), 0);
  for (int v : f.image) hit[v] = 1;
  return std::find(hit.begin(), hit.end(), 0) == hit.end();
}

NormalityReport normality(const LinearMap& f) {
  const FiniteSemimodule& D = *f.domain;
  NormalityReport rep;

  std::vector<int> ker;
  for (int m = 0; m < D.size(); ++m)
    if (f.image[m] == f.codomain->zero()) ker.push_back(m);

  // reach[m] = {m + k : k in ker f}.
  std::vector<std::vector<char>> reach(D.size(),
                                       std::vector<char>(D.size(), 0));
  for (int m = 0; m < D.size(); ++m)
    for (int k : ker) reach[m][D.add(m, k)] = 1;

  rep.k_normal = true;
  for (int m = 0; m < D.size() && rep.k_normal; ++m)
    for (int m2 = m + 1; m2 < D.size() && rep.k_normal; ++m2) {
      if (f.image[m] != f.image[m2]) continue;
      bool met = false;
      for (int x = 0; x < D.size() && !met; ++x)
        if (reach[m][x] && reach[m2][x]) met = true;
      if (!met) {
        rep.k_normal = false;
        rep.k_witness = {m, m2};
      }
    }

  MapInvariants inv = map_invariants(f);
  rep.i_normal = inv.image.members == inv.image_closure.members;
  if (!rep.i_normal)
    for (int x : inv.image_closure.members)
      if (!inv.image.contains(x)) {
        rep.i_witness = x;
        break;
      }
  return rep;
}

SequenceVerdict check_exact(const std::vector<LinearMap>& maps) {
  if (maps.size() < 2)
    throw parameter_error("exactness needs at least two maps");
  for (size_t i = 0; i + 1 < maps.size(); ++i)
    if (!maps[i].codomain->same_tables(*maps[i + 1].domain))
      throw precondition_error("maps do not compose at junction " +
                               std::to_string(i));

  SequenceVerdict verdict;
  verdict.exact = true;
  for (size_t i = 0; i + 1 < maps.size(); ++i) {
    const LinearMap& in = maps[i];
    const LinearMap& out = maps[i + 1];
    JunctionReport jr;

    std::vector<char> im(in.codomain->size(), 0);
    for (int v : in.image) im[v] = 1;
    std::vector<char> ker(out.domain->size(), 0);
    for (int m = 0; m < out.domain->size(); ++m)
      if (out.image[m] == out.codomain->zero()) ker[m] = 1;

    jr.image_equals_kernel = im == ker;
    if (!jr.image_equals_kernel)
      for (size_t x = 0; x < im.size(); ++x)
        if (im[x] != ker[x]) {
          jr.mismatch_witness = static_cast<int>(x);
          break;
        }
    jr.outgoing_k_normal = normality(out).k_normal;
    verdict.exact = verdict.exact && jr.exact();
    verdict.junctions.push_back(jr);
  }
  return verdict;
}

ShortExactReport check_short_exact(const LinearMap& f, const LinearMap& g) {
  if (!f.codomain->same_tables(*g.domain))
    throw precondition_error("the two maps do not compose");

  ModulePtr left_end = zero_module(f.domain->scalars());
  ModulePtr right_end = zero_module(g.codomain->scalars());

  ShortExactReport rep;
  rep.sequence = check_exact({zero_map(left_end, f.domain), f, g,
                              zero_map(g.codomain, right_end)});
  rep.exact = rep.sequence.exact;

  NormalityReport nf = normality(f);
  NormalityReport ng = normality(g);
  rep.mono = is_injective_map(f);
  rep.mono_k_normal = nf.k_normal;
  rep.mono_i_normal = nf.i_normal;
  rep.epi = is_surjective_map(g);
  rep.epi_k_normal = ng.k_normal;
  return rep;
}

int HomMonoid::zero_index() const {
  for (size_t i = 0; i < maps.size(); ++i) {
    bool all_zero = true;
    for (int v : maps[i].image)
      if (v != codomain->zero()) {
        all_zero = false;
        break;
      }
    if (all_zero) return static_cast<int>(i);
  }
  return -1;
}

int HomMonoid::index_of(const LinearMap& f) const {
  auto it = std::lower_bound(
      maps.begin(), maps.end(), f.image,
      [](const LinearMap& m, const std::vector<int>& v) { return m.image < v; });
  if (it != maps.end() && it->image == f.image)
    return static_cast<int>(it - maps.begin());
  return -1;
}

HomMonoid hom_monoid(const ModulePtr& domain, const ModulePtr& codomain,
                     const Caps& caps) {
  require_common_scalars(domain, codomain);
  std::vector<int> gens = minimal_generating_set(*domain);
  checked_search_size(codomain->size(), gens.size(), caps);

  HomMonoid hom;
  hom.domain = domain;
  hom.codomain = codomain;

  std::vector<int> choice(gens.size(), 0);
  while (true) {
    std::vector<int> partial(domain->size(), -1);
    for (size_t i = 0; i < gens.size(); ++i) partial[gens[i]] = choice[i];
    if (auto value = propagate(*domain, *codomain, std::move(partial))) {
      // Generators span the domain, so propagation assigns everything.
      hom.maps.push_back(linear_map(domain, codomain, std::move(*value)));
    }
    int pos = static_cast<int>(choice.size()) - 1;
    while (pos >= 0 && choice[pos] == codomain->size() - 1) choice[pos--] = 0;
    if (pos < 0) break;
    ++choice[pos];
  }

  std::sort(hom.maps.begin(), hom.maps.end(),
            [](const LinearMap& a, const LinearMap& b) {
              return a.image < b.image;
            });

  const int h = static_cast<int>(hom.maps.size());
  hom.add.assign(h, std::vector<int>(h, 0));
  for (int i = 0; i < h; ++i)
    for (int j = 0; j < h; ++j) {
      std::vector<int> sum(domain->size());
      for (int m = 0; m < domain->size(); ++m)
        sum[m] = codomain->add(hom.maps[i].image[m], hom.maps[j].image[m]);
      LinearMap probe;
      probe.image = std::move(sum);
      int idx = hom.index_of(probe);
      if (idx < 0)
        throw error("pointwise sum of linear maps escaped the hom set");
      hom.add[i][j] = idx;
    }
  return hom;
}

std::optional<LinearMap> search_linear_extension(const ModulePtr& domain,
                                                const ModulePtr& codomain,
                                                std::vector<int> partial,
                                                const Caps& caps) {
  require_common_scalars(domain, codomain);
  if (static_cast<int>(partial.size()) != domain->size())
    throw structural_error("partial table size does not match the domain");
  for (int v : partial)
    if (v < -1 || v >= codomain->size())
      throw structural_error("partial table entry out of range");

  auto base = propagate(*domain, *codomain, std::move(partial));
  if (!base) return std::nullopt;

  std::vector<int> assigned;
  for (int m = 0; m < domain->size(); ++m)
    if ((*base)[m] != -1) assigned.push_back(m);
  std::vector<int> gens = generators_extending(*domain, assigned);
  checked_search_size(codomain->size(), gens.size(), caps);

  std::vector<int> choice(gens.size(), 0);
  while (true) {
    std::vector<int> value = *base;
    bool consistent = true;
    for (size_t i = 0; i < gens.size(); ++i) {
      if (value[gens[i]] != -1 && value[gens[i]] != choice[i]) {
        consistent = false;
        break;
      }
      value[gens[i]] = choice[i];
    }
    if (consistent) {
      if (auto full = propagate(*domain, *codomain, std::move(value))) {
        bool complete =
            std::find(full->begin(), full->end(), -1) == full->end();
        if (complete)
          return linear_map(domain, codomain, std::move(*full));
      }
    }
    int pos = static_cast<int>(choice.size()) - 1;
    while (pos >= 0 && choice[pos] == codomain->size() - 1) choice[pos--] = 0;
    if (pos < 0) break;
    ++choice[pos];
  }
  return std::nullopt;
}

std::optional<LinearMap> find_retraction(const LinearMap& f, const Caps& caps) {
  std::vector<int> partial(f.codomain->size(), -1);
  for (int x = 0; x < f.domain->size(); ++x) {
    int y = f.image[x];
    if (partial[y] != -1 && partial[y] != x) return std::nullopt;
    partial[y] = x;
  }
  return search_linear_extension(f.codomain, f.domain, std::move(partial),
                                 caps);
}

InducedHomSequence induced_hom_sequence(const LinearMap& f,
                                        const LinearMap& g,
                                        const ModulePtr& target,
                                        const Caps& caps) {
  if (!f.codomain->same_tables(*g.domain))
    throw precondition_error("the two maps do not compose");
  require_common_scalars(f.domain, target);

  HomMonoid hom_q = hom_monoid(g.codomain, target, caps);
  HomMonoid hom_m = hom_monoid(g.domain, target, caps);
  HomMonoid hom_l = hom_monoid(f.domain, target, caps);

  SemiringPtr counting =
      counting_scalars({&hom_q.add, &hom_m.add, &hom_l.add});
  auto wrap = [&](const HomMonoid& hom, const ModulePtr& source) {
    return monoid_module(counting, hom.add,
                         "Hom(" + source->label() + "," + target->label() + ")");
  };

  InducedHomSequence seq;
  seq.hom_left = wrap(hom_q, g.codomain);
  seq.hom_middle = wrap(hom_m, g.domain);
  seq.hom_right = wrap(hom_l, f.domain);

  auto precompose = [](const HomMonoid& from, const HomMonoid& to,
                       const LinearMap& by, const ModulePtr& dom,
                       const ModulePtr& cod, const std::string& label) {
    std::vector<int> image(from.maps.size());
    for (size_t i = 0; i < from.maps.size(); ++i) {
      int idx = to.index_of(compose(from.maps[i], by));
      if (idx < 0) throw error("precomposition escaped the hom set");
      image[i] = idx;
    }
    return linear_map(dom, cod, std::move(image), label);
  };

  seq.by_epi = precompose(hom_q, hom_m, g, seq.hom_left, seq.hom_middle,
                          "-." + g.label);
  seq.by_mono = precompose(hom_m, hom_l, f, seq.hom_middle, seq.hom_right,
                           "-." + f.label);

  ModulePtr left_end = zero_module(counting);
  seq.verdict = check_exact({zero_map(left_end, seq.hom_left), seq.by_epi,
                             seq.by_mono, zero_map(seq.hom_right, left_end)});
  return seq;
}

}  // namespace kideal

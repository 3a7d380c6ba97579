#include "kideal/injectivity.hpp"

#include <string>

namespace kideal {

namespace {

// h restricted to L must agree with g, so seed the search with exactly the
// values of g on the members of L.
std::optional<LinearMap> extend_over_parent(const ModulePtr& target,
                                            const Subsemimodule& L,
                                            const LinearMap& g,
                                            const Caps& caps) {
  std::vector<int> partial(L.parent->size(), -1);
  for (size_t i = 0; i < L.members.size(); ++i)
    partial[L.members[i]] = g.image[i];
  return search_linear_extension(L.parent, target, std::move(partial), caps);
}

}  // namespace

InjectivityVerdict extension_test(const ModulePtr& target,
                                  const Subsemimodule& L, const Caps& caps) {
  InjectivityVerdict verdict;
  verdict.kind = "injective";
  verdict.relative_to = L.parent->label();
  verdict.holds = true;

  ModulePtr restricted = submodule_restrict(L);
  HomMonoid maps = hom_monoid(restricted, target, caps);
  for (const LinearMap& g : maps.maps) {
    if (extend_over_parent(target, L, g, caps)) continue;
    verdict.holds = false;
    verdict.failing_sub = L;
    verdict.failing_map = g;
    break;
  }
  return verdict;
}

InjectivityVerdict is_injective_rel(const ModulePtr& target,
                                    const ModulePtr& m, const Caps& caps) {
  InjectivityVerdict verdict;
  verdict.kind = "injective";
  verdict.relative_to = m->label();
  verdict.holds = true;
  for (const auto& L : enumerate_subsemimodules(m, caps)) {
    InjectivityVerdict one = extension_test(target, L, caps);
    if (one.holds) continue;
    one.relative_to = m->label();
    return one;
  }
  return verdict;
}

InjectivityVerdict is_i_injective_rel(const ModulePtr& target,
                                      const ModulePtr& m, const Caps& caps) {
  InjectivityVerdict verdict;
  verdict.kind = "i-injective";
  verdict.relative_to = m->label();
  verdict.holds = true;
  for (const auto& L : enumerate_subsemimodules(m, caps)) {
    if (!is_subtractive(L)) continue;
    InjectivityVerdict one = extension_test(target, L, caps);
    if (one.holds) continue;
    one.kind = "i-injective";
    one.relative_to = m->label();
    return one;
  }
  return verdict;
}

InjectivityVerdict is_i_injective_for(const ModulePtr& target,
                                      const Subsemimodule& L,
                                      const Caps& caps) {
  if (auto w = subtractive_failure_witness(L))
    throw precondition_error(
        "not a normal monomorphism image, witness (m,l,l') = (" +
        std::to_string((*w)[0]) + "," + std::to_string((*w)[1]) + "," +
        std::to_string((*w)[2]) + ")");
  InjectivityVerdict verdict = extension_test(target, L, caps);
  verdict.kind = "i-injective";
  return verdict;
}

InjectivityVerdict is_e_injective_rel(const ModulePtr& target,
                                      const LinearMap& f, const LinearMap& g,
                                      const Caps& caps) {
  ShortExactReport ses = check_short_exact(f, g);
  if (!ses.exact)
    throw precondition_error("the given pair is not a short exact sequence");

  InjectivityVerdict verdict;
  verdict.kind = "e-injective";
  verdict.relative_to = "0 -> " + f.domain->label() + " -> " +
                        f.codomain->label() + " -> " + g.codomain->label() +
                        " -> 0";
  verdict.induced = induced_hom_sequence(f, g, target, caps);
  verdict.holds = verdict.induced->verdict.exact;
  return verdict;
}

InjectivityVerdict is_e_injective_for(const ModulePtr& target,
                                      const Subsemimodule& L,
                                      const Caps& caps) {
  if (auto w = subtractive_failure_witness(L))
    throw precondition_error(
        "quotient sequence is exact only for subtractive subobjects, "
        "witness (m,l,l') = (" +
        std::to_string((*w)[0]) + "," + std::to_string((*w)[1]) + "," +
        std::to_string((*w)[2]) + ")");
  return is_e_injective_rel(target, inclusion_map(L),
                            quotient_map(bourne_quotient(L)), caps);
}

DirectSumProbe direct_sum_probe(const std::vector<ModulePtr>& summands,
                                const std::vector<ModulePtr>& family,
                                const Caps& caps) {
  if (summands.empty())
    throw parameter_error("probe needs at least one summand");
  for (size_t i = 0; i < summands.size(); ++i)
    for (size_t j = 0; j < family.size(); ++j)
      if (!is_i_injective_rel(summands[i], family[j], caps).holds)
        throw precondition_error("summand " + std::to_string(i) +
                                 " is not i-injective relative to family "
                                 "member " +
                                 std::to_string(j));

  DirectSumProbe probe;
  probe.sum = product_module(summands, caps);
  probe.preserved = true;
  for (size_t j = 0; j < family.size(); ++j) {
    InjectivityVerdict v = is_i_injective_rel(probe.sum, family[j], caps);
    if (v.holds) continue;
    probe.preserved = false;
    probe.failing_family_index = static_cast<int>(j);
    probe.failing_verdict = std::move(v);
    break;
  }
  probe.scalar_lattice_height =
      k_ideal_lattice(regular_module(summands[0]->scalars()), caps).height;
  return probe;
}

}  // namespace kideal

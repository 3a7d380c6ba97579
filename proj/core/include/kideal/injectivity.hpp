#ifndef KIDEAL_INJECTIVITY_HPP
#define KIDEAL_INJECTIVITY_HPP

#include <optional>
#include <string>
#include <vector>

#include "kideal/morphism.hpp"
#include "kideal/semimodule.hpp"

namespace kideal {

// Outcome of an extension-property test.  When holds is false the failing
// subobject and the map on it that admits no extension are attached; the
// search that produced them is exhaustive, so the pair is a genuine
// counterexample, not a timeout.
struct InjectivityVerdict {
  std::string kind;         // "injective", "i-injective" or "e-injective"
  std::string relative_to;  // display name of the module or sequence tested
  bool holds = false;
  std::optional<Subsemimodule> failing_sub;
  std::optional<LinearMap> failing_map;  // domain is the restricted subobject
  std::optional<InducedHomSequence> induced;  // e-injective runs only
};

// Every map L -> target extends to the parent of L along the inclusion.
InjectivityVerdict extension_test(const ModulePtr& target,
                                  const Subsemimodule& L,
                                  const Caps& caps = {});

// target is injective relative to m: maps out of every subsemimodule of m
// extend.  Inclusions are quantified up to image, which covers every
// injective map into m up to isomorphism.
InjectivityVerdict is_injective_rel(const ModulePtr& target,
                                    const ModulePtr& m, const Caps& caps = {});

// Same quantification restricted to subtractive subsemimodules, the images
// of normal monomorphisms.
InjectivityVerdict is_i_injective_rel(const ModulePtr& target,
                                      const ModulePtr& m,
                                      const Caps& caps = {});

// Single normal monomorphism, given by its image; a non-subtractive L is
// rejected with the witness triple.
InjectivityVerdict is_i_injective_for(const ModulePtr& target,
                                      const Subsemimodule& L,
                                      const Caps& caps = {});

// target is e-injective relative to the short exact sequence (f, g): the
// induced contravariant hom sequence is again exact.  A sequence that is
// not short exact is rejected up front.
InjectivityVerdict is_e_injective_rel(const ModulePtr& target,
                                      const LinearMap& f, const LinearMap& g,
                                      const Caps& caps = {});

// Convenience form for the canonical sequence 0 -> L -> M -> M/L -> 0 of a
// subtractive L.
InjectivityVerdict is_e_injective_for(const ModulePtr& target,
                                      const Subsemimodule& L,
                                      const Caps& caps = {});

// Finite shadow of the direct-sum preservation question: given summands
// that are each i-injective relative to every member of `family` (checked,
// violations are precondition errors), form their finite direct sum and
// re-test it against the family.  The subtractive-lattice height of the
// scalar semiring rides along, since chain length of the scalars is what
// the preservation property controls.
struct DirectSumProbe {
  ModulePtr sum;
  bool preserved = false;
  int failing_family_index = -1;
  InjectivityVerdict failing_verdict;  // populated when not preserved
  int scalar_lattice_height = 0;
};

DirectSumProbe direct_sum_probe(const std::vector<ModulePtr>& summands,
                                const std::vector<ModulePtr>& family,
                                const Caps& caps = {});

}  // namespace kideal

#endif

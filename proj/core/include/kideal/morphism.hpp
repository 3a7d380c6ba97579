#ifndef KIDEAL_MORPHISM_HPP
#define KIDEAL_MORPHISM_HPP

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "kideal/semimodule.hpp"

namespace kideal {

// A linear map between finite modules over one scalar semiring, stored as
// the full value table: image[m] is where domain element m goes.  Only the
// checked factory below builds one, so holding a LinearMap means holding a
// verified proof of additivity and scalar compatibility.
struct LinearMap {
  ModulePtr domain;
  ModulePtr codomain;
  std::vector<int> image;
  std::string label;

  int apply(int m) const { return image[m]; }

  // Value tables only; modules must share tables for this to mean much.
  bool operator==(const LinearMap& other) const {
    return image == other.image;
  }
};

// Throws precondition_error naming the first violated law with a witness.
LinearMap linear_map(ModulePtr domain, ModulePtr codomain,
                     std::vector<int> image, std::string label = "");

LinearMap identity_map(const ModulePtr& m);
LinearMap zero_map(const ModulePtr& domain, const ModulePtr& codomain);

// Embedding of a subsemimodule into its parent.
LinearMap inclusion_map(const Subsemimodule& sub);

// Projection of the parent onto a Bourne quotient.
LinearMap quotient_map(const BourneQuotient& q);

// g after f; f's codomain and g's domain must share tables.
LinearMap compose(const LinearMap& g, const LinearMap& f);

struct MapInvariants {
  Subsemimodule kernel;         // preimage of zero; always subtractive
  Subsemimodule image;          // value set; a subsemimodule of the codomain
  Subsemimodule image_closure;  // subtractive closure of the image
};

MapInvariants map_invariants(const LinearMap& f);

bool is_injective_map(const LinearMap& f);
bool is_surjective_map(const LinearMap& f);

// k-normal: f(m) = f(m') forces m + k = m' + k' for some kernel elements
// k, k'.  i-normal: the image is subtractive in the codomain.
struct NormalityReport {
  bool k_normal = false;
  bool i_normal = false;
  std::array<int, 2> k_witness{-1, -1};  // first (m, m') breaking k-normality
  int i_witness = -1;                    // closure element outside the image
};

NormalityReport normality(const LinearMap& f);

// One interior junction of a sequence: does the incoming image equal the
// outgoing kernel, and is the outgoing map k-normal there.
struct JunctionReport {
  bool image_equals_kernel = false;
  bool outgoing_k_normal = false;
  int mismatch_witness = -1;  // least element of the symmetric difference

  bool exact() const { return image_equals_kernel && outgoing_k_normal; }
};

struct SequenceVerdict {
  bool exact = false;
  std::vector<JunctionReport> junctions;
};

// Consecutive maps must compose; every interior junction is checked.
SequenceVerdict check_exact(const std::vector<LinearMap>& maps);

// f then g, padded with zero maps on both ends to a five-term sequence.
// The flags restate what exactness of the padding encodes about f and g
// individually.
struct ShortExactReport {
  bool exact = false;
  SequenceVerdict sequence;
  bool mono = false;
  bool mono_k_normal = false;
  bool mono_i_normal = false;
  bool epi = false;
  bool epi_k_normal = false;
};

ShortExactReport check_short_exact(const LinearMap& f, const LinearMap& g);

// Every linear map domain -> codomain, listed in lexicographic order of
// value tables, with the pointwise-addition table on indices.  This is a
// commutative monoid with the zero map as neutral element.
struct HomMonoid {
  ModulePtr domain;
  ModulePtr codomain;
  std::vector<LinearMap> maps;
  std::vector<std::vector<int>> add;

  int zero_index() const;
  int index_of(const LinearMap& f) const;  // -1 when absent
};

// Enumerates by assigning images to a minimal generating set and
// propagating.  Throws resource_error when |codomain|^#generators exceeds
// caps.hom_search.
HomMonoid hom_monoid(const ModulePtr& domain, const ModulePtr& codomain,
                     const Caps& caps = {});

// Completes a partial value table (-1 marks unassigned slots) to a full
// linear map.  Candidate generator images are tried in ascending order, so
// the result is deterministic; returns nothing when no completion exists.
std::optional<LinearMap> search_linear_extension(const ModulePtr& domain,
                                                const ModulePtr& codomain,
                                                std::vector<int> partial,
                                                const Caps& caps = {});

// Left inverse: h with h(f(x)) = x everywhere, when one exists.
std::optional<LinearMap> find_retraction(const LinearMap& f,
                                         const Caps& caps = {});

// Applying Hom(-, target) to f: L -> M and g: M -> Q contravariantly.  The
// three hom monoids are wrapped as modules over one counting semiring, the
// precomposition maps become LinearMaps between them, and the resulting
// sequence 0 -> Hom(Q,T) -> Hom(M,T) -> Hom(L,T) -> 0 is checked with the
// ordinary exactness machinery.
struct InducedHomSequence {
  ModulePtr hom_left;    // Hom(Q, T)
  ModulePtr hom_middle;  // Hom(M, T)
  ModulePtr hom_right;   // Hom(L, T)
  LinearMap by_epi;      // precompose with g
  LinearMap by_mono;     // precompose with f
  SequenceVerdict verdict;
};

InducedHomSequence induced_hom_sequence(const LinearMap& f,
                                        const LinearMap& g,
                                        const ModulePtr& target,
                                        const Caps& caps = {});

}  // namespace kideal

#endif

#pragma once

#include <optional>
#include <vector>

#include "engel/group.hpp"

namespace engel {

// Smallest normal subgroup of G containing the seed set, computed as the
// closure of all conjugates.
Subgroup normal_closure(const FiniteGroup& G, const std::vector<Element>& seed);

// Descending chain K_0 = G, K_{i+1} = normal closure of H inside K_i.
// Returns the least i with K_i = H, or nullopt if the chain stabilizes
// strictly above H.
std::optional<int> subnormal_defect(const FiniteGroup& G, const Subgroup& H);

// Same chain, started at an ambient subgroup instead of G. `ambient` and
// `sub` are sorted closed element sets with sub contained in ambient;
// `sub_gens` generates sub.
std::optional<int> subnormal_defect_within(const FiniteGroup& G,
                                           const std::vector<Element>& ambient,
                                           const std::vector<Element>& sub,
                                           const std::vector<Element>& sub_gens);

enum class SeriesKind { upper_central, lower_central, derived };

struct SeriesResult {
  SeriesKind kind;
  std::vector<Subgroup> terms;  // last two terms are equal (stabilized pair)
  bool stabilized = false;
  int length = 0;  // number of strict steps before stabilization
};

// Full series until stabilization. upper_central ascends from the trivial
// subgroup (final term = hypercenter); lower_central and derived descend
// from G.
SeriesResult series(const FiniteGroup& G, SeriesKind kind);

Subgroup hypercenter(const FiniteGroup& G);
Subgroup center(const FiniteGroup& G);

// Nilpotency is tested with one uniform oracle: the lower central series
// reaching the trivial subgroup.
std::optional<int> nilpotency_class(const FiniteGroup& G);
std::optional<int> derived_length(const FiniteGroup& G);

// Subgroup-level variants over sorted closed element sets.
bool is_abelian_subset(const FiniteGroup& G, const std::vector<Element>& H);
std::optional<int> nilpotency_class_subset(const FiniteGroup& G,
                                           const std::vector<Element>& H);

enum class RadicalKind { fitting, baer, gruenberg, hirsch_plotkin };

struct RadicalReport {
  Subgroup fitting;
  Subgroup baer;
  Subgroup gruenberg;
  Subgroup hirsch_plotkin;
};

// The four radicals of a finite group. Fitting is computed from nilpotency
// of single-element normal closures, Baer from subnormal defects of cyclic
// subgroups; in the finite case Gruenberg coincides with Baer (ascendant =
// subnormal in a finite lattice) and Hirsch-Plotkin with Fitting (locally
// nilpotent = nilpotent). The identification Fitting = Baer is asserted at
// runtime: the two code paths must agree or an invariant_violation is
// thrown.
RadicalReport radicals(const FiniteGroup& G);
Subgroup radical(const FiniteGroup& G, RadicalKind kind);

// {g in G : H^g = H}
Subgroup normalizer(const FiniteGroup& G, const Subgroup& H);

struct ConjugacyInfo {
  std::vector<int> class_of;            // element -> class id
  std::vector<Element> reps;            // class id -> minimal member
  std::vector<std::vector<Element>> classes;  // class id -> sorted members
};

ConjugacyInfo conjugacy_classes(const FiniteGroup& G);

// Distinct cyclic subgroups <x> and their orbits under conjugation. Used to
// deduplicate per-element radical and rho computations: conjugate cyclic
// subgroups have equal subnormal defects and conjugate normal closures.
struct CyclicIndex {
  std::vector<int> sub_of;                    // element -> cyclic subgroup id
  std::vector<std::vector<Element>> subs;     // id -> sorted elements
  std::vector<Element> sub_gen;               // id -> a generator of the subgroup
  std::vector<int> orbit_of;                  // id -> conjugacy orbit id
  std::vector<int> orbit_rep;                 // orbit id -> representative subgroup id
};

CyclicIndex cyclic_subgroup_index(const FiniteGroup& G);

int group_exponent(const FiniteGroup& G);

}  // namespace engel

#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "engel/group.hpp"

namespace engel {

struct EngelStatus {
  bool engel = false;
  std::optional<int> length;  // least n >= 1 working for every companion

  friend bool operator==(const EngelStatus& a, const EngelStatus& b) {
    return a.engel == b.engel && a.length == b.length;
  }
};

// a is left Engel iff for every g the orbit g -> [g,_k a] reaches the
// identity; the orbit is a deterministic iteration, so a first repeat
// without hitting the identity proves failure. length (when present) is the
// least n with [g,_n a] = 1 for all g.
EngelStatus left_engel_status(const FiniteGroup& G, Element a);
// Mirror image: [a,_n g] = 1 for all g.
EngelStatus right_engel_status(const FiniteGroup& G, Element a);

// Per-element Engel data for a whole group. Lengths are exact (computed via
// predecessor BFS on the functional graph z -> [z,y], which is the orbit
// computation with cycle detection done for all starting points at once).
struct EngelReport {
  int max_n = 8;
  // -1 marks an unbounded (non-Engel) element; otherwise the exact Engel
  // length, always >= 1.
  std::vector<int> left_length;
  std::vector<int> right_length;
  std::vector<std::vector<Element>> left_levels;   // [k-1] = L_{k}, 1 <= k <= max_n
  std::vector<std::vector<Element>> right_levels;  // [k-1] = R_{k}
  std::vector<Element> left_set;       // L(G)
  std::vector<Element> right_set;      // R(G)
  std::vector<Element> bounded_left;   // union of all L_k = L(G) in the finite case
  std::vector<Element> bounded_right;  // union of all R_k
  std::vector<Element> rho;            // only when computed with rho
  std::vector<Element> rho_bar;
  bool has_rho = false;

  bool in_left_level(Element e, int k) const {
    return left_length[e] >= 0 && left_length[e] <= k;
  }
  bool in_right_level(Element e, int k) const {
    return right_length[e] >= 0 && right_length[e] <= k;
  }
};

EngelReport engel_level_sets(const FiniteGroup& G, int max_n = 8,
                             bool with_rho = true);

// Gruenberg's rho sets: a is in rho iff for every x the cyclic subgroup <x>
// is subnormal in <x><a>^G. rho_bar additionally requires one uniform defect
// bound over all x; in a finite group that bound is the maximum of the
// individual defects, so rho_bar = rho with the bound asserted to exist
// (invariant_violation otherwise).
std::pair<std::vector<Element>, std::vector<Element>> rho_sets(
    const FiniteGroup& G);

// Exact distance table for one companion: dist[z] = least k with
// [z,_k y] = 1, or -1 when the orbit never reaches the identity.
std::vector<int> engel_distances(const FiniteGroup& G, Element y);

}  // namespace engel

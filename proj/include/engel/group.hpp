#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "engel/errors.hpp"

namespace engel {

// Index into a FiniteGroup's element table. Index 0 is always the identity.
using Element = int;

struct BuildOptions {
  int cap = 4096;             // maximum order of an enumerable group
  int exhaustive_max = 256;   // full pair/triple validation up to this order
  int samples = 512;          // sampled validation above exhaustive_max
  std::uint64_t seed = 1;     // seed for sampled validation
};

// A fully enumerated finite group: complete multiplication and inverse
// tables, a generating set, and a shortest-word label per element.
// Immutable once built; safe to share across threads.
class FiniteGroup {
 public:
  using element_type = Element;

  int order() const { return n_; }
  Element identity() const { return 0; }

  Element mul(Element a, Element b) const {
    return table_[static_cast<std::size_t>(a) * n_ + b];
  }
  Element inv(Element a) const { return inverse_[a]; }
  bool equal(Element a, Element b) const { return a == b; }
  bool is_identity(Element a) const { return a == 0; }

  // g^-1 * a * g
  Element conj(Element a, Element g) const { return mul(mul(inv(g), a), g); }
  // a^-1 * b^-1 * a * b
  Element comm(Element a, Element b) const {
    return mul(mul(inv(a), inv(b)), mul(a, b));
  }
  Element pow(Element a, long long e) const;
  int element_order(Element a) const;  // least k >= 1 with a^k = 1

  void validate(Element a) const {
    if (a < 0 || a >= n_) throw usage_error("element index out of range");
  }

  const std::vector<Element>& generators() const { return gens_; }
  const std::vector<std::string>& generator_names() const { return gen_names_; }
  const std::string& label(Element a) const { return labels_[a]; }
  const std::vector<std::string>& labels() const { return labels_; }

  // Construction-provided tags: individual elements by role (e.g. the top
  // generators "x", "y" of a wreath product) and role-tagged element sets
  // (e.g. the embedded base copy).
  const std::map<std::string, Element>& marks() const { return marks_; }
  const std::map<std::string, std::vector<Element>>& mark_sets() const {
    return mark_sets_;
  }
  bool has_mark(const std::string& key) const { return marks_.count(key) != 0; }
  Element mark(const std::string& key) const;

  const std::string& name() const { return name_; }

  // Metadata about how the build was validated (full vs sampled), recorded
  // into reports.
  const std::string& validation_note() const { return validation_note_; }

 private:
  int n_ = 0;
  std::vector<Element> table_;    // row-major: table_[a*n + b] = a*b
  std::vector<Element> inverse_;
  std::vector<Element> gens_;
  std::vector<std::string> gen_names_;
  std::vector<std::string> labels_;
  std::map<std::string, Element> marks_;
  std::map<std::string, std::vector<Element>> mark_sets_;
  std::string name_;
  std::string validation_note_;

  friend class GroupBuilder;
};

// Assembles and validates FiniteGroup instances. Every construction path
// (explicit Cayley table, permutation generators, construction descriptors)
// funnels through here, so the validation policy is uniform: identity,
// inverses and generator reachability are always checked in full;
// associativity is checked over all triples up to exhaustive_max and on
// seeded samples above that.
class GroupBuilder {
 public:
  explicit GroupBuilder(BuildOptions opts = {}) : opts_(opts) {}

  FiniteGroup from_table(int n, std::vector<Element> table,
                         std::vector<Element> gens = {},
                         std::vector<std::string> gen_names = {});
  FiniteGroup from_permutations(int degree,
                                const std::vector<std::vector<int>>& perm_gens,
                                std::vector<std::string> gen_names = {});
  FiniteGroup from_mul_fn(int n,
                          const std::function<Element(Element, Element)>& f,
                          std::vector<Element> gens,
                          std::vector<std::string> gen_names = {});

  // Cayley-table text format: line 1 = order n; next n lines = n
  // space-separated 0-based indices (row g, column h gives g*h); index 0 must
  // be the identity; optional final line "gens: i1 i2 ...".
  FiniteGroup from_cayley_stream(std::istream& in);

  // Construction-time tagging; part of the build, not later mutation.
  static void set_name(FiniteGroup& G, std::string name) {
    G.name_ = std::move(name);
  }
  static void set_marks(FiniteGroup& G, std::map<std::string, Element> marks,
                        std::map<std::string, std::vector<Element>> mark_sets) {
    G.marks_ = std::move(marks);
    G.mark_sets_ = std::move(mark_sets);
  }

  const BuildOptions& options() const { return opts_; }

 private:
  BuildOptions opts_;
  FiniteGroup finalize(int n, std::vector<Element> table,
                       std::vector<Element> gens,
                       std::vector<std::string> gen_names);
};

// A subgroup of an enumerable group, stored as a sorted element set together
// with a witness generating set (closure(witness_generators) == elements).
struct Subgroup {
  const FiniteGroup* parent = nullptr;
  std::vector<Element> elements;            // sorted ascending
  std::vector<Element> witness_generators;

  int size() const { return static_cast<int>(elements.size()); }
  bool contains(Element e) const;
  bool is_trivial() const { return elements.size() == 1; }
  bool is_whole_group() const {
    return parent && size() == parent->order();
  }
};

inline bool operator==(const Subgroup& a, const Subgroup& b) {
  return a.parent == b.parent && a.elements == b.elements;
}

// Smallest subgroup of G containing the seed set. Deterministic: the result
// is sorted and independent of the seed ordering.
std::vector<Element> closure_elements(const FiniteGroup& G,
                                      const std::vector<Element>& seed);
Subgroup closure(const FiniteGroup& G, const std::vector<Element>& seed);

// Wraps an already-closed sorted element set, computing a greedy witness
// generating set. Throws invariant_violation if the set is not closed.
Subgroup make_subgroup(const FiniteGroup& G, std::vector<Element> sorted_elems);

// Greedy minimal-ish generating set for a closed element set: scan elements
// ascending, keep those not yet generated.
std::vector<Element> greedy_generators(const FiniteGroup& G,
                                       const std::vector<Element>& sorted_elems);

// Coset group G/N. Precondition: N normal in G (usage_error otherwise).
// The coset of the identity gets index 0; cosets are ordered by their
// minimal member.
FiniteGroup quotient(const FiniteGroup& G, const Subgroup& N,
                     const BuildOptions& opts = {});

bool is_normal(const FiniteGroup& G, const std::vector<Element>& sorted_elems);

std::vector<std::uint8_t> element_mask(const FiniteGroup& G,
                                       const std::vector<Element>& elems);

// ---------------------------------------------------------------------------
// Engel commutator calculus, generic over enumerable and black-box groups.
// ---------------------------------------------------------------------------

template <class G>
concept GroupOps = requires(const G& g, const typename G::element_type& a,
                            const typename G::element_type& b) {
  { g.mul(a, b) } -> std::convertible_to<typename G::element_type>;
  { g.inv(a) } -> std::convertible_to<typename G::element_type>;
  { g.identity() } -> std::convertible_to<typename G::element_type>;
  { g.equal(a, b) } -> std::convertible_to<bool>;
  g.validate(a);
};

template <GroupOps G>
typename G::element_type commutator(const G& g, const typename G::element_type& a,
                                    const typename G::element_type& b) {
  return g.mul(g.mul(g.inv(a), g.inv(b)), g.mul(a, b));
}

// Left-normed Engel commutator [x,_n y]: [x,_0 y] = x,
// [x,_n y] = [[x,_{n-1} y], y].
template <GroupOps G>
typename G::element_type engel_commutator(const G& g,
                                          const typename G::element_type& x,
                                          const typename G::element_type& y,
                                          int n) {
  if (n < 0) throw usage_error("engel_commutator: n must be non-negative");
  g.validate(x);
  g.validate(y);
  auto acc = x;
  for (int i = 0; i < n; ++i) acc = commutator(g, acc, y);
  return acc;
}

}  // namespace engel

#pragma once

#include <memory>
#include <random>
#include <string>

#include "engel/group.hpp"
#include "engel/group_ring.hpp"

namespace engel {

class GuptaLevinGroup;

// Black-box element: a pair (g, r) with g in the base group and r in Z_p[G],
// standing for the 2x2 matrix ((g,0),(r,1)) over the group ring. Supports
// arithmetic and equality only; the ambient group is never enumerated.
struct GuptaLevinElem {
  Element g = 0;
  GroupRingElem r;
  const GuptaLevinGroup* ctx = nullptr;

  friend bool operator==(const GuptaLevinElem& a, const GuptaLevinElem& b) {
    return a.g == b.g && a.r == b.r;
  }
};

// The multiplicative group of matrices ((g,0),(r,1)) over Z_p[G] where G is
// a finite-rank free nilpotent class-2 group of exponent p (p odd) or of
// exponent 4 with p = 2. Pair law: (g,r)(h,s) = (gh, r*h + s).
class GuptaLevinGroup {
 public:
  using element_type = GuptaLevinElem;

  // base: the enumerable exponent-p (or exponent-4) class-2 group; owned.
  GuptaLevinGroup(FiniteGroup base, int p, int rank, std::string name);

  // The ring keeps a pointer into base_ and elements carry a context
  // pointer, so instances must stay put.
  GuptaLevinGroup(const GuptaLevinGroup&) = delete;
  GuptaLevinGroup& operator=(const GuptaLevinGroup&) = delete;

  const FiniteGroup& base() const { return base_; }
  const GroupRing& ring() const { return ring_; }
  int modulus() const { return ring_.modulus(); }
  int rank() const { return rank_; }
  const std::string& name() const { return name_; }

  GuptaLevinElem identity() const { return make(0, ring_.zero()); }
  GuptaLevinElem make(Element g, GroupRingElem r) const;

  GuptaLevinElem mul(const GuptaLevinElem& a, const GuptaLevinElem& b) const;
  GuptaLevinElem inv(const GuptaLevinElem& a) const;
  bool equal(const GuptaLevinElem& a, const GuptaLevinElem& b) const {
    return a == b;
  }
  bool is_identity(const GuptaLevinElem& a) const {
    return a.g == 0 && a.r.is_zero();
  }
  void validate(const GuptaLevinElem& a) const {
    if (a.ctx != this)
      throw usage_error("element belongs to a different black-box group");
  }

  // Named elements: X_i = (x_i, 1) for the i-th free generator, Y = (1, 1).
  GuptaLevinElem X(int i) const;
  GuptaLevinElem Y() const;

  // u_m = ([x_0,x_1] - 1) * ... * ([x_0,x_m] - 1), the growing witness that
  // the normal closure of X_0 is not nilpotent. Requires 1 <= m < rank.
  GroupRingElem u(int m) const;

  // Seeded random element with a small sparse ring part.
  GuptaLevinElem sample(std::mt19937_64& rng, int max_support = 3) const;

  // Enumeration is not supported on black-box groups.
  [[noreturn]] int order() const {
    throw capacity_error("black-box group '" + name_ + "' cannot be enumerated");
  }

  std::string to_string(const GuptaLevinElem& a) const;

 private:
  FiniteGroup base_;
  GroupRing ring_;
  int rank_;
  std::string name_;
};

}  // namespace engel

#pragma once

#include <map>
#include <string>

#include "engel/group.hpp"

namespace engel {

// Element of Z_p[G]: sparse map from base-group element index to a nonzero
// residue mod p. Canonical form never stores zero coefficients, so equality
// is map equality.
struct GroupRingElem {
  std::map<Element, int> coeff;

  bool is_zero() const { return coeff.empty(); }
  friend bool operator==(const GroupRingElem& a, const GroupRingElem& b) {
    return a.coeff == b.coeff;
  }
};

// Arithmetic context for Z_p[G] over an enumerable base group.
class GroupRing {
 public:
  GroupRing(const FiniteGroup& base, int p);

  const FiniteGroup& base() const { return *base_; }
  int modulus() const { return p_; }

  GroupRingElem zero() const { return {}; }
  GroupRingElem one() const { return unit(0); }
  GroupRingElem unit(Element g) const;              // 1 * g
  GroupRingElem augmentation_term(Element g) const; // g - 1

  GroupRingElem add(const GroupRingElem& a, const GroupRingElem& b) const;
  GroupRingElem sub(const GroupRingElem& a, const GroupRingElem& b) const;
  GroupRingElem neg(const GroupRingElem& a) const;
  GroupRingElem mul(const GroupRingElem& a, const GroupRingElem& b) const;
  GroupRingElem scale(int c, const GroupRingElem& a) const;
  // Right translation a * g (support moves, coefficients unchanged).
  GroupRingElem translate(const GroupRingElem& a, Element g) const;

  std::string to_string(const GroupRingElem& a) const;

 private:
  const FiniteGroup* base_;
  int p_;
  int norm(long long v) const {
    int r = static_cast<int>(v % p_);
    return r < 0 ? r + p_ : r;
  }
};

}  // namespace engel

#include "engel/group_ring.hpp"

#include <sstream>

namespace engel {

GroupRing::GroupRing(const FiniteGroup& base, int p) : base_(&base), p_(p) {
  if (p < 2) throw usage_error("group ring modulus must be at least 2");
}

GroupRingElem GroupRing::unit(Element g) const {
  base_->validate(g);
  GroupRingElem r;
  r.coeff[g] = 1;
  return r;
}

GroupRingElem GroupRing::augmentation_term(Element g) const {
  base_->validate(g);
  GroupRingElem r;
  if (g != 0) {
    r.coeff[g] = 1;
    r.coeff[0] = p_ - 1;  // -1 mod p
  }
  return r;
}

GroupRingElem GroupRing::add(const GroupRingElem& a, const GroupRingElem& b) const {
  GroupRingElem r = a;
  for (const auto& [g, c] : b.coeff) {
    int v = norm(static_cast<long long>(r.coeff[g]) + c);
    if (v == 0)
      r.coeff.erase(g);
    else
      r.coeff[g] = v;
  }
  return r;
}

GroupRingElem GroupRing::neg(const GroupRingElem& a) const {
  GroupRingElem r;
  for (const auto& [g, c] : a.coeff) r.coeff[g] = p_ - c;
  return r;
}

GroupRingElem GroupRing::sub(const GroupRingElem& a, const GroupRingElem& b) const {
  return add(a, neg(b));
}

GroupRingElem GroupRing::mul(const GroupRingElem& a, const GroupRingElem& b) const {
  GroupRingElem r;
  for (const auto& [g, c] : a.coeff)
    for (const auto& [h, d] : b.coeff) {
      Element gh = base_->mul(g, h);
      int v = norm(static_cast<long long>(r.coeff[gh]) +
                   static_cast<long long>(c) * d);
      if (v == 0)
        r.coeff.erase(gh);
      else
        r.coeff[gh] = v;
    }
  return r;
}

GroupRingElem GroupRing::scale(int c, const GroupRingElem& a) const {
  GroupRingElem r;
  int cc = norm(c);
  if (cc == 0) return r;
  for (const auto& [g, v] : a.coeff) {
    int w = norm(static_cast<long long>(cc) * v);
    if (w != 0) r.coeff[g] = w;
  }
  return r;
}

GroupRingElem GroupRing::translate(const GroupRingElem& a, Element g) const {
  base_->validate(g);
  GroupRingElem r;
  for (const auto& [h, c] : a.coeff) r.coeff[base_->mul(h, g)] = c;
  return r;
}

std::string GroupRing::to_string(const GroupRingElem& a) const {
  if (a.coeff.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [g, c] : a.coeff) {
    if (!first) os << " + ";
    first = false;
    if (c != 1 || g == 0) os << c;
    if (g != 0) {
      if (c != 1) os << "*";
      os << base_->label(g);
    }
  }
  return os.str();
}

}  // namespace engel

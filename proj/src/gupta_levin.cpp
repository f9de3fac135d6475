#include "engel/gupta_levin.hpp"

#include <sstream>

namespace engel {

GuptaLevinGroup::GuptaLevinGroup(FiniteGroup base, int p, int rank,
                                 std::string name)
    : base_(std::move(base)), ring_(base_, p), rank_(rank),
      name_(std::move(name)) {
  if (rank < 2) throw usage_error("Gupta-Levin rank must be at least 2");
  if (static_cast<std::size_t>(rank) != base_.generators().size())
    throw invariant_violation("base group generator count does not match rank");
}

GuptaLevinElem GuptaLevinGroup::make(Element g, GroupRingElem r) const {
  base_.validate(g);
  GuptaLevinElem e;
  e.g = g;
  e.r = std::move(r);
  e.ctx = this;
  return e;
}

GuptaLevinElem GuptaLevinGroup::mul(const GuptaLevinElem& a,
                                    const GuptaLevinElem& b) const {
  validate(a);
  validate(b);
  // ((g,0),(r,1)) * ((h,0),(s,1)) = ((gh,0),(r h + s,1))
  return make(base_.mul(a.g, b.g), ring_.add(ring_.translate(a.r, b.g), b.r));
}

GuptaLevinElem GuptaLevinGroup::inv(const GuptaLevinElem& a) const {
  validate(a);
  // (g,r)^-1 = (g^-1, -r g^-1)
  Element gi = base_.inv(a.g);
  return make(gi, ring_.neg(ring_.translate(a.r, gi)));
}

GuptaLevinElem GuptaLevinGroup::X(int i) const {
  if (i < 0 || i >= rank_)
    throw usage_error("generator index out of range for rank " +
                      std::to_string(rank_));
  return make(base_.generators()[i], ring_.one());
}

GuptaLevinElem GuptaLevinGroup::Y() const { return make(0, ring_.one()); }

GroupRingElem GuptaLevinGroup::u(int m) const {
  if (m < 1 || m >= rank_)
    throw usage_error("u_m requires 1 <= m < rank");
  Element x0 = base_.generators()[0];
  GroupRingElem acc = ring_.one();
  for (int i = 1; i <= m; ++i) {
    Element xi = base_.generators()[i];
    acc = ring_.mul(acc, ring_.augmentation_term(base_.comm(x0, xi)));
  }
  return acc;
}

GuptaLevinElem GuptaLevinGroup::sample(std::mt19937_64& rng,
                                       int max_support) const {
  Element g = static_cast<Element>(rng() % base_.order());
  GroupRingElem r;
  int terms = static_cast<int>(rng() % (max_support + 1));
  for (int t = 0; t < terms; ++t) {
    Element h = static_cast<Element>(rng() % base_.order());
    int c = 1 + static_cast<int>(rng() % (modulus() - 1));
    r = ring_.add(r, ring_.scale(c, ring_.unit(h)));
  }
  return make(g, std::move(r));
}

std::string GuptaLevinGroup::to_string(const GuptaLevinElem& a) const {
  std::ostringstream os;
  os << "(" << base_.label(a.g) << ", " << ring_.to_string(a.r) << ")";
  return os.str();
}

}  // namespace engel

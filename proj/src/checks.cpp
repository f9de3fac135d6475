#include "engel/checks.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <set>

namespace engel {

std::string outcome_name(Outcome o) {
  switch (o) {
    case Outcome::pass: return "pass";
    case Outcome::fail: return "fail";
    case Outcome::skipped: return "skipped";
  }
  return "?";
}

namespace {

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

std::uint64_t derive_seed(const CheckOptions& opts, const std::string& id,
                          const std::string& group) {
  return opts.seed ^ fnv1a(id) ^ (fnv1a(group) << 1);
}

// Shared state for one (check, group) run.
struct Ctx {
  GroupAnalysis& A;
  const FiniteGroup& G;
  const CheckOptions& opts;
  CheckResult res;
  std::mt19937_64 rng;

  Ctx(GroupAnalysis& a, const CheckOptions& o, const std::string& id)
      : A(a), G(a.group()), opts(o), rng(derive_seed(o, id, a.spec().to_string())) {
    res.id = id;
    res.group_name = a.spec().to_string();
    res.outcome = Outcome::pass;
    res.stats.seed = derive_seed(o, id, res.group_name);
  }

  bool exhaustive() const { return G.order() <= opts.exhaustive_max; }
  Element pick() { return static_cast<Element>(rng() % G.order()); }

  void fail(std::vector<Element> witness, const std::string& detail) {
    res.outcome = Outcome::fail;
    res.detail = detail;
    res.witness.clear();
    for (Element e : witness) res.witness.push_back(G.label(e));
  }
  void skip(const std::string& why) {
    res.outcome = Outcome::skipped;
    res.detail = why;
  }
  void count(long long k = 1) { res.stats.examined += k; }
};

int left_len(const Ctx& c, Element e) { return c.A.engel().left_length[e]; }
int right_len(const Ctx& c, Element e) { return c.A.engel().right_length[e]; }
bool in_L(const Ctx& c, Element e, int n) { return c.A.engel().in_left_level(e, n); }
bool in_R(const Ctx& c, Element e, int n) { return c.A.engel().in_right_level(e, n); }

std::vector<std::pair<Element, Element>> quantified_pairs(Ctx& c) {
  std::vector<std::pair<Element, Element>> pairs;
  const int n = c.G.order();
  if (c.exhaustive()) {
    pairs.reserve(static_cast<std::size_t>(n) * n);
    for (Element x = 0; x < n; ++x)
      for (Element y = 0; y < n; ++y) pairs.emplace_back(x, y);
  } else {
    c.res.stats.sampled = true;
    pairs.reserve(c.opts.samples);
    for (int i = 0; i < c.opts.samples; ++i)
      pairs.emplace_back(c.pick(), c.pick());
  }
  return pairs;
}

// ---------------------------------------------------------------------------
// (a) heineken_identity: [x,_{n+1} g] = ([g^{-x},_n g])^g for 1 <= n <= 6.
// ---------------------------------------------------------------------------
void heineken_identity(Ctx& c) {
  for (auto [x, g] : quantified_pairs(c)) {
    Element gmx = c.G.conj(c.G.inv(g), x);  // g^{-x}
    for (int n = 1; n <= 6; ++n) {
      Element lhs = engel_commutator(c.G, x, g, n + 1);
      Element rhs = c.G.conj(engel_commutator(c.G, gmx, g, n), g);
      c.count();
      if (lhs != rhs) {
        c.fail({x, g}, "identity fails at n=" + std::to_string(n));
        return;
      }
    }
  }
}

// ---------------------------------------------------------------------------
// (b) heineken_inclusions: R(G)^-1 in L(G); R_n(G)^-1 in L_{n+1}(G), n <= 6;
//     bounded-R^-1 in bounded-L. All via exact lengths.
// ---------------------------------------------------------------------------
void heineken_inclusions(Ctx& c) {
  for (Element a = 0; a < c.G.order(); ++a) {
    int r = right_len(c, a);
    if (r < 0) continue;
    Element ai = c.G.inv(a);
    int l = left_len(c, ai);
    c.count();
    if (l < 0) {
      c.fail({a}, "inverse of a right Engel element is not left Engel");
      return;
    }
    for (int n = 1; n <= 6; ++n) {
      if (r <= n && l > n + 1) {
        c.fail({a}, "a in R_" + std::to_string(n) + " but a^-1 not in L_" +
                        std::to_string(n + 1));
        return;
      }
    }
  }
}

// ---------------------------------------------------------------------------
// (c) baer_plotkin_L: L(G) = bounded-L(G) = HP(G), and HP is nilpotent.
// ---------------------------------------------------------------------------
void baer_plotkin_L(Ctx& c) {
  const EngelReport& e = c.A.engel();
  const std::vector<Element>& hp = c.A.radicals().hirsch_plotkin.elements;
  c.count(c.G.order());
  if (e.left_set != e.bounded_left) {
    c.fail({}, "L(G) differs from the bounded left Engel set");
    return;
  }
  if (e.left_set != hp) {
    c.fail({}, "L(G) differs from the Hirsch-Plotkin radical");
    return;
  }
  if (!nilpotency_class_subset(c.G, hp))
    c.fail({}, "Hirsch-Plotkin radical is not nilpotent");
}

// ---------------------------------------------------------------------------
// (d) held_Lbar: bounded-L(G) = Fitt(G).
// ---------------------------------------------------------------------------
void held_Lbar(Ctx& c) {
  c.count(c.G.order());
  if (c.A.engel().bounded_left != c.A.radicals().fitting.elements)
    c.fail({}, "bounded left Engel set differs from the Fitting subgroup");
}

// ---------------------------------------------------------------------------
// (e) peng_R: R(G) = bounded-R(G) = hypercenter.
// ---------------------------------------------------------------------------
void peng_R(Ctx& c) {
  const EngelReport& e = c.A.engel();
  c.count(c.G.order());
  if (e.right_set != e.bounded_right) {
    c.fail({}, "R(G) differs from the bounded right Engel set");
    return;
  }
  if (e.right_set != c.A.hypercenter_elements())
    c.fail({}, "R(G) differs from the hypercenter");
}

// ---------------------------------------------------------------------------
// (f) l2_characterization: x in L_2 iff <x>^G is abelian; L_2 subset of Fitt.
// ---------------------------------------------------------------------------
void l2_characterization(Ctx& c) {
  const ConjugacyInfo& cls = c.A.classes();
  for (std::size_t ci = 0; ci < cls.reps.size(); ++ci) {
    Element x = cls.reps[ci];
    std::vector<Element> ncl = closure_elements(c.G, cls.classes[ci]);
    bool l2 = in_L(c, x, 2);
    c.count();
    if (l2 != is_abelian_subset(c.G, ncl)) {
      c.fail({x}, l2 ? "left 2-Engel element with non-abelian normal closure"
                     : "abelian normal closure but not left 2-Engel");
      return;
    }
    if (l2 && !c.A.radicals().fitting.contains(x)) {
      c.fail({x}, "left 2-Engel element outside the Fitting subgroup");
      return;
    }
  }
}

// ---------------------------------------------------------------------------
// (g) l3_characterization: x in L_3 iff <x, x^y> is nilpotent of class <= 2
//     for all y; and powers of left 3-Engel elements are left 3-Engel.
// ---------------------------------------------------------------------------
void l3_characterization(Ctx& c) {
  const ConjugacyInfo& cls = c.A.classes();
  for (std::size_t ci = 0; ci < cls.reps.size(); ++ci) {
    Element x = cls.reps[ci];
    bool l3 = in_L(c, x, 3);
    // Distinct values of x^y form the conjugacy class of x.
    const std::vector<Element>& conjs = cls.classes[ci];
    bool all_small = true;
    Element bad = 0;
    std::size_t step = 1;
    if (l3 && !c.exhaustive() && conjs.size() > static_cast<std::size_t>(c.opts.samples)) {
      step = conjs.size() / c.opts.samples + 1;
      c.res.stats.sampled = true;
    }
    for (std::size_t i = 0; i < conjs.size(); i += step) {
      Element xc = conjs[i];
      std::vector<Element> H = closure_elements(c.G, {x, xc});
      auto cl2 = nilpotency_class_subset(c.G, H);
      c.count();
      if (!cl2 || *cl2 > 2) {
        all_small = false;
        bad = xc;
        if (!l3) break;  // witness found, equivalence holds for this x
        break;
      }
    }
    if (l3 && !all_small) {
      c.fail({x, bad}, "left 3-Engel element with <x,x^y> of class > 2");
      return;
    }
    if (!l3 && all_small && step == 1) {
      c.fail({x}, "all <x,x^y> have class <= 2 but x is not left 3-Engel");
      return;
    }
    if (l3) {
      Element p = x;
      while (p != 0) {
        if (!in_L(c, p, 3)) {
          c.fail({x, p}, "power of a left 3-Engel element is not left 3-Engel");
          return;
        }
        p = c.G.mul(p, x);
      }
    }
  }
}

// ---------------------------------------------------------------------------
// (h) involution_formula: x^2 = 1 implies [g,_n x] = [g,x]^((-2)^(n-1)).
// ---------------------------------------------------------------------------
void involution_formula(Ctx& c) {
  for (Element x = 0; x < c.G.order(); ++x) {
    if (x == 0 || c.G.mul(x, x) != 0) continue;
    for (Element g = 0; g < c.G.order(); ++g) {
      Element base = c.G.comm(g, x);
      long long e = 1;  // (-2)^(n-1)
      for (int n = 1; n <= 6; ++n) {
        c.count();
        if (engel_commutator(c.G, g, x, n) != c.G.pow(base, e)) {
          c.fail({g, x}, "involution formula fails at n=" + std::to_string(n));
          return;
        }
        e *= -2;
      }
    }
  }
}

// ---------------------------------------------------------------------------
// (i) kappe_r2_subgroup: R_2(G) is a subgroup, invariant under conjugation.
// ---------------------------------------------------------------------------
void kappe_r2_subgroup(Ctx& c) {
  std::vector<Element> r2;
  for (Element a = 0; a < c.G.order(); ++a)
    if (in_R(c, a, 2)) r2.push_back(a);
  c.count(static_cast<long long>(r2.size()));
  if (closure_elements(c.G, r2) != r2) {
    c.fail({}, "R_2(G) is not closed under the group operations");
    return;
  }
  for (Element a : r2)
    for (Element g : c.G.generators())
      if (!in_R(c, c.G.conj(a, g), 2)) {
        c.fail({a, g}, "R_2(G) is not conjugation-invariant");
        return;
      }
}

// ---------------------------------------------------------------------------
// (j) levi_kappe_identities: for a in R_2(G) and all x,y,z:
//     [a,x,y] = [a,y,x]^-1;  [a,[x,y]] = [a,x,y]^2;
//     [a^2,x,y,z] = [a,x,y,z]^2 = 1 and a^2 in zeta_3(G);  [a,[x,y],z] = 1.
// ---------------------------------------------------------------------------
void levi_kappe_identities(Ctx& c) {
  std::vector<Element> r2;
  for (Element a = 0; a < c.G.order(); ++a)
    if (in_R(c, a, 2)) r2.push_back(a);

  const std::vector<Element>& z3 = c.A.zeta(3);
  for (Element a : r2) {
    c.count();
    if (!std::binary_search(z3.begin(), z3.end(), c.G.mul(a, a))) {
      c.fail({a}, "a^2 is not in zeta_3(G) for a in R_2(G)");
      return;
    }
  }

  const int n = c.G.order();
  long long tuples = static_cast<long long>(r2.size()) * n * n * n;
  bool full = c.exhaustive() && tuples <= (1LL << 26);
  auto test = [&](Element a, Element x, Element y, Element z) -> bool {
    Element axy = c.G.comm(c.G.comm(a, x), y);
    c.count();
    if (axy != c.G.inv(c.G.comm(c.G.comm(a, y), x))) {
      c.fail({a, x, y}, "[a,x,y] != [a,y,x]^-1");
      return false;
    }
    if (c.G.comm(a, c.G.comm(x, y)) != c.G.mul(axy, axy)) {
      c.fail({a, x, y}, "[a,[x,y]] != [a,x,y]^2");
      return false;
    }
    if (c.G.comm(c.G.comm(a, c.G.comm(x, y)), z) != 0) {
      c.fail({a, x, y, z}, "[a,[x,y],z] != 1");
      return false;
    }
    Element axyz = c.G.comm(axy, z);
    Element sq = c.G.mul(axyz, axyz);
    Element a2xyz = c.G.comm(c.G.comm(c.G.comm(c.G.mul(a, a), x), y), z);
    if (a2xyz != sq || sq != 0) {
      c.fail({a, x, y, z}, "[a^2,x,y,z] = [a,x,y,z]^2 = 1 fails");
      return false;
    }
    return true;
  };
  if (full) {
    for (Element a : r2)
      for (Element x = 0; x < n; ++x)
        for (Element y = 0; y < n; ++y)
          for (Element z = 0; z < n; ++z)
            if (!test(a, x, y, z)) return;
  } else {
    c.res.stats.sampled = true;
    for (int i = 0; i < c.opts.samples; ++i) {
      Element a = r2[c.rng() % r2.size()];
      if (!test(a, c.pick(), c.pick(), c.pick())) return;
    }
  }
}

// ---------------------------------------------------------------------------
// (k) newell_r3: x in R_3(G) implies cl(<x>^G) <= 3.
// ---------------------------------------------------------------------------
void newell_r3(Ctx& c) {
  const ConjugacyInfo& cls = c.A.classes();
  for (std::size_t ci = 0; ci < cls.reps.size(); ++ci) {
    Element x = cls.reps[ci];
    if (!in_R(c, x, 3)) continue;
    std::vector<Element> ncl = closure_elements(c.G, cls.classes[ci]);
    auto cl = nilpotency_class_subset(c.G, ncl);
    c.count();
    if (!cl || *cl > 3) {
      c.fail({x}, "normal closure of a right 3-Engel element has class > 3");
      return;
    }
  }
}

// ---------------------------------------------------------------------------
// (l) abdollahi_l3_pair: a,b in L_3(G) implies <a,b> nilpotent of class <= 4.
// ---------------------------------------------------------------------------
void abdollahi_l3_pair(Ctx& c) {
  std::vector<Element> l3;
  for (Element a = 0; a < c.G.order(); ++a)
    if (in_L(c, a, 3)) l3.push_back(a);
  if (l3.empty()) return;

  auto test = [&](Element a, Element b) -> bool {
    std::vector<Element> H = closure_elements(c.G, {a, b});
    auto cl = nilpotency_class_subset(c.G, H);
    c.count();
    if (!cl || *cl > 4) {
      c.fail({a, b}, "<a,b> has class > 4 for left 3-Engel a, b");
      return false;
    }
    return true;
  };
  if (c.exhaustive()) {
    for (Element a : l3)
      for (Element b : l3)
        if (!test(a, b)) return;
  } else {
    c.res.stats.sampled = true;
    for (int i = 0; i < c.opts.samples; ++i)
      if (!test(l3[c.rng() % l3.size()], l3[c.rng() % l3.size()])) return;
  }
}

// ---------------------------------------------------------------------------
// (m) product_l2_ln: a in L_2, b in L_n implies ab, ba in L_{2n}.
// ---------------------------------------------------------------------------
void product_l2_ln(Ctx& c) {
  const int n = c.G.order();
  for (Element a = 0; a < n; ++a) {
    if (!in_L(c, a, 2)) continue;
    for (Element b = 0; b < n; ++b) {
      int lb = left_len(c, b);
      if (lb < 0) continue;
      c.count();
      int lab = left_len(c, c.G.mul(a, b));
      int lba = left_len(c, c.G.mul(b, a));
      if (lab < 0 || lab > 2 * lb || lba < 0 || lba > 2 * lb) {
        c.fail({a, b}, "product of L_2 and L_n elements escapes L_{2n}");
        return;
      }
    }
  }
}

// ---------------------------------------------------------------------------
// (n) product_r2_r3: a in R_2, b in R_3 gives ab in R_3; b,c in R_3 gives
//     bc in R_4.
// ---------------------------------------------------------------------------
void product_r2_r3(Ctx& c) {
  const int n = c.G.order();
  std::vector<Element> r2, r3;
  for (Element e = 0; e < n; ++e) {
    if (in_R(c, e, 2)) r2.push_back(e);
    if (in_R(c, e, 3)) r3.push_back(e);
  }
  for (Element a : r2)
    for (Element b : r3) {
      c.count();
      if (!in_R(c, c.G.mul(a, b), 3)) {
        c.fail({a, b}, "R_2 * R_3 product escapes R_3");
        return;
      }
    }
  for (Element b : r3)
    for (Element d : r3) {
      c.count();
      if (!in_R(c, c.G.mul(b, d), 4)) {
        c.fail({b, d}, "R_3 * R_3 product escapes R_4");
        return;
      }
    }
}

// ---------------------------------------------------------------------------
// (o) wreath_separation: in A wr (<x> x <y>) with A of exponent 2^k:
//     x, y, xy in L_{k+1} \ L_k and a*x not in L_{k+1} for 1 != a in A.
// ---------------------------------------------------------------------------
void wreath_separation(Ctx& c) {
  const auto& marks = c.G.marks();
  const auto& sets = c.G.mark_sets();
  auto base_it = sets.find("wreath_base_copy");
  auto top_it = sets.find("wreath_top_copy");
  if (!marks.count("x") || !marks.count("y") || base_it == sets.end() ||
      top_it == sets.end()) {
    c.skip("group is not a tagged wreath product");
    return;
  }
  Element x = marks.at("x"), y = marks.at("y");
  if (top_it->second.size() != 4 || c.G.element_order(x) != 2 ||
      c.G.element_order(y) != 2 || c.G.mul(x, y) != c.G.mul(y, x)) {
    c.skip("top group is not C2 x C2");
    return;
  }
  long long ex = 1;
  for (Element a : base_it->second)
    ex = std::lcm(ex, static_cast<long long>(c.G.element_order(a)));
  int k = 0;
  while ((1LL << (k + 1)) <= ex) ++k;
  if ((1LL << k) != ex || k < 1) {
    c.skip("base group exponent is not a power of 2");
    return;
  }
  c.res.stats.note = "k=" + std::to_string(k);

  for (Element t : {x, y, c.G.mul(x, y)}) {
    c.count();
    if (left_len(c, t) != k + 1) {
      c.fail({t}, "top element is not exactly left (k+1)-Engel");
      return;
    }
  }
  for (Element a : base_it->second) {
    if (a == 0) continue;
    c.count();
    Element ax = c.G.mul(a, x);
    if (in_L(c, ax, k + 1)) {
      c.fail({a, x}, "a*x lies in L_" + std::to_string(k + 1) +
                         " for the base element a of order " +
                         std::to_string(c.G.element_order(a)));
      return;
    }
  }
}

// ---------------------------------------------------------------------------
// (p) lemma_xy: if [x,_n y] = 1 with n <= 6 then
//     <x>^<y> = <x,[x,y],...,[x,_{n-1} y]> = <x, x^y, ..., x^{y^{n-1}}>.
// ---------------------------------------------------------------------------
void lemma_xy(Ctx& c) {
  const int n = c.G.order();
  auto test = [&](Element x, Element y, int steps) -> bool {
    c.count();
    std::vector<Element> gens1, gens2, gens3;
    int oy = c.G.element_order(y);
    Element xc = x;
    for (int i = 0; i < oy; ++i) {
      gens1.push_back(xc);
      xc = c.G.conj(xc, y);
    }
    Element acc = x;
    gens2.push_back(x);
    for (int i = 1; i < steps; ++i) {
      acc = c.G.comm(acc, y);
      gens2.push_back(acc);
    }
    xc = x;
    for (int i = 0; i < steps; ++i) {
      gens3.push_back(xc);
      xc = c.G.conj(xc, y);
    }
    std::vector<Element> s1 = closure_elements(c.G, gens1);
    std::vector<Element> s2 = closure_elements(c.G, gens2);
    std::vector<Element> s3 = closure_elements(c.G, gens3);
    if (s1 != s2 || s1 != s3) {
      c.fail({x, y}, "the three subgroup expressions differ at n=" +
                         std::to_string(steps));
      return false;
    }
    return true;
  };

  if (c.exhaustive()) {
    for (Element y = 0; y < n; ++y) {
      std::vector<int> dist = engel_distances(c.G, y);
      for (Element x = 0; x < n; ++x) {
        int steps = dist[x];
        if (steps >= 1 && steps <= 6 && !test(x, y, steps)) return;
      }
    }
  } else {
    c.res.stats.sampled = true;
    for (int i = 0; i < c.opts.samples; ++i) {
      Element x = c.pick(), y = c.pick();
      Element acc = x;
      int steps = -1;
      for (int s = 0; s <= 6; ++s) {
        if (acc == 0) {
          steps = s;
          break;
        }
        acc = c.G.comm(acc, y);
      }
      if (steps >= 1 && !test(x, y, steps)) return;
    }
  }
}

// ---------------------------------------------------------------------------
// (q) plotkin_normalizer: for nilpotent H generated by <= 2 left Engel
//     elements and not normal, some element of N_G(H) \ H is conjugate to an
//     element of H intersect L(G).
// ---------------------------------------------------------------------------
void plotkin_normalizer(Ctx& c) {
  c.res.stats.note = "H restricted to closures of <= 2 left Engel elements";
  const std::vector<Element>& L = c.A.engel().left_set;
  if (L.empty()) return;
  const ConjugacyInfo& cls = c.A.classes();

  std::set<std::vector<Element>> seen;
  auto test = [&](Element u, Element v) -> bool {
    std::vector<Element> H = closure_elements(c.G, {u, v});
    if (H.size() == static_cast<std::size_t>(c.G.order())) return true;
    if (!seen.insert(H).second) return true;
    if (!nilpotency_class_subset(c.G, H)) return true;  // hypothesis not met
    if (is_normal(c.G, H)) return true;
    c.count();
    Subgroup Hs = make_subgroup(c.G, H);
    Subgroup N = normalizer(c.G, Hs);
    // classes of elements of H that are left Engel
    std::set<int> hl_classes;
    for (Element h : H)
      if (left_len(c, h) >= 0) hl_classes.insert(cls.class_of[h]);
    for (Element xe : N.elements) {
      if (Hs.contains(xe)) continue;
      if (hl_classes.count(cls.class_of[xe])) return true;
    }
    c.fail({u, v},
           "no element of N_G(H) \\ H is conjugate into H intersect L(G)");
    return false;
  };

  if (c.exhaustive()) {
    for (Element u : L)
      for (Element v : L)
        if (!test(u, v)) return;
  } else {
    c.res.stats.sampled = true;
    for (int i = 0; i < c.opts.samples; ++i)
      if (!test(L[c.rng() % L.size()], L[c.rng() % L.size()])) return;
  }
}

// ---------------------------------------------------------------------------
// (r) gruenberg_rho_chain: zeta_omega <= rho_bar <= B, hypercenter <= rho <=
//     Gr, rho <= R.
// ---------------------------------------------------------------------------
void gruenberg_rho_chain(Ctx& c) {
  const std::vector<Element>& rho = c.A.rho();
  const std::vector<Element>& rho_bar = c.A.rho_bar();
  const std::vector<Element>& hyper = c.A.hypercenter_elements();
  auto subset = [](const std::vector<Element>& a, const std::vector<Element>& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
  };
  c.count(c.G.order());
  // zeta_omega = hypercenter in a finite group (the series stabilizes at a
  // finite stage).
  if (!subset(hyper, rho_bar)) {
    c.fail({}, "zeta_omega is not contained in rho_bar");
    return;
  }
  if (!subset(hyper, rho)) {
    c.fail({}, "hypercenter is not contained in rho");
    return;
  }
  if (!subset(rho, c.A.radicals().gruenberg.elements)) {
    c.fail({}, "rho is not contained in the Gruenberg radical");
    return;
  }
  if (!subset(rho_bar, c.A.radicals().baer.elements)) {
    c.fail({}, "rho_bar is not contained in the Baer radical");
    return;
  }
  if (!subset(rho, c.A.engel().right_set)) {
    c.fail({}, "rho is not contained in R(G)");
    return;
  }
  if (!subset(rho_bar, c.A.engel().bounded_right))
    c.fail({}, "rho_bar is not contained in the bounded right Engel set");
}

// ---------------------------------------------------------------------------
// (t) inclusion checks.
// ---------------------------------------------------------------------------
void hp_in_L(Ctx& c) {
  for (Element e : c.A.radicals().hirsch_plotkin.elements) {
    c.count();
    if (left_len(c, e) < 0) {
      c.fail({e}, "Hirsch-Plotkin element is not left Engel");
      return;
    }
  }
}

void baer_in_Lbar(Ctx& c) {
  for (Element e : c.A.radicals().baer.elements) {
    c.count();
    if (left_len(c, e) < 0) {
      c.fail({e}, "Baer radical element is not a bounded left Engel element");
      return;
    }
  }
}

void zomega_in_Rbar(Ctx& c) {
  for (Element e : c.A.hypercenter_elements()) {
    c.count();
    if (right_len(c, e) < 0) {
      c.fail({e}, "zeta_omega element is not a bounded right Engel element");
      return;
    }
  }
}

using CheckFn = void (*)(Ctx&);

const std::map<std::string, CheckFn>& enumerable_checks() {
  static const std::map<std::string, CheckFn> table = {
      {"heineken_identity", heineken_identity},
      {"heineken_inclusions", heineken_inclusions},
      {"baer_plotkin_L", baer_plotkin_L},
      {"held_Lbar", held_Lbar},
      {"peng_R", peng_R},
      {"l2_characterization", l2_characterization},
      {"l3_characterization", l3_characterization},
      {"involution_formula", involution_formula},
      {"kappe_r2_subgroup", kappe_r2_subgroup},
      {"levi_kappe_identities", levi_kappe_identities},
      {"newell_r3", newell_r3},
      {"abdollahi_l3_pair", abdollahi_l3_pair},
      {"product_l2_ln", product_l2_ln},
      {"product_r2_r3", product_r2_r3},
      {"wreath_separation", wreath_separation},
      {"lemma_xy", lemma_xy},
      {"plotkin_normalizer", plotkin_normalizer},
      {"gruenberg_rho_chain", gruenberg_rho_chain},
      {"hp_in_L", hp_in_L},
      {"baer_in_Lbar", baer_in_Lbar},
      {"zomega_in_Rbar", zomega_in_Rbar},
  };
  return table;
}

}  // namespace

const std::vector<std::string>& check_catalog() {
  static const std::vector<std::string> ids = {
      "heineken_identity",

      "heineken_inclusions",
      "baer_plotkin_L",
      "held_Lbar",
      "peng_R",
      "l2_characterization",
      "l3_characterization",
      "involution_formula",
      "kappe_r2_subgroup",
      "levi_kappe_identities",
      "newell_r3",
      "abdollahi_l3_pair",
      "product_l2_ln",
      "product_r2_r3",
      "wreath_separation",
      "lemma_xy",
      "plotkin_normalizer",
      "gruenberg_rho_chain",
      "gupta_levin_6engel",
      "hp_in_L",
      "baer_in_Lbar",
      "zomega_in_Rbar",
  };
  return ids;
}

bool check_exists(const std::string& id) {
  const auto& ids = check_catalog();
  return std::find(ids.begin(), ids.end(), id) != ids.end();
}

bool check_supports_blackbox(const std::string& id) {
  return id == "gupta_levin_6engel" || id == "heineken_identity";
}

bool check_supports_enumerable(const std::string& id) {
  return id != "gupta_levin_6engel";
}

CheckResult run_check(const std::string& id, GroupAnalysis& A,
                      const CheckOptions& opts) {
  if (!check_exists(id)) throw usage_error("unknown check id '" + id + "'");
  Ctx c(A, opts, id);
  if (!check_supports_enumerable(id)) {
    c.skip("check requires a black-box group");
    return c.res;
  }
  enumerable_checks().at(id)(c);
  return c.res;
}

// ---------------------------------------------------------------------------
// Black-box checks.
// ---------------------------------------------------------------------------

namespace {

CheckResult gupta_levin_check(const GuptaLevinGroup& M, const CheckOptions& opts) {
  CheckResult res;
  res.id = "gupta_levin_6engel";
  res.group_name = M.name();
  res.outcome = Outcome::pass;
  res.stats.seed = derive_seed(opts, res.id, M.name());
  res.stats.sampled = true;
  std::mt19937_64 rng(res.stats.seed);

  const int p = M.modulus();
  const int nil_power = p == 2 ? 4 : p;      // (g-1)^nil_power = 0
  const int engel_n = nil_power + 2;         // (p+2)-Engel; 6 when p = 2
  const long long m_exp = p == 2 ? 8 : static_cast<long long>(p) * p;
  const GroupRing& ring = M.ring();
  res.stats.note = "rank=" + std::to_string(M.rank()) +
                   ", engel_n=" + std::to_string(engel_n);

  auto fail = [&](std::vector<std::string> witness, const std::string& what) {
    res.outcome = Outcome::fail;
    res.witness = std::move(witness);
    res.detail = what;
  };
  auto power = [&](GuptaLevinElem e, long long k) {
    GuptaLevinElem acc = M.identity();
    for (long long i = 0; i < k; ++i) acc = M.mul(acc, e);
    return acc;
  };

  // (g-1)^nil_power = 0 in Z_p[G] for sampled base elements g.
  for (int i = 0; i < 100; ++i) {
    Element g = static_cast<Element>(rng() % M.base().order());
    GroupRingElem t = ring.augmentation_term(g);
    GroupRingElem acc = ring.one();
    for (int j = 0; j < nil_power; ++j) acc = ring.mul(acc, t);
    ++res.stats.examined;
    if (!acc.is_zero()) {
      fail({M.base().label(g)}, "(g-1)^" + std::to_string(nil_power) +
                                    " is nonzero in the group ring");
      return res;
    }
  }

  // Kernel elements (1,s) vanish after nil_power Engel steps against any B.
  for (int i = 0; i < 200; ++i) {
    GuptaLevinElem s = M.sample(rng);
    GuptaLevinElem A = M.make(0, s.r);  // (1, s)
    GuptaLevinElem B = M.sample(rng);
    ++res.stats.examined;
    if (!M.is_identity(engel_commutator(M, A, B, nil_power))) {
      fail({M.to_string(A), M.to_string(B)},
           "[A,_" + std::to_string(nil_power) + " B] != 1 for kernel A");
      return res;
    }
  }

  // Full Engel law on sampled pairs.
  for (int i = 0; i < 200; ++i) {
    GuptaLevinElem X = M.sample(rng);
    GuptaLevinElem Z = M.sample(rng);
    ++res.stats.examined;
    if (!M.is_identity(engel_commutator(M, X, Z, engel_n))) {
      fail({M.to_string(X), M.to_string(Z)},
           "group is not " + std::to_string(engel_n) + "-Engel on a sample");
      return res;
    }
  }

  // Exponent of M and of gamma_3(M); triple commutators land in the abelian
  // kernel (base part trivial), which is the abelian-by-class-2 shape.
  for (int i = 0; i < 100; ++i) {
    GuptaLevinElem m1 = M.sample(rng);
    GuptaLevinElem m2 = M.sample(rng);
    GuptaLevinElem m3 = M.sample(rng);
    GuptaLevinElem t = commutator(M, commutator(M, m1, m2), m3);
    ++res.stats.examined;
    if (t.g != 0) {
      fail({M.to_string(m1), M.to_string(m2), M.to_string(m3)},
           "triple commutator has a nontrivial base part");
      return res;
    }
    if (!M.is_identity(power(t, p))) {
      fail({M.to_string(t)}, "gamma_3 sample does not have exponent " +
                                 std::to_string(p));
      return res;
    }
    if (!M.is_identity(power(m1, m_exp))) {
      fail({M.to_string(m1)}, "sample element does not satisfy m^" +
                                  std::to_string(m_exp) + " = 1");
      return res;
    }
  }
  // Exponent witness: X_0 has order exactly m_exp.
  if (M.is_identity(power(M.X(0), m_exp / p))) {
    fail({"X0"}, "X_0 has order smaller than " + std::to_string(m_exp));
    return res;
  }

  // Non-nilpotent normal closure witnesses: u_m != 0 and
  // [Y,[X_0,X_1],...,[X_0,X_m]] = (1, u_m) for m < rank.
  for (int m = 1; m < M.rank(); ++m) {
    GroupRingElem um = M.u(m);
    ++res.stats.examined;
    if (um.is_zero()) {
      fail({"u_" + std::to_string(m)}, "witness u_m vanishes");
      return res;
    }
    GuptaLevinElem acc = M.Y();
    for (int i = 1; i <= m; ++i)
      acc = commutator(M, acc, commutator(M, M.X(0), M.X(i)));
    if (!(acc == M.make(0, um)) || M.is_identity(acc)) {
      fail({"u_" + std::to_string(m)},
           "[Y,[X0,X1],...,[X0,Xm]] does not equal (1, u_m) != 1");
      return res;
    }
  }
  return res;
}

CheckResult heineken_identity_blackbox(const GuptaLevinGroup& M,
                                       const CheckOptions& opts) {
  CheckResult res;
  res.id = "heineken_identity";
  res.group_name = M.name();
  res.outcome = Outcome::pass;
  res.stats.seed = derive_seed(opts, res.id, M.name());
  res.stats.sampled = true;
  std::mt19937_64 rng(res.stats.seed);
  for (int i = 0; i < opts.samples; ++i) {
    GuptaLevinElem x = M.sample(rng);
    GuptaLevinElem g = M.sample(rng);
    GuptaLevinElem gmx = M.mul(M.mul(M.inv(x), M.inv(g)), x);  // g^{-x}
    for (int n = 1; n <= 6; ++n) {
      ++res.stats.examined;
      GuptaLevinElem lhs = engel_commutator(M, x, g, n + 1);
      GuptaLevinElem rhs = M.mul(M.mul(M.inv(g), engel_commutator(M, gmx, g, n)), g);
      if (!(lhs == rhs)) {
        res.outcome = Outcome::fail;
        res.witness = {M.to_string(x), M.to_string(g)};
        res.detail = "identity fails at n=" + std::to_string(n);
        return res;
      }
    }
  }
  return res;
}

}  // namespace

CheckResult run_check(const std::string& id, const GuptaLevinGroup& M,
                      const CheckOptions& opts) {
  if (!check_exists(id)) throw usage_error("unknown check id '" + id + "'");
  if (id == "gupta_levin_6engel") return gupta_levin_check(M, opts);
  if (id == "heineken_identity") return heineken_identity_blackbox(M, opts);
  CheckResult res;
  res.id = id;
  res.group_name = M.name();
  res.outcome = Outcome::skipped;
  res.detail = "check requires an enumerable group";
  return res;
}

// ---------------------------------------------------------------------------
// Counterexample search harness.
// ---------------------------------------------------------------------------

std::optional<CheckResult> search_witness(const std::string& predicate,
                                          const std::vector<GroupSpec>& zoo,
                                          const AnalysisOptions& opts) {
  if (predicate != "macdonald_r3" && predicate != "macdonald_rn_ln")
    throw usage_error("unknown search predicate '" + predicate + "'");
  for (const GroupSpec& spec : zoo) {
    if (spec.is_black_box()) continue;
    GroupAnalysis A(spec, opts);
    const FiniteGroup& G = A.group();
    const EngelReport& e = A.engel();
    for (Element a = 0; a < G.order(); ++a) {
      bool found = false;
      std::string detail;
      if (predicate == "macdonald_r3") {
        Element ai = G.inv(a);
        if (e.in_right_level(a, 3) && !e.in_right_level(ai, 3)) {
          found = true;
          Element a2 = G.mul(a, a);
          detail = "a in R_3, a^-1 not in R_3; a^2 " +
                   std::string(e.in_right_level(a2, 3) ? "in" : "not in") +
                   " R_3";
        }
      } else {
        int r = e.right_length[a];
        if (r >= 0) {
          int la = e.left_length[a];
          int li = e.left_length[G.inv(a)];
          if ((la < 0 || la > r) && (li < 0 || li > r)) {
            found = true;
            detail = "a in R_" + std::to_string(r) + " but neither a nor a^-1 in L_" +
                     std::to_string(r);
          }
        }
      }
      if (found) {
        CheckResult res;
        res.id = predicate;
        res.group_name = spec.to_string();
        res.outcome = Outcome::pass;  // witness located
        res.witness = {G.label(a)};
        res.detail = detail;
        res.stats.examined = a + 1;
        return res;
      }
    }
  }
  return std::nullopt;
}

std::vector<GroupSpec> default_zoo() {
  static const char* specs[] = {
      "C2",
      "C6",
      "C2xC2",
      "D8",
      "D16",
      "Q8",
      "S3",
      "S4",
      "A4",
      "wreath(C2,C2)",
      "wreath(C2,C2xC2)",
      "wreath(C4,C2xC2)",
      "wreath(C3,C3)",
      "fnil(p=3,k=2)",
      "fnil(p=3,k=3)",
      "fnil4(k=2)",
      "fnil4(k=3)",
  };
  std::vector<GroupSpec> zoo;
  for (const char* s : specs) zoo.push_back(parse_group_spec(s));
  return zoo;
}

std::vector<GroupSpec> default_zoo_full() {
  std::vector<GroupSpec> zoo = default_zoo();
  zoo.push_back(parse_group_spec("gl(p=2,k=3)"));
  return zoo;
}

std::vector<GroupSpec> default_search_zoo() {
  static const char* specs[] = {
      "C2",      "C4",        "C8",
      "C2xC2",   "C4xC2",     "C4xC4",
      "C8xC2",   "D8",        "D16",
      "D32",     "Q8",        "D8xC2",
      "Q8xC2",   "D16xC2",    "wreath(C2,C2)",
      "wreath(C4,C2)", "wreath(C2,C4)", "wreath(C2,C2xC2)",
      "wreath(C4,C2xC2)", "wreath(C4,C4)", "wreath(C2,C8)",
      "wreath(D8,C2)", "wreath(Q8,C2)", "fnil4(k=2)",
      "fnil4(k=3)", "fnil4(k=2)xC4",
  };
  std::vector<GroupSpec> zoo;
  for (const char* s : specs) zoo.push_back(parse_group_spec(s));
  return zoo;
}

}  // namespace engel

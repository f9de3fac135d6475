#include "engel/structure.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace engel {

Subgroup normal_closure(const FiniteGroup& G, const std::vector<Element>& seed) {
  std::vector<Element> conj_seed;
  conj_seed.reserve(seed.size() * G.order());
  for (Element s : seed) {
    G.validate(s);
    for (Element g = 0; g < G.order(); ++g) conj_seed.push_back(G.conj(s, g));
  }
  std::sort(conj_seed.begin(), conj_seed.end());
  conj_seed.erase(std::unique(conj_seed.begin(), conj_seed.end()),
                  conj_seed.end());
  Subgroup H;
  H.parent = &G;
  H.elements = closure_elements(G, conj_seed);
  H.witness_generators = seed;
  std::sort(H.witness_generators.begin(), H.witness_generators.end());
  H.witness_generators.erase(std::unique(H.witness_generators.begin(),
                                         H.witness_generators.end()),
                             H.witness_generators.end());
  return H;
}

std::optional<int> subnormal_defect_within(const FiniteGroup& G,
                                           const std::vector<Element>& ambient,
                                           const std::vector<Element>& sub,
                                           const std::vector<Element>& sub_gens) {
  std::vector<Element> K = ambient;
  int defect = 0;
  for (;;) {
    if (K.size() == sub.size()) return defect;
    // normal closure of <sub_gens> inside K
    std::vector<Element> seeds;
    seeds.reserve(sub_gens.size() * K.size());
    for (Element h : sub_gens)
      for (Element k : K) seeds.push_back(G.conj(h, k));
    std::sort(seeds.begin(), seeds.end());
    seeds.erase(std::unique(seeds.begin(), seeds.end()), seeds.end());
    std::vector<Element> next = closure_elements(G, seeds);
    if (next.size() == K.size()) return std::nullopt;  // stuck above sub
    K = std::move(next);
    ++defect;
  }
}

std::optional<int> subnormal_defect(const FiniteGroup& G, const Subgroup& H) {
  if (H.parent != &G)
    throw usage_error("subnormal_defect: subgroup of a different group");
  std::vector<Element> all(G.order());
  std::iota(all.begin(), all.end(), 0);
  const std::vector<Element>& gens =
      H.witness_generators.empty() ? H.elements : H.witness_generators;
  return subnormal_defect_within(G, all, H.elements, gens);
}

namespace {

std::vector<Element> commutator_span(const FiniteGroup& G,
                                     const std::vector<Element>& A,
                                     const std::vector<Element>& B) {
  std::vector<std::uint8_t> seen(G.order(), 0);
  std::vector<Element> seeds;
  for (Element a : A)
    for (Element b : B) {
      Element c = G.comm(a, b);
      if (!seen[c]) {
        seen[c] = 1;
        seeds.push_back(c);
      }
    }
  std::sort(seeds.begin(), seeds.end());
  return closure_elements(G, seeds);
}

Subgroup wrap(const FiniteGroup& G, std::vector<Element> elems) {
  Subgroup H;
  H.parent = &G;
  H.witness_generators = greedy_generators(G, elems);
  H.elements = std::move(elems);
  return H;
}

}  // namespace

SeriesResult series(const FiniteGroup& G, SeriesKind kind) {
  SeriesResult res;
  res.kind = kind;
  const int n = G.order();
  std::vector<Element> all(n);
  std::iota(all.begin(), all.end(), 0);

  std::vector<std::vector<Element>> terms;
  if (kind == SeriesKind::upper_central) {
    std::vector<std::uint8_t> cur_mask(n, 0);
    cur_mask[0] = 1;
    terms.push_back({0});
    for (;;) {
      // zeta_{i+1} = {g : [g,x] in zeta_i for all x}
      std::vector<Element> next;
      for (Element g = 0; g < n; ++g) {
        bool ok = true;
        for (Element x = 0; x < n && ok; ++x)
          if (!cur_mask[G.comm(g, x)]) ok = false;
        if (ok) next.push_back(g);
      }
      bool same = next == terms.back();
      terms.push_back(next);
      if (same) break;
      cur_mask = element_mask(G, next);
    }
  } else {
    terms.push_back(all);
    for (;;) {
      const std::vector<Element>& cur = terms.back();
      std::vector<Element> next = (kind == SeriesKind::lower_central)
                                      ? commutator_span(G, cur, all)
                                      : commutator_span(G, cur, cur);
      bool same = next == cur;
      terms.push_back(std::move(next));
      if (same) break;
    }
  }

  for (auto& t : terms) res.terms.push_back(wrap(G, std::move(t)));
  res.stabilized = true;
  res.length = static_cast<int>(res.terms.size()) - 2;
  return res;
}

Subgroup hypercenter(const FiniteGroup& G) {
  SeriesResult s = series(G, SeriesKind::upper_central);
  return s.terms.back();
}

Subgroup center(const FiniteGroup& G) {
  std::vector<Element> z;
  for (Element g = 0; g < G.order(); ++g) {
    bool ok = true;
    for (Element x = 0; x < G.order() && ok; ++x)
      if (G.mul(g, x) != G.mul(x, g)) ok = false;
    if (ok) z.push_back(g);
  }
  return wrap(G, std::move(z));
}

std::optional<int> nilpotency_class(const FiniteGroup& G) {
  SeriesResult s = series(G, SeriesKind::lower_central);
  if (!s.terms.back().is_trivial()) return std::nullopt;
  return s.length;
}

std::optional<int> derived_length(const FiniteGroup& G) {
  SeriesResult s = series(G, SeriesKind::derived);
  if (!s.terms.back().is_trivial()) return std::nullopt;
  return s.length;
}

bool is_abelian_subset(const FiniteGroup& G, const std::vector<Element>& H) {
  for (std::size_t i = 0; i < H.size(); ++i)
    for (std::size_t j = i + 1; j < H.size(); ++j)
      if (G.mul(H[i], H[j]) != G.mul(H[j], H[i])) return false;
  return true;
}

std::optional<int> nilpotency_class_subset(const FiniteGroup& G,
                                           const std::vector<Element>& H) {
  std::vector<Element> cur = H;
  int cls = 0;
  for (;;) {
    if (cur.size() == 1) return cls;
    std::vector<Element> next = commutator_span(G, cur, H);
    if (next.size() == cur.size()) return std::nullopt;
    cur = std::move(next);
    ++cls;
  }
}

ConjugacyInfo conjugacy_classes(const FiniteGroup& G) {
  ConjugacyInfo info;
  const int n = G.order();
  info.class_of.assign(n, -1);
  for (Element e = 0; e < n; ++e) {
    if (info.class_of[e] >= 0) continue;
    int id = static_cast<int>(info.reps.size());
    info.reps.push_back(e);
    std::vector<Element> orbit{e};
    info.class_of[e] = id;
    for (std::size_t qi = 0; qi < orbit.size(); ++qi) {
      for (Element g : G.generators()) {
        Element c = G.conj(orbit[qi], g);
        if (info.class_of[c] < 0) {
          info.class_of[c] = id;
          orbit.push_back(c);
        }
      }
    }
    std::sort(orbit.begin(), orbit.end());
    info.classes.push_back(std::move(orbit));
  }
  return info;
}

CyclicIndex cyclic_subgroup_index(const FiniteGroup& G) {
  CyclicIndex idx;
  const int n = G.order();
  idx.sub_of.assign(n, -1);
  std::map<std::vector<Element>, int> ids;
  for (Element e = 0; e < n; ++e) {
    std::vector<Element> powers;
    Element cur = e;
    powers.push_back(0);
    while (cur != 0) {
      powers.push_back(cur);
      cur = G.mul(cur, e);
    }
    std::sort(powers.begin(), powers.end());
    powers.erase(std::unique(powers.begin(), powers.end()), powers.end());
    auto [it, fresh] = ids.emplace(std::move(powers), static_cast<int>(idx.subs.size()));
    if (fresh) {
      idx.subs.push_back(it->first);
      idx.sub_gen.push_back(e);
    }
    idx.sub_of[e] = it->second;
  }

  // union-find over conjugation
  const int m = static_cast<int>(idx.subs.size());
  std::vector<int> parent(m);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  };
  for (int id = 0; id < m; ++id)
    for (Element g : G.generators()) {
      int other = idx.sub_of[G.conj(idx.sub_gen[id], g)];
      int ra = find(id), rb = find(other);
      if (ra != rb) parent[std::max(ra, rb)] = std::min(ra, rb);
    }
  idx.orbit_of.assign(m, -1);
  for (int id = 0; id < m; ++id) {
    int root = find(id);
    if (idx.orbit_of[root] < 0) {
      idx.orbit_of[root] = static_cast<int>(idx.orbit_rep.size());
      idx.orbit_rep.push_back(root);
    }
    idx.orbit_of[id] = idx.orbit_of[root];
  }
  return idx;
}

int group_exponent(const FiniteGroup& G) {
  long long e = 1;
  for (Element g = 0; g < G.order(); ++g)
    e = std::lcm<long long>(e, G.element_order(g));
  return static_cast<int>(e);
}

RadicalReport radicals(const FiniteGroup& G) {
  const int n = G.order();
  ConjugacyInfo classes = conjugacy_classes(G);
  CyclicIndex cyc = cyclic_subgroup_index(G);

  // Fitting: x belongs iff the normal closure of x is nilpotent. The normal
  // closure (and its nilpotency) is constant on conjugacy classes.
  std::vector<std::uint8_t> class_fit(classes.reps.size(), 0);
  for (std::size_t c = 0; c < classes.reps.size(); ++c) {
    std::vector<Element> ncl = closure_elements(G, classes.classes[c]);
    class_fit[c] = nilpotency_class_subset(G, ncl).has_value() ? 1 : 0;
  }
  std::vector<Element> fit_set;
  for (Element e = 0; e < n; ++e)
    if (class_fit[classes.class_of[e]]) fit_set.push_back(e);

  // Baer: x belongs iff <x> is subnormal in G. Constant on conjugation
  // orbits of cyclic subgroups.
  std::vector<Element> all(n);
  std::iota(all.begin(), all.end(), 0);
  std::vector<std::uint8_t> orbit_subnormal(cyc.orbit_rep.size(), 0);
  for (std::size_t o = 0; o < cyc.orbit_rep.size(); ++o) {
    int sid = cyc.orbit_rep[o];
    orbit_subnormal[o] =
        subnormal_defect_within(G, all, cyc.subs[sid], {cyc.sub_gen[sid]})
            .has_value();
  }
  std::vector<Element> baer_set;
  for (Element e = 0; e < n; ++e)
    if (orbit_subnormal[cyc.orbit_of[cyc.sub_of[e]]]) baer_set.push_back(e);

  if (closure_elements(G, fit_set) != fit_set)
    throw invariant_violation("Fitting candidate set is not a subgroup");
  if (closure_elements(G, baer_set) != baer_set)
    throw invariant_violation("Baer candidate set is not a subgroup");
  if (!is_normal(G, fit_set))
    throw invariant_violation("Fitting subgroup is not normal");
  if (!nilpotency_class_subset(G, fit_set))
    throw invariant_violation("Fitting subgroup is not nilpotent");
  // Finite-case identification, cross-checked rather than assumed.
  if (fit_set != baer_set)
    throw invariant_violation("Fitting and Baer radicals differ on a finite group");

  RadicalReport rep;
  rep.fitting = make_subgroup(G, fit_set);
  rep.baer = make_subgroup(G, baer_set);
  rep.gruenberg = rep.baer;          // ascendant = subnormal (finite lattice)
  rep.hirsch_plotkin = rep.fitting;  // locally nilpotent = nilpotent (finite)
  return rep;
}

Subgroup radical(const FiniteGroup& G, RadicalKind kind) {
  RadicalReport rep = radicals(G);
  switch (kind) {
    case RadicalKind::fitting: return rep.fitting;
    case RadicalKind::baer: return rep.baer;
    case RadicalKind::gruenberg: return rep.gruenberg;
    case RadicalKind::hirsch_plotkin: return rep.hirsch_plotkin;
  }
  throw usage_error("unknown radical kind");
}

Subgroup normalizer(const FiniteGroup& G, const Subgroup& H) {
  if (H.parent != &G)
    throw usage_error("normalizer: subgroup of a different group");
  std::vector<std::uint8_t> mask = element_mask(G, H.elements);
  const std::vector<Element>& gens =
      H.witness_generators.empty() ? H.elements : H.witness_generators;
  std::vector<Element> result;
  for (Element g = 0; g < G.order(); ++g) {
    bool ok = true;
    for (Element h : gens)
      if (!mask[G.conj(h, g)]) {
        ok = false;
        break;
      }
    if (ok) result.push_back(g);
  }
  return make_subgroup(G, std::move(result));
}

}  // namespace engel

#include "engel/engel_sets.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "engel/structure.hpp"

namespace engel {

namespace {

// Orbit of start under z -> [z,a] with first-repeat cycle detection.
// Returns the step count at which the identity is reached, or -1.
int orbit_steps(const FiniteGroup& G, Element start, Element a,
                std::vector<int>& stamp, int tick) {
  Element z = start;
  int steps = 0;
  while (z != 0) {
    if (stamp[z] == tick) return -1;  // revisit without identity: cycles forever
    stamp[z] = tick;
    z = G.comm(z, a);
    ++steps;
  }
  return steps;
}

}  // namespace

EngelStatus left_engel_status(const FiniteGroup& G, Element a) {
  G.validate(a);
  const int n = G.order();
  std::vector<int> stamp(n, -1);
  int worst = 0;
  for (Element g = 0, tick = 0; g < n; ++g, ++tick) {
    int steps = orbit_steps(G, g, a, stamp, tick);
    if (steps < 0) return {false, std::nullopt};
    worst = std::max(worst, steps);
  }
  return {true, std::max(1, worst)};
}

EngelStatus right_engel_status(const FiniteGroup& G, Element a) {
  G.validate(a);
  const int n = G.order();
  std::vector<int> stamp(n, -1);
  int worst = 0;
  for (Element g = 0, tick = 0; g < n; ++g, ++tick) {
    // orbit of a under z -> [z,g]
    Element z = a;
    int steps = 0;
    bool ok = true;
    while (z != 0) {
      if (stamp[z] == tick) {
        ok = false;
        break;
      }
      stamp[z] = tick;
      z = G.comm(z, g);
      ++steps;
    }
    if (!ok) return {false, std::nullopt};
    worst = std::max(worst, steps);
  }
  return {true, std::max(1, worst)};
}

std::vector<int> engel_distances(const FiniteGroup& G, Element y) {
  G.validate(y);
  const int n = G.order();
  std::vector<Element> f(n);
  for (Element z = 0; z < n; ++z) f[z] = G.comm(z, y);

  // Counting-sort predecessor lists, then BFS from the identity.
  std::vector<int> count(n + 1, 0);
  for (Element z = 0; z < n; ++z) ++count[f[z] + 1];
  for (int i = 0; i < n; ++i) count[i + 1] += count[i];
  std::vector<Element> preds(n);
  {
    std::vector<int> at(count.begin(), count.end() - 1);
    for (Element z = 0; z < n; ++z) preds[at[f[z]]++] = z;
  }

  std::vector<int> dist(n, -1);
  std::vector<Element> queue;
  dist[0] = 0;
  queue.push_back(0);
  for (std::size_t qi = 0; qi < queue.size(); ++qi) {
    Element cur = queue[qi];
    for (int i = count[cur]; i < count[cur + 1]; ++i) {
      Element p = preds[i];
      if (p != 0 && dist[p] < 0) {
        dist[p] = dist[cur] + 1;
        queue.push_back(p);
      }
    }
  }
  return dist;
}

EngelReport engel_level_sets(const FiniteGroup& G, int max_n, bool with_rho) {
  if (max_n < 1) throw usage_error("engel_level_sets: max_n must be >= 1");
  const int n = G.order();
  EngelReport rep;
  rep.max_n = max_n;
  rep.left_length.assign(n, 0);
  rep.right_length.assign(n, 0);
  std::vector<int> right_raw(n, 0);

  for (Element y = 0; y < n; ++y) {
    std::vector<int> dist = engel_distances(G, y);
    int row = 0;
    for (Element z = 0; z < n; ++z) {
      if (dist[z] < 0) {
        row = -1;
        right_raw[z] = -1;
      } else {
        if (row >= 0) row = std::max(row, dist[z]);
        if (right_raw[z] >= 0) right_raw[z] = std::max(right_raw[z], dist[z]);
      }
    }
    rep.left_length[y] = row < 0 ? -1 : std::max(1, row);
  }
  for (Element z = 0; z < n; ++z)
    rep.right_length[z] = right_raw[z] < 0 ? -1 : std::max(1, right_raw[z]);

  rep.left_levels.assign(max_n, {});
  rep.right_levels.assign(max_n, {});
  for (Element e = 0; e < n; ++e) {
    for (int k = 1; k <= max_n; ++k) {
      if (rep.in_left_level(e, k)) rep.left_levels[k - 1].push_back(e);
      if (rep.in_right_level(e, k)) rep.right_levels[k - 1].push_back(e);
    }
    if (rep.left_length[e] >= 0) rep.left_set.push_back(e);
    if (rep.right_length[e] >= 0) rep.right_set.push_back(e);
  }
  // In a finite group every Engel element is bounded, so the bounded sets
  // coincide with L(G) and R(G); they are kept as separate fields because
  // reports record both.
  rep.bounded_left = rep.left_set;
  rep.bounded_right = rep.right_set;

  if (with_rho) {
    auto [r, rb] = rho_sets(G);
    rep.rho = std::move(r);
    rep.rho_bar = std::move(rb);
    rep.has_rho = true;
  }
  return rep;
}

std::pair<std::vector<Element>, std::vector<Element>> rho_sets(
    const FiniteGroup& G) {
  const int n = G.order();
  ConjugacyInfo classes = conjugacy_classes(G);
  CyclicIndex cyc = cyclic_subgroup_index(G);

  // Membership of a depends only on N = <a>^G, which is constant on
  // conjugacy classes; and for fixed (normal) N the condition on x is
  // conjugation-invariant, so one representative per cyclic-subgroup orbit
  // suffices.
  std::map<std::vector<Element>, std::pair<bool, int>> cache;  // N -> (ok, max defect)
  std::vector<std::uint8_t> class_ok(classes.reps.size(), 0);
  std::vector<int> class_bound(classes.reps.size(), 0);

  for (std::size_t c = 0; c < classes.reps.size(); ++c) {
    std::vector<Element> N = closure_elements(G, classes.classes[c]);
    auto it = cache.find(N);
    if (it == cache.end()) {
      bool ok = true;
      int bound = 0;
      std::vector<std::uint8_t> in_N = element_mask(G, N);
      for (std::size_t o = 0; o < cyc.orbit_rep.size() && ok; ++o) {
        int sid = cyc.orbit_rep[o];
        const std::vector<Element>& X = cyc.subs[sid];
        // J = <x> N, a subgroup because N is normal in G.
        std::vector<Element> J;
        if (X.size() == 1 || std::all_of(X.begin(), X.end(),
                                         [&](Element e) { return in_N[e]; })) {
          J = N;
        } else {
          std::vector<std::uint8_t> seen(n, 0);
          for (Element xi : X)
            for (Element m : N) {
              Element e = G.mul(xi, m);
              if (!seen[e]) {
                seen[e] = 1;
                J.push_back(e);
              }
            }
          std::sort(J.begin(), J.end());
        }
        auto d = subnormal_defect_within(G, J, X, {cyc.sub_gen[sid]});
        if (!d) {
          ok = false;
        } else {
          bound = std::max(bound, *d);
        }
      }
      it = cache.emplace(std::move(N), std::make_pair(ok, bound)).first;
    }
    class_ok[c] = it->second.first;
    class_bound[c] = it->second.second;
  }

  std::vector<Element> rho;
  for (Element e = 0; e < n; ++e)
    if (class_ok[classes.class_of[e]]) rho.push_back(e);

  // rho_bar: the uniform bound must exist whenever every individual defect
  // does; its absence would mean the defect data is inconsistent.
  for (Element e : rho)
    if (class_bound[classes.class_of[e]] < 0)
      throw invariant_violation("rho element without a uniform defect bound");
  std::vector<Element> rho_bar = rho;
  return {std::move(rho), std::move(rho_bar)};
}

}  // namespace engel

// Test-only oracles, deliberately independent of the engine: plain
// permutation composition, repeated-product closures, and direct Engel
// orbit iteration over a raw Cayley table. Expected values in the tests are
// computed here and compared against the engine's answers.
#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <vector>

namespace oracle {

using Perm = std::vector<int>;

inline Perm perm_identity(int n) {
  Perm p(n);
  for (int i = 0; i < n; ++i) p[i] = i;
  return p;
}

// apply a first, then b
inline Perm perm_mul(const Perm& a, const Perm& b) {
  Perm r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = b[a[i]];
  return r;
}

inline Perm perm_inv(const Perm& a) {
  Perm r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[a[i]] = static_cast<int>(i);
  return r;
}

inline Perm perm_comm(const Perm& a, const Perm& b) {
  return perm_mul(perm_mul(perm_inv(a), perm_inv(b)), perm_mul(a, b));
}

// All elements generated by gens, by repeated multiplication to a fixed
// point.
inline std::set<Perm> perm_span(int degree, const std::vector<Perm>& gens) {
  std::set<Perm> all;
  all.insert(perm_identity(degree));
  for (const Perm& g : gens) all.insert(g);
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<Perm> cur(all.begin(), all.end());
    for (const Perm& a : cur)
      for (const Perm& b : cur)
        if (all.insert(perm_mul(a, b)).second) grew = true;
  }
  return all;
}

// Breadth-first enumeration matching the documented engine ordering:
// identity first, then discovery order over (queue x generators).
struct PermTable {
  std::vector<Perm> elems;
  std::map<Perm, int> index;
  std::vector<std::vector<int>> table;

  int mul(int a, int b) const { return table[a][b]; }
  int inv(int a) const {
    for (std::size_t b = 0; b < elems.size(); ++b)
      if (table[a][b] == 0) return static_cast<int>(b);
    return -1;
  }
  int comm(int a, int b) const {
    return table[table[inv(a)][inv(b)]][table[a][b]];
  }
};

inline PermTable perm_table(int degree, const std::vector<Perm>& gens) {
  PermTable t;
  Perm id = perm_identity(degree);
  t.index[id] = 0;
  t.elems.push_back(id);
  for (std::size_t qi = 0; qi < t.elems.size(); ++qi) {
    Perm cur = t.elems[qi];
    for (const Perm& g : gens) {
      Perm nxt = perm_mul(cur, g);
      if (t.index.emplace(nxt, static_cast<int>(t.elems.size())).second)
        t.elems.push_back(nxt);
    }
  }
  int n = static_cast<int>(t.elems.size());
  t.table.assign(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      t.table[a][b] = t.index.at(perm_mul(t.elems[a], t.elems[b]));
  return t;
}

// Closure by repeated products over a raw multiplication table.
inline std::vector<int> table_closure(const std::vector<std::vector<int>>& mul,
                                      std::vector<int> seed) {
  std::set<int> all(seed.begin(), seed.end());
  all.insert(0);
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<int> cur(all.begin(), all.end());
    for (int a : cur)
      for (int b : cur)
        if (all.insert(mul[a][b]).second) grew = true;
  }
  return std::vector<int>(all.begin(), all.end());
}

// Least n <= cap with [g,_n a] = 1, directly from the recursion.
inline std::optional<int> table_left_steps(const PermTable& t, int g, int a,
                                           int cap) {
  int z = g;
  for (int n = 0; n <= cap; ++n) {
    if (z == 0) return n;
    z = t.comm(z, a);
  }
  return std::nullopt;
}

// Exact left Engel length of a: max over g of the orbit step count, at
// least 1; nullopt when some orbit never reaches the identity within the
// pigeonhole bound |G|.
inline std::optional<int> table_left_length(const PermTable& t, int a) {
  int n = static_cast<int>(t.elems.size());
  int worst = 1;
  for (int g = 0; g < n; ++g) {
    auto s = table_left_steps(t, g, a, n + 1);
    if (!s) return std::nullopt;
    worst = std::max(worst, *s);
  }
  return worst;
}

inline std::optional<int> table_right_length(const PermTable& t, int a) {
  int n = static_cast<int>(t.elems.size());
  int worst = 1;
  for (int g = 0; g < n; ++g) {
    int z = a;
    bool done = false;
    for (int s = 0; s <= n + 1; ++s) {
      if (z == 0) {
        worst = std::max(worst, std::max(s, 1));
        done = true;
        break;
      }
      z = t.comm(z, g);
    }
    if (!done) return std::nullopt;
  }
  return worst;
}

}  // namespace oracle

#include "engel/group.hpp"

#include <algorithm>
#include <istream>
#include <map>
#include <random>
#include <sstream>

namespace engel {

Element FiniteGroup::pow(Element a, long long e) const {
  validate(a);
  if (e < 0) {
    a = inv(a);
    e = -e;
  }
  Element acc = 0;
  Element base = a;
  while (e > 0) {
    if (e & 1) acc = mul(acc, base);
    base = mul(base, base);
    e >>= 1;
  }
  return acc;
}

int FiniteGroup::element_order(Element a) const {
  validate(a);
  int k = 1;
  Element cur = a;
  while (cur != 0) {
    cur = mul(cur, a);
    ++k;
  }
  return k;
}

Element FiniteGroup::mark(const std::string& key) const {
  auto it = marks_.find(key);
  if (it == marks_.end()) throw usage_error("no element marked '" + key + "'");
  return it->second;
}

bool Subgroup::contains(Element e) const {
  return std::binary_search(elements.begin(), elements.end(), e);
}

std::vector<std::uint8_t> element_mask(const FiniteGroup& G,
                                       const std::vector<Element>& elems) {
  std::vector<std::uint8_t> mask(G.order(), 0);
  for (Element e : elems) mask[e] = 1;
  return mask;
}

std::vector<Element> closure_elements(const FiniteGroup& G,
                                      const std::vector<Element>& seed) {
  const int n = G.order();
  std::vector<std::uint8_t> in(n, 0);
  std::vector<Element> members;
  std::vector<Element> queue;
  auto add = [&](Element e) {
    if (!in[e]) {
      in[e] = 1;
      members.push_back(e);
      queue.push_back(e);
    }
  };
  add(0);
  for (Element e : seed) {
    G.validate(e);
    add(e);
  }
  // Incremental pair closure: when q is popped, every earlier member is
  // already present, so each ordered pair gets multiplied exactly when its
  // later element is processed. Inverses come for free in a finite group.
  for (std::size_t qi = 0; qi < queue.size(); ++qi) {
    Element q = queue[qi];
    for (std::size_t mi = 0; mi < members.size(); ++mi) {
      Element m = members[mi];
      add(G.mul(q, m));
      add(G.mul(m, q));
    }
  }
  std::sort(members.begin(), members.end());
  return members;
}

Subgroup closure(const FiniteGroup& G, const std::vector<Element>& seed) {
  Subgroup H;
  H.parent = &G;
  H.elements = closure_elements(G, seed);
  std::vector<Element> gens = seed;
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  H.witness_generators = std::move(gens);
  return H;
}

std::vector<Element> greedy_generators(const FiniteGroup& G,
                                       const std::vector<Element>& sorted_elems) {
  std::vector<Element> gens;
  if (sorted_elems.size() <= 1) return gens;
  std::vector<std::uint8_t> have(G.order(), 0);
  have[0] = 1;
  std::size_t have_count = 1;
  for (Element e : sorted_elems) {
    if (have[e]) continue;
    gens.push_back(e);
    std::vector<Element> got = closure_elements(G, gens);
    have.assign(G.order(), 0);
    for (Element x : got) have[x] = 1;
    have_count = got.size();
    if (have_count == sorted_elems.size()) break;
  }
  return gens;
}

Subgroup make_subgroup(const FiniteGroup& G, std::vector<Element> sorted_elems) {
  std::sort(sorted_elems.begin(), sorted_elems.end());
  sorted_elems.erase(std::unique(sorted_elems.begin(), sorted_elems.end()),
                     sorted_elems.end());
  std::vector<Element> gens = greedy_generators(G, sorted_elems);
  std::vector<Element> closed = closure_elements(G, gens);
  if (closed != sorted_elems)
    throw invariant_violation("make_subgroup: element set is not closed");
  Subgroup H;
  H.parent = &G;
  H.elements = std::move(sorted_elems);
  H.witness_generators = std::move(gens);
  return H;
}

bool is_normal(const FiniteGroup& G, const std::vector<Element>& sorted_elems) {
  std::vector<std::uint8_t> mask = element_mask(G, sorted_elems);
  for (Element g : G.generators())
    for (Element h : sorted_elems)
      if (!mask[G.conj(h, g)]) return false;
  return true;
}

namespace {

std::string default_gen_name(std::size_t i) {
  if (i < 26) return std::string(1, static_cast<char>('a' + i));
  return "g" + std::to_string(i);
}

void assign_labels(FiniteGroup& G, std::vector<std::string>& labels,
                   const std::vector<Element>& gens,
                   const std::vector<std::string>& names) {
  const int n = G.order();
  labels.assign(n, "");
  labels[0] = "1";
  bool sep = false;
  for (const auto& nm : names)
    if (nm.size() > 1) sep = true;
  std::vector<Element> queue{0};
  std::size_t assigned = 1;
  for (std::size_t qi = 0; qi < queue.size() && assigned < std::size_t(n); ++qi) {
    Element cur = queue[qi];
    for (std::size_t gi = 0; gi < gens.size(); ++gi) {
      Element nxt = G.mul(cur, gens[gi]);
      if (nxt == 0 || !labels[nxt].empty()) continue;
      labels[nxt] = (cur == 0 ? names[gi]
                              : labels[cur] + (sep ? "*" : "") + names[gi]);
      queue.push_back(nxt);
      ++assigned;
    }
  }
  if (assigned != std::size_t(n))
    throw invariant_violation("label assignment did not reach every element");
}

}  // namespace

FiniteGroup GroupBuilder::finalize(int n, std::vector<Element> table,
                                   std::vector<Element> gens,
                                   std::vector<std::string> gen_names) {
  if (n < 1) throw validation_error("group order must be positive");
  if (n > opts_.cap)
    throw capacity_error("group order " + std::to_string(n) +
                         " exceeds cap " + std::to_string(opts_.cap));
  if (table.size() != static_cast<std::size_t>(n) * n)
    throw validation_error("multiplication table has wrong size");
  for (Element e : table)
    if (e < 0 || e >= n) throw validation_error("table entry out of range");

  FiniteGroup G;
  G.n_ = n;
  G.table_ = std::move(table);

  // Identity axioms.
  for (Element g = 0; g < n; ++g)
    if (G.mul(0, g) != g || G.mul(g, 0) != g)
      throw validation_error("index 0 is not a two-sided identity");

  // Inverses.
  G.inverse_.assign(n, -1);
  for (Element g = 0; g < n; ++g) {
    for (Element h = 0; h < n; ++h) {
      if (G.mul(g, h) == 0 && G.mul(h, g) == 0) {
        G.inverse_[g] = h;
        break;
      }
    }
    if (G.inverse_[g] < 0)
      throw validation_error("element " + std::to_string(g) + " has no inverse");
  }

  // Associativity: full triple loop up to exhaustive_max, seeded samples
  // above.
  if (n <= opts_.exhaustive_max) {
    for (Element a = 0; a < n; ++a)
      for (Element b = 0; b < n; ++b)
        for (Element c = 0; c < n; ++c)
          if (G.mul(G.mul(a, b), c) != G.mul(a, G.mul(b, c)))
            throw validation_error("multiplication table is not associative");
    G.validation_note_ = "associativity: exhaustive";
  } else {
    std::mt19937_64 rng(opts_.seed);
    for (int i = 0; i < opts_.samples; ++i) {
      Element a = static_cast<Element>(rng() % n);
      Element b = static_cast<Element>(rng() % n);
      Element c = static_cast<Element>(rng() % n);
      if (G.mul(G.mul(a, b), c) != G.mul(a, G.mul(b, c)))
        throw validation_error("multiplication table is not associative");
    }
    G.validation_note_ =
        "associativity: " + std::to_string(opts_.samples) + " seeded samples";
  }

  // Generators: dedup, default to a greedy set when none given.
  std::vector<Element> seen;
  for (Element g : gens) {
    if (g < 0 || g >= n) throw validation_error("generator index out of range");
    if (std::find(seen.begin(), seen.end(), g) == seen.end() && g != 0)
      seen.push_back(g);
  }
  gens = std::move(seen);
  if (gens.empty() && n > 1) {
    std::vector<Element> all(n);
    for (int i = 0; i < n; ++i) all[i] = i;
    gens = greedy_generators(G, all);
  }
  if (gen_names.size() < gens.size()) {
    for (std::size_t i = gen_names.size(); i < gens.size(); ++i)
      gen_names.push_back(default_gen_name(i));
  }
  gen_names.resize(gens.size());
  G.gens_ = gens;
  G.gen_names_ = gen_names;

  if (closure_elements(G, gens).size() != static_cast<std::size_t>(n))
    throw validation_error("generators do not reach every element");

  assign_labels(G, G.labels_, G.gens_, G.gen_names_);
  return G;
}

FiniteGroup GroupBuilder::from_table(int n, std::vector<Element> table,
                                     std::vector<Element> gens,
                                     std::vector<std::string> gen_names) {
  return finalize(n, std::move(table), std::move(gens), std::move(gen_names));
}

FiniteGroup GroupBuilder::from_mul_fn(
    int n, const std::function<Element(Element, Element)>& f,
    std::vector<Element> gens, std::vector<std::string> gen_names) {
  if (n < 1) throw validation_error("group order must be positive");
  if (n > opts_.cap)
    throw capacity_error("group order " + std::to_string(n) +
                         " exceeds cap " + std::to_string(opts_.cap));
  std::vector<Element> table(static_cast<std::size_t>(n) * n);
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b)
      table[static_cast<std::size_t>(a) * n + b] = f(a, b);
  return finalize(n, std::move(table), std::move(gens), std::move(gen_names));
}

namespace {

std::vector<int> compose(const std::vector<int>& p, const std::vector<int>& q) {
  // apply p first, then q
  std::vector<int> r(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) r[i] = q[p[i]];
  return r;
}

}  // namespace

FiniteGroup GroupBuilder::from_permutations(
    int degree, const std::vector<std::vector<int>>& perm_gens,
    std::vector<std::string> gen_names) {
  if (degree < 1) throw validation_error("permutation degree must be positive");
  for (const auto& p : perm_gens) {
    if (p.size() != static_cast<std::size_t>(degree))
      throw validation_error("permutation has wrong degree");
    std::vector<std::uint8_t> hit(degree, 0);
    for (int img : p) {
      if (img < 0 || img >= degree || hit[img])
        throw validation_error("not a permutation");
      hit[img] = 1;
    }
  }

  std::vector<int> ident(degree);
  for (int i = 0; i < degree; ++i) ident[i] = i;

  // Breadth-first enumeration from the identity; discovery order fixes the
  // element indexing.
  std::map<std::vector<int>, int> index;
  std::vector<std::vector<int>> elems;
  index[ident] = 0;
  elems.push_back(ident);
  for (std::size_t qi = 0; qi < elems.size(); ++qi) {
    std::vector<int> cur = elems[qi];
    for (const auto& g : perm_gens) {
      std::vector<int> nxt = compose(cur, g);
      if (index.emplace(nxt, static_cast<int>(elems.size())).second) {
        elems.push_back(std::move(nxt));
        if (elems.size() > static_cast<std::size_t>(opts_.cap))
          throw capacity_error("permutation group exceeds cap " +
                               std::to_string(opts_.cap));
      }
    }
  }

  const int n = static_cast<int>(elems.size());
  std::vector<Element> table(static_cast<std::size_t>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      table[static_cast<std::size_t>(a) * n + b] = index.at(compose(elems[a], elems[b]));

  std::vector<Element> gens;
  for (const auto& p : perm_gens) gens.push_back(index.at(p));
  return finalize(n, std::move(table), std::move(gens), std::move(gen_names));
}

FiniteGroup GroupBuilder::from_cayley_stream(std::istream& in) {
  std::string line;
  std::size_t lineno = 0;
  auto next_line = [&](std::string& out) -> bool {
    while (std::getline(in, line)) {
      ++lineno;
      std::size_t first = line.find_first_not_of(" \t\r\n");
      if (first == std::string::npos) continue;
      if (line[first] == '#') continue;
      out = line;
      return true;
    }
    return false;
  };

  std::string cur;
  if (!next_line(cur)) throw parse_error("empty Cayley table input", 0);
  int n = 0;
  {
    std::istringstream is(cur);
    if (!(is >> n)) throw parse_error("expected group order", lineno);
  }
  if (n < 1) throw validation_error("group order must be positive");
  std::vector<Element> table;
  table.reserve(static_cast<std::size_t>(n) * n);
  for (int r = 0; r < n; ++r) {
    if (!next_line(cur))
      throw parse_error("expected " + std::to_string(n) + " table rows", lineno);
    std::istringstream is(cur);
    for (int c = 0; c < n; ++c) {
      int v;
      if (!(is >> v))
        throw parse_error("row " + std::to_string(r) + " is too short", lineno);
      table.push_back(v);
    }
  }
  std::vector<Element> gens;
  if (next_line(cur)) {
    std::istringstream is(cur);
    std::string tag;
    is >> tag;
    if (tag != "gens:")
      throw parse_error("expected optional 'gens:' line, got '" + tag + "'",
                        lineno);
    int v;
    while (is >> v) gens.push_back(v);
  }
  return finalize(n, std::move(table), std::move(gens), {});
}

FiniteGroup quotient(const FiniteGroup& G, const Subgroup& N,
                     const BuildOptions& opts) {
  if (N.parent != &G) throw usage_error("quotient: subgroup of a different group");
  if (!is_normal(G, N.elements))
    throw usage_error("quotient: subgroup is not normal");
  const int n = G.order();
  std::vector<int> coset_of(n, -1);
  std::vector<Element> reps;
  for (Element g = 0; g < n; ++g) {
    if (coset_of[g] >= 0) continue;
    // g is the minimal member of its coset since smaller members would have
    // claimed it already.
    int id = static_cast<int>(reps.size());
    reps.push_back(g);
    for (Element x : N.elements) coset_of[G.mul(g, x)] = id;
  }
  const int q = static_cast<int>(reps.size());
  std::vector<Element> table(static_cast<std::size_t>(q) * q);
  for (int a = 0; a < q; ++a)
    for (int b = 0; b < q; ++b)
      table[static_cast<std::size_t>(a) * q + b] =
          coset_of[G.mul(reps[a], reps[b])];

  std::vector<Element> gens;
  std::vector<std::string> names;
  for (std::size_t i = 0; i < G.generators().size(); ++i) {
    Element img = coset_of[G.generators()[i]];
    if (img == 0) continue;
    if (std::find(gens.begin(), gens.end(), img) != gens.end()) continue;
    gens.push_back(img);
    names.push_back(G.generator_names()[i]);
  }
  GroupBuilder builder(opts);
  return builder.from_table(q, std::move(table), std::move(gens),
                            std::move(names));
}

}  // namespace engel

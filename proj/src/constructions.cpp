#include "engel/constructions.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>

namespace engel {

namespace {

constexpr long long kOrderOverflow = -1;

long long checked_pow(long long base, long long exp) {
  long long r = 1;
  for (long long i = 0; i < exp; ++i) {
    if (base > 0 && r > (1LL << 40) / base) return kOrderOverflow;
    r *= base;
  }
  return r;
}

long long factorial(int n) {
  long long r = 1;
  for (int i = 2; i <= n; ++i) {
    if (r > (1LL << 40) / i) return kOrderOverflow;
    r *= i;
  }
  return r;
}

FiniteGroup cyclic_group(int n, const BuildOptions& opts) {
  GroupBuilder b(opts);
  if (n == 1) return b.from_table(1, {0}, {}, {});
  return b.from_mul_fn(
      n, [n](Element x, Element y) { return (x + y) % n; }, {1}, {"a"});
}

FiniteGroup dihedral_group(int order, const BuildOptions& opts) {
  int n = order / 2;  // rotation count, >= 3
  std::vector<int> rot(n), refl(n);
  for (int i = 0; i < n; ++i) {
    rot[i] = (i + 1) % n;
    refl[i] = (n - i) % n;
  }
  GroupBuilder b(opts);
  return b.from_permutations(n, {rot, refl}, {"a", "b"});
}

FiniteGroup symmetric_group(int n, const BuildOptions& opts) {
  GroupBuilder b(opts);
  if (n == 1) return b.from_table(1, {0}, {}, {});
  std::vector<int> swap01(n), cycle(n);
  for (int i = 0; i < n; ++i) {
    swap01[i] = i;
    cycle[i] = (i + 1) % n;
  }
  std::swap(swap01[0], swap01[1]);
  if (n == 2) return b.from_permutations(n, {swap01}, {"a"});
  return b.from_permutations(n, {swap01, cycle}, {"a", "b"});
}

FiniteGroup alternating_group(int n, const BuildOptions& opts) {
  // consecutive 3-cycles generate A_n
  std::vector<std::vector<int>> gens;
  std::vector<std::string> names;
  for (int i = 0; i + 2 < n; ++i) {
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    p[i] = i + 1;
    p[i + 1] = i + 2;
    p[i + 2] = i;
    gens.push_back(std::move(p));
    names.push_back(std::string(1, static_cast<char>('a' + i)));
  }
  GroupBuilder b(opts);
  return b.from_permutations(n, gens, names);
}

FiniteGroup quaternion8(const BuildOptions& opts) {
  // elements 1,-1,i,-i,j,-j,k,-k encoded as 2*axis + sign
  // axis: 0 = 1, 1 = i, 2 = j, 3 = k; sign bit 1 means negated
  static const int ax[4][4] = {
      {0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  static const int sg[4][4] = {{+1, +1, +1, +1},
                               {+1, -1, +1, -1},
                               {+1, -1, -1, +1},
                               {+1, +1, -1, -1}};
  auto mul = [](Element a, Element b) -> Element {
    int aa = a / 2, sa = a % 2, ab = b / 2, sb = b % 2;
    int axis = ax[aa][ab];
    int sign = (sg[aa][ab] < 0 ? 1 : 0) ^ sa ^ sb;
    return 2 * axis + sign;
  };
  GroupBuilder b(opts);
  return b.from_mul_fn(8, mul, {2, 4}, {"i", "j"});
}

}  // namespace

FiniteGroup direct_product(const FiniteGroup& A, const FiniteGroup& B,
                           const BuildOptions& opts) {
  const int nb = B.order();
  long long n = static_cast<long long>(A.order()) * nb;
  if (n > opts.cap)
    throw capacity_error("direct product order " + std::to_string(n) +
                         " exceeds cap " + std::to_string(opts.cap));
  auto mul = [&](Element x, Element y) -> Element {
    return A.mul(x / nb, y / nb) * nb + B.mul(x % nb, y % nb);
  };
  std::vector<Element> gens;
  std::vector<std::string> names;
  for (std::size_t i = 0; i < A.generators().size(); ++i) {
    gens.push_back(A.generators()[i] * nb);
    names.push_back(A.generator_names()[i]);
  }
  for (std::size_t i = 0; i < B.generators().size(); ++i) {
    gens.push_back(B.generators()[i]);
    names.push_back(B.generator_names()[i] + "'");
  }
  GroupBuilder b(opts);
  return b.from_mul_fn(static_cast<int>(n), mul, gens, names);
}

FiniteGroup wreath_regular(const FiniteGroup& A, const FiniteGroup& B,
                           const BuildOptions& opts) {
  const int na = A.order(), nb = B.order();
  long long base = checked_pow(na, nb);
  long long total = base == kOrderOverflow ? kOrderOverflow : base * nb;
  if (total == kOrderOverflow || total > opts.cap)
    throw capacity_error("wreath product order exceeds cap " +
                         std::to_string(opts.cap));
  const int n = static_cast<int>(total);
  const int base_sz = static_cast<int>(base);

  // element index = t * |A|^|B| + sum_c f(c) * |A|^c
  std::vector<std::vector<int>> fs(base_sz, std::vector<int>(nb));
  for (int e = 0; e < base_sz; ++e) {
    int v = e;
    for (int c = 0; c < nb; ++c) {
      fs[e][c] = v % na;
      v /= na;
    }
  }
  auto encode_f = [&](const std::vector<int>& f) {
    int v = 0;
    for (int c = nb - 1; c >= 0; --c) v = v * na + f[c];
    return v;
  };

  // (f1,b1)(f2,b2) = (f1 . (b1 |> f2), b1 b2) with (b |> f)(c) = f(c b)
  auto mul = [&](Element x, Element y) -> Element {
    int f1 = x % base_sz, b1 = x / base_sz;
    int f2 = y % base_sz, b2 = y / base_sz;
    std::vector<int> f(nb);
    for (int c = 0; c < nb; ++c)
      f[c] = A.mul(fs[f1][c], fs[f2][B.mul(c, b1)]);
    return B.mul(b1, b2) * base_sz + encode_f(f);
  };

  std::vector<Element> gens;
  std::vector<std::string> names;
  for (std::size_t i = 0; i < A.generators().size(); ++i) {
    std::vector<int> f(nb, 0);
    f[0] = A.generators()[i];
    gens.push_back(encode_f(f));
    names.push_back(std::string(1, static_cast<char>('a' + i)));
  }
  static const char* kTopNames[] = {"x", "y", "z", "w"};
  for (std::size_t i = 0; i < B.generators().size(); ++i) {
    gens.push_back(B.generators()[i] * base_sz);
    names.push_back(i < 4 ? kTopNames[i] : "t" + std::to_string(i));
  }

  GroupBuilder builder(opts);
  FiniteGroup G = builder.from_mul_fn(n, mul, gens, names);

  std::map<std::string, Element> marks;
  for (std::size_t i = 0; i < B.generators().size() && i < 4; ++i)
    marks[kTopNames[i]] = B.generators()[i] * base_sz;
  std::vector<Element> base_copy, top_copy;
  for (int a = 0; a < na; ++a) {
    std::vector<int> f(nb, 0);
    f[0] = a;
    base_copy.push_back(encode_f(f));
  }
  std::sort(base_copy.begin(), base_copy.end());
  for (int t = 0; t < nb; ++t) top_copy.push_back(t * base_sz);
  std::sort(top_copy.begin(), top_copy.end());
  GroupBuilder::set_marks(G, std::move(marks),
                          {{"wreath_base_copy", std::move(base_copy)},
                           {"wreath_top_copy", std::move(top_copy)}});
  return G;
}

namespace {

// Shared realization of the rank-k free nilpotent class-2 truncations:
// v has k coordinates mod vmod, w has k(k-1)/2 coordinates (pairs i < j)
// mod wmod, and beta(v,v')_{ij} = v_i * v'_j so that [e_i, e_j] = +w_{ij}.
FiniteGroup central_extension_group(int k, int vmod, int wmod,
                                    const std::string& check_tag,
                                    const BuildOptions& opts) {
  const int pairs = k * (k - 1) / 2;
  long long total = checked_pow(vmod, k);
  if (total != kOrderOverflow) {
    long long wpart = checked_pow(wmod, pairs);
    total = wpart == kOrderOverflow ? kOrderOverflow : total * wpart;
  }
  if (total == kOrderOverflow || total > opts.cap)
    throw capacity_error("free nilpotent group order exceeds cap " +
                         std::to_string(opts.cap));
  const int n = static_cast<int>(total);

  auto pair_index = [k](int i, int j) {  // i < j
    // pairs ordered (0,1),(0,2),...,(0,k-1),(1,2),...
    return i * k - i * (i + 1) / 2 + (j - i - 1);
  };

  struct Coords {
    std::vector<int> v, w;
  };
  std::vector<Coords> dec(n);
  for (int e = 0; e < n; ++e) {
    int t = e;
    dec[e].v.resize(k);
    dec[e].w.resize(pairs);
    for (int i = 0; i < k; ++i) {
      dec[e].v[i] = t % vmod;
      t /= vmod;
    }
    for (int j = 0; j < pairs; ++j) {
      dec[e].w[j] = t % wmod;
      t /= wmod;
    }
  }
  auto encode = [&](const std::vector<int>& v, const std::vector<int>& w) {
    int e = 0;
    for (int j = pairs - 1; j >= 0; --j) e = e * wmod + w[j];
    for (int i = k - 1; i >= 0; --i) e = e * vmod + v[i];
    return e;
  };

  auto mul = [&](Element x, Element y) -> Element {
    const Coords& a = dec[x];
    const Coords& b = dec[y];
    std::vector<int> v(k), w(pairs);
    for (int i = 0; i < k; ++i) v[i] = (a.v[i] + b.v[i]) % vmod;
    for (int i = 0; i < k; ++i)
      for (int j = i + 1; j < k; ++j) {
        int idx = pair_index(i, j);
        w[idx] = (a.w[idx] + b.w[idx] + a.v[i] * b.v[j]) % wmod;
      }
    return encode(v, w);
  };

  std::vector<Element> gens;
  std::vector<std::string> names;
  for (int i = 0; i < k; ++i) {
    std::vector<int> v(k, 0), w(pairs, 0);
    v[i] = 1;
    gens.push_back(encode(v, w));
    names.push_back("x" + std::to_string(i));
  }
  GroupBuilder builder(opts);
  FiniteGroup G = builder.from_mul_fn(n, mul, gens, names);

  // Freeness truncation sanity: class exactly 2, declared exponent, and the
  // commutator subgroup elementary abelian of rank k(k-1)/2.
  {
    std::vector<std::uint8_t> seen(n, 0);
    std::vector<Element> commutators;
    for (Element g : G.generators())
      for (Element h : G.generators()) {
        Element c = G.comm(g, h);
        if (!seen[c]) {
          seen[c] = 1;
          commutators.push_back(c);
        }
      }
    std::vector<Element> derived = closure_elements(G, commutators);
    if (static_cast<long long>(derived.size()) != checked_pow(wmod, pairs))
      throw invariant_violation(check_tag + ": commutator subgroup has order " +
                                std::to_string(derived.size()));
    for (Element c : derived) {
      if (c != 0 && G.element_order(c) != wmod)
        throw invariant_violation(check_tag +
                                  ": commutator subgroup is not elementary abelian");
      for (Element g = 0; g < n; ++g)
        if (G.mul(c, g) != G.mul(g, c))
          throw invariant_violation(check_tag +
                                    ": commutator subgroup is not central");
    }
    if (derived.size() == 1)
      throw invariant_violation(check_tag + ": group is abelian, class is not 2");
    bool hit_full = false;
    for (Element g = 0; g < n; ++g) {
      int ord = G.element_order(g);
      if (vmod % ord != 0)
        throw invariant_violation(check_tag + ": element order " +
                                  std::to_string(ord) +
                                  " does not divide the declared exponent");
      if (ord == vmod) hit_full = true;
    }
    if (!hit_full)
      throw invariant_violation(check_tag + ": exponent is smaller than declared");
  }
  return G;
}

}  // namespace

FiniteGroup free_nil_c2(int p, int k, const BuildOptions& opts) {
  if (p < 3) throw usage_error("free_nil_c2 expects an odd prime modulus");
  return central_extension_group(k, p, p, "fnil", opts);
}

FiniteGroup free_nil_c2_exp4(int k, const BuildOptions& opts) {
  // v mod 4 with the bilinear form effectively computed on v mod 2: the
  // commutator coordinates are mod 2 because [x,y]^2 = 1 is forced by
  // exponent 4 and class 2.
  return central_extension_group(k, 4, 2, "fnil4", opts);
}

long long projected_order(const GroupSpec& spec) {
  switch (spec.kind) {
    case GroupSpec::Kind::cyclic: return spec.n;
    case GroupSpec::Kind::dihedral: return spec.n;
    case GroupSpec::Kind::symmetric: return factorial(spec.n);
    case GroupSpec::Kind::alternating: {
      long long f = factorial(spec.n);
      return f == kOrderOverflow ? f : f / 2;
    }
    case GroupSpec::Kind::quaternion8: return 8;
    case GroupSpec::Kind::product: {
      long long a = projected_order(spec.args[0]);
      long long b = projected_order(spec.args[1]);
      if (a == kOrderOverflow || b == kOrderOverflow) return kOrderOverflow;
      if (a > (1LL << 40) / std::max<long long>(b, 1)) return kOrderOverflow;
      return a * b;
    }
    case GroupSpec::Kind::wreath: {
      long long a = projected_order(spec.args[0]);
      long long b = projected_order(spec.args[1]);
      if (a == kOrderOverflow || b == kOrderOverflow) return kOrderOverflow;
      long long base = checked_pow(a, b);
      if (base == kOrderOverflow) return kOrderOverflow;
      if (base > (1LL << 40) / std::max<long long>(b, 1)) return kOrderOverflow;
      return base * b;
    }
    case GroupSpec::Kind::free_nil:
      return checked_pow(spec.p, spec.k + spec.k * (spec.k - 1) / 2);
    case GroupSpec::Kind::free_nil_exp4: {
      long long v = checked_pow(4, spec.k);
      long long w = checked_pow(2, spec.k * (spec.k - 1) / 2);
      if (v == kOrderOverflow || w == kOrderOverflow) return kOrderOverflow;
      return v * w;
    }
    case GroupSpec::Kind::gupta_levin:
    case GroupSpec::Kind::cayley_file:
      return kOrderOverflow;  // unknown ahead of time
  }
  return kOrderOverflow;
}

FiniteGroup make_group(const GroupSpec& spec, const BuildOptions& opts) {
  if (spec.is_black_box())
    throw capacity_error("spec '" + spec.to_string() +
                         "' is a black-box group and cannot be enumerated");
  long long projected = projected_order(spec);
  if (spec.kind != GroupSpec::Kind::cayley_file &&
      (projected == kOrderOverflow || projected > opts.cap))
    throw capacity_error("projected order of '" + spec.to_string() +
                         "' exceeds cap " + std::to_string(opts.cap));

  FiniteGroup G;
  switch (spec.kind) {
    case GroupSpec::Kind::cyclic: G = cyclic_group(spec.n, opts); break;
    case GroupSpec::Kind::dihedral: G = dihedral_group(spec.n, opts); break;
    case GroupSpec::Kind::symmetric: G = symmetric_group(spec.n, opts); break;
    case GroupSpec::Kind::alternating: G = alternating_group(spec.n, opts); break;
    case GroupSpec::Kind::quaternion8: G = quaternion8(opts); break;
    case GroupSpec::Kind::product: {
      FiniteGroup A = make_group(spec.args[0], opts);
      FiniteGroup B = make_group(spec.args[1], opts);
      G = direct_product(A, B, opts);
      break;
    }
    case GroupSpec::Kind::wreath: {
      FiniteGroup A = make_group(spec.args[0], opts);
      FiniteGroup B = make_group(spec.args[1], opts);
      G = wreath_regular(A, B, opts);
      break;
    }
    case GroupSpec::Kind::free_nil: G = free_nil_c2(spec.p, spec.k, opts); break;
    case GroupSpec::Kind::free_nil_exp4:
      G = free_nil_c2_exp4(spec.k, opts);
      break;
    case GroupSpec::Kind::cayley_file: {
      std::ifstream in(spec.path);
      if (!in) throw usage_error("cannot open Cayley file '" + spec.path + "'");
      GroupBuilder b(opts);
      G = b.from_cayley_stream(in);
      break;
    }
    case GroupSpec::Kind::gupta_levin:
      throw capacity_error("unreachable");
  }
  GroupBuilder::set_name(G, spec.to_string());
  return G;
}

FiniteGroup make_group(const std::string& spec_text, const BuildOptions& opts) {
  return make_group(parse_group_spec(spec_text), opts);
}

std::unique_ptr<GuptaLevinGroup> make_gupta_levin(const GroupSpec& spec,
                                                  const BuildOptions& opts) {
  if (spec.kind != GroupSpec::Kind::gupta_levin)
    throw usage_error("spec is not a Gupta-Levin group");
  FiniteGroup base = spec.p == 2 ? free_nil_c2_exp4(spec.k, opts)
                                 : free_nil_c2(spec.p, spec.k, opts);
  GroupBuilder::set_name(base, "gl-base(p=" + std::to_string(spec.p) +
                                   ",k=" + std::to_string(spec.k) + ")");
  return std::make_unique<GuptaLevinGroup>(std::move(base), spec.p, spec.k,
                                           spec.to_string());
}

}  // namespace engel

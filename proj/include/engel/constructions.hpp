#pragma once

#include <memory>
#include <string>
#include <vector>

#include "engel/group.hpp"
#include "engel/gupta_levin.hpp"

namespace engel {

// Construction descriptor. Grammar (whitespace-insensitive):
//   spec    := atom ('x' atom)*                      direct products
//   atom    := C{n} | D{2n} | S{n} | A{n} | Q8
//            | wreath(spec, spec)
//            | fnil(p={p}, k={k}) | fnil4(k={k})
//            | gl(p={p}, k={k})
//            | cayley(path)
struct GroupSpec {
  enum class Kind {
    cyclic,        // C{n}
    dihedral,      // D{m}, m = group order, m >= 6 even
    symmetric,     // S{n}
    alternating,   // A{n}
    quaternion8,   // Q8
    product,       // args[0] x args[1]
    wreath,        // wreath(args[0], args[1]), regular wreath product
    free_nil,      // fnil(p=p, k=k): free nilpotent class 2, exponent p, rank k
    free_nil_exp4, // fnil4(k=k): free nilpotent class 2, exponent 4, rank k
    gupta_levin,   // gl(p=p, k=k): black-box matrix group over Z_p[fnil...]
    cayley_file,   // cayley(path)
  };

  Kind kind = Kind::cyclic;
  int n = 0;  // order parameter for cyclic/dihedral/symmetric/alternating
  int p = 0;
  int k = 0;
  std::vector<GroupSpec> args;
  std::string path;

  bool is_black_box() const { return kind == Kind::gupta_levin; }
  std::string to_string() const;

  friend bool operator==(const GroupSpec& a, const GroupSpec& b);
};

GroupSpec parse_group_spec(const std::string& text);

// Projected order of the construction, before building anything; -1 when it
// overflows any reasonable cap. Black-box specs have no projected order.
long long projected_order(const GroupSpec& spec);

// Build an enumerable group from a descriptor. Throws capacity_error when
// the projected order exceeds the cap and usage_error for black-box specs.
FiniteGroup make_group(const GroupSpec& spec, const BuildOptions& opts = {});
FiniteGroup make_group(const std::string& spec_text,
                       const BuildOptions& opts = {});

std::unique_ptr<GuptaLevinGroup> make_gupta_levin(const GroupSpec& spec,
                                                  const BuildOptions& opts = {});

// Regular wreath product A wr B: base = A^|B| indexed by B's elements, top =
// B permuting coordinates through its right regular action. Generators are
// A's generators in the coordinate of B's identity plus B's generators. The
// result carries marks: "x","y",... for the top generators, mark sets
// "wreath_base_copy" (the embedded copy of A) and "wreath_top_copy".
FiniteGroup wreath_regular(const FiniteGroup& A, const FiniteGroup& B,
                           const BuildOptions& opts = {});

// Free nilpotent class-2 group of rank k, truncated from the paper's
// countably infinite rank: exponent p for an odd prime p, or the exponent-4
// variant (v mod 4, commutator coordinates mod 2). Realized as the central
// extension (v, w)(v', w') = (v + v', w + w' + beta(v, v')) with
// beta(v, v')_{ij} = v_i * v'_j for i < j, which makes [e_i, e_j] the (i,j)
// commutator basis vector.
FiniteGroup free_nil_c2(int p, int k, const BuildOptions& opts = {});
FiniteGroup free_nil_c2_exp4(int k, const BuildOptions& opts = {});

FiniteGroup direct_product(const FiniteGroup& A, const FiniteGroup& B,
                           const BuildOptions& opts = {});

}  // namespace engel

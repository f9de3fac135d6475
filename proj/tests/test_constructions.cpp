#include <doctest.h>

#include <random>

#include "engel/constructions.hpp"
#include "engel/structure.hpp"
#include "test_helpers.hpp"

using namespace engel;

TEST_CASE("spec grammar") {
  SUBCASE("whitespace-insensitive product") {
    GroupSpec s = parse_group_spec("C2 x C2");
    CHECK(s.kind == GroupSpec::Kind::product);
    CHECK(s.args[0].kind == GroupSpec::Kind::cyclic);
    CHECK(parse_group_spec("C2xC2") == s);
  }
  SUBCASE("wreath with nested product") {
    GroupSpec s = parse_group_spec("wreath(C4, C2 x C2)");
    CHECK(s.kind == GroupSpec::Kind::wreath);
    CHECK(projected_order(s) == 1024);
  }
  SUBCASE("free nilpotent descriptors") {
    CHECK(projected_order(parse_group_spec("fnil(p=3,k=2)")) == 27);
    CHECK(projected_order(parse_group_spec("fnil(p=3,k=3)")) == 729);
    CHECK(projected_order(parse_group_spec("fnil4(k=2)")) == 32);
    CHECK(projected_order(parse_group_spec("fnil4(k=3)")) == 512);
  }
  SUBCASE("errors carry a position") {
    CHECK_THROWS_AS(parse_group_spec("C2 y C2"), parse_error);
    CHECK_THROWS_AS(parse_group_spec("wreath(C2"), parse_error);
    CHECK_THROWS_AS(parse_group_spec("zorp"), parse_error);
    CHECK_THROWS_AS(parse_group_spec("fnil(p=4,k=2)"), parse_error);
    bool threw = false;
    try {
      parse_group_spec("C2 x zorp");
    } catch (const parse_error& e) {
      threw = true;
      CHECK(e.position == 5);
    }
    CHECK(threw);
  }
  SUBCASE("round trip: printed descriptors re-parse identically") {
    for (const char* text :
         {"C2", "C6", "C2xC2", "D8", "D16", "Q8", "S3", "S4", "A4",
          "wreath(C2,C2)", "wreath(C4,C2xC2)", "wreath(C2,C2xC2)",
          "fnil(p=3,k=2)", "fnil4(k=3)", "gl(p=2,k=3)", "C2xC2xC2"}) {
      GroupSpec s = parse_group_spec(text);
      CHECK(parse_group_spec(s.to_string()) == s);
    }
  }
}

TEST_CASE("basic zoo orders and shapes") {
  CHECK(testutil::cached_group("C6").order() == 6);
  CHECK(testutil::cached_group("C1").order() == 1);
  CHECK(testutil::cached_group("S4").order() == 24);
  CHECK(testutil::cached_group("A4").order() == 12);
  CHECK(testutil::cached_group("D16").order() == 16);
  CHECK(testutil::cached_group("C2xC2").order() == 4);

  CHECK(nilpotency_class(testutil::cached_group("C6")) == 1);
  CHECK_FALSE(nilpotency_class(testutil::cached_group("S4")).has_value());
}

TEST_CASE("Q8 relations") {
  const FiniteGroup& G = testutil::cached_group("Q8");
  REQUIRE(G.order() == 8);
  Element i = G.generators()[0], j = G.generators()[1];
  Element i2 = G.mul(i, i);
  CHECK(i2 != 0);
  CHECK(G.mul(j, j) == i2);                   // i^2 = j^2 = -1
  Element ij = G.mul(i, j);
  CHECK(G.mul(ij, ij) == i2);                 // (ij)^2 = -1
  CHECK(G.element_order(i) == 4);
  CHECK(center(G).elements.size() == 2);
  CHECK(nilpotency_class(G) == 2);
}

TEST_CASE("wreath products") {
  SUBCASE("order formula |A|^|B| * |B|") {
    CHECK(testutil::cached_group("wreath(C2,C2)").order() == 8);
    CHECK(testutil::cached_group("wreath(C2,C2xC2)").order() == 64);
    CHECK(testutil::cached_group("wreath(C3,C3)").order() == 81);
  }
  SUBCASE("wreath(C2,C2) is the dihedral group of order 8") {
    const FiniteGroup& W = testutil::cached_group("wreath(C2,C2)");
    const FiniteGroup& D = testutil::cached_group("D8");
    // brute-force isomorphism search on generator images
    REQUIRE(W.generators().size() == 2);
    Element wa = W.generators()[0], wx = W.generators()[1];
    bool iso_found = false;
    for (Element p = 0; p < 8 && !iso_found; ++p)
      for (Element q = 0; q < 8 && !iso_found; ++q) {
        // map wa -> p, wx -> q; grow the word map
        std::vector<int> img(8, -1);
        img[0] = 0;
        bool ok = true;
        std::vector<Element> queue{0};
        std::vector<std::pair<Element, Element>> gen_pairs{{wa, p}, {wx, q}};
        for (std::size_t qi = 0; qi < queue.size() && ok; ++qi) {
          Element w = queue[qi];
          for (auto [g, h] : gen_pairs) {
            Element wg = W.mul(w, g);
            Element im = D.mul(img[w], h);
            if (img[wg] == -1) {
              img[wg] = im;
              queue.push_back(wg);
            } else if (img[wg] != im) {
              ok = false;
              break;
            }
          }
        }
        if (!ok || queue.size() != 8) continue;
        std::vector<bool> hit(8, false);
        bool bij = true;
        for (int v : img) {
          if (v < 0 || hit[v]) bij = false;
          else hit[v] = true;
        }
        // verify homomorphism on all pairs
        if (bij) {
          bool hom = true;
          for (Element u = 0; u < 8 && hom; ++u)
            for (Element v = 0; v < 8 && hom; ++v)
              if (img[W.mul(u, v)] != D.mul(img[u], img[v])) hom = false;
          iso_found = hom;
        }
      }
    CHECK(iso_found);
  }
  SUBCASE("marks tag top generators and the embedded base") {
    const FiniteGroup& W = testutil::cached_group("wreath(C2,C2xC2)");
    REQUIRE(W.has_mark("x"));
    REQUIRE(W.has_mark("y"));
    Element x = W.mark("x"), y = W.mark("y");
    CHECK(W.element_order(x) == 2);
    CHECK(W.element_order(y) == 2);
    CHECK(W.mul(x, y) == W.mul(y, x));
    const auto& base = W.mark_sets().at("wreath_base_copy");
    CHECK(base.size() == 2);
    const auto& top = W.mark_sets().at("wreath_top_copy");
    CHECK(top.size() == 4);
  }
  SUBCASE("wreath(C3,C3) is nilpotent of class 3") {
    CHECK(nilpotency_class(testutil::cached_group("wreath(C3,C3)")) == 3);
  }
  SUBCASE("base generator of wreath(C4,C2xC2) has order 4") {
    const FiniteGroup& W = testutil::cached_group("wreath(C4,C2xC2)");
    REQUIRE(W.order() == 1024);
    CHECK(W.element_order(W.generators()[0]) == 4);
  }
}

TEST_CASE("free nilpotent class-2 groups") {
  SUBCASE("fnil(3,2) is the mod-3 Heisenberg group") {
    const FiniteGroup& G = testutil::cached_group("fnil(p=3,k=2)");
    CHECK(G.order() == 27);
    CHECK(group_exponent(G) == 3);
    CHECK(nilpotency_class(G) == 2);
  }
  SUBCASE("fnil(3,3) has the projected order") {
    CHECK(testutil::cached_group("fnil(p=3,k=3)").order() == 729);
  }
  SUBCASE("fnil4(2): order 32, exponent 4, class 2, [x,y]^2 = 1") {
    const FiniteGroup& G = testutil::cached_group("fnil4(k=2)");
    CHECK(G.order() == 32);
    CHECK(group_exponent(G) == 4);
    CHECK(nilpotency_class(G) == 2);
    Element c = G.comm(G.generators()[0], G.generators()[1]);
    CHECK(c != 0);
    CHECK(G.mul(c, c) == 0);
  }
  SUBCASE("the bilinear-form convention gives [e_i,e_j] = +w_ij") {
    // In fnil(3,2) the encoding is v0 + 3 v1 + 9 w01, so the +w01 basis
    // vector has index 9 and its inverse (coefficient 2) index 18.
    const FiniteGroup& G = testutil::cached_group("fnil(p=3,k=2)");
    Element e0 = G.generators()[0], e1 = G.generators()[1];
    CHECK(e0 == 1);
    CHECK(e1 == 3);
    CHECK(G.comm(e0, e1) == 9);
    CHECK(G.comm(e1, e0) == 18);
  }
  SUBCASE("commutators of generators commute with everything") {
    const FiniteGroup& G = testutil::cached_group("fnil4(k=3)");
    REQUIRE(G.order() == 512);
    Element c = G.comm(G.generators()[0], G.generators()[1]);
    for (Element g = 0; g < G.order(); ++g)
      REQUIRE(G.mul(c, g) == G.mul(g, c));
  }
}

TEST_CASE("direct products and capacity") {
  const FiniteGroup& G = testutil::cached_group("C2xC2");
  CHECK(group_exponent(G) == 2);
  BuildOptions small;
  small.cap = 100;
  CHECK_THROWS_AS(make_group(parse_group_spec("wreath(C4,C2xC2)"), small),
                  capacity_error);
  CHECK_THROWS_AS(make_group(parse_group_spec("S8"), small), capacity_error);
  CHECK_THROWS_AS(make_group(parse_group_spec("gl(p=2,k=3)"), small),
                  capacity_error);
}

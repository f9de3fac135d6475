#include <doctest.h>

#include "engel/structure.hpp"
#include "naive_oracle.hpp"
#include "test_helpers.hpp"

using namespace engel;

TEST_CASE("normal closures in S3") {
  const FiniteGroup& G = testutil::cached_group("S3");
  Element a = testutil::by_label(G, "a");  // a transposition
  Element b = testutil::by_label(G, "b");  // a 3-cycle

  CHECK(normal_closure(G, {0}).elements == std::vector<Element>{0});
  CHECK(normal_closure(G, {a}).elements.size() == 6);
  CHECK(normal_closure(G, {b}).elements.size() == 3);

  // oracle: closure of all conjugates over the raw table
  oracle::PermTable t = oracle::perm_table(3, {{1, 0, 2}, {1, 2, 0}});
  std::vector<int> conj;
  for (int g = 0; g < 6; ++g)
    conj.push_back(t.mul(t.mul(t.inv(g), b), g));
  CHECK(oracle::table_closure(t.table, conj).size() == 3);
}

TEST_CASE("subnormal defects") {
  const FiniteGroup& G = testutil::cached_group("S3");
  Subgroup whole = closure(G, {1, 2});
  Subgroup a3 = closure(G, {testutil::by_label(G, "b")});
  Subgroup two = closure(G, {testutil::by_label(G, "a")});

  CHECK(subnormal_defect(G, whole) == 0);
  CHECK(subnormal_defect(G, a3) == 1);
  CHECK_FALSE(subnormal_defect(G, two).has_value());
}

TEST_CASE("series shapes") {
  SUBCASE("abelian: upper central stabilizes at G after one step") {
    const FiniteGroup& G = testutil::cached_group("C6");
    SeriesResult s = series(G, SeriesKind::upper_central);
    REQUIRE(s.terms.size() == 3);
    CHECK(s.terms[0].is_trivial());
    CHECK(s.terms[1].is_whole_group());
    CHECK(s.terms[2].is_whole_group());
    CHECK(s.length == 1);
    CHECK(s.stabilized);
  }
  SUBCASE("S3: trivial hypercenter, derived length 2") {
    const FiniteGroup& G = testutil::cached_group("S3");
    CHECK(hypercenter(G).is_trivial());
    CHECK(center(G).is_trivial());
    CHECK_FALSE(nilpotency_class(G).has_value());
    CHECK(derived_length(G) == 2);
    SeriesResult lower = series(G, SeriesKind::lower_central);
    CHECK(lower.terms.back().elements.size() == 3);  // stuck at A3
  }
  SUBCASE("D8: class 2, center of size 2") {
    const FiniteGroup& G = testutil::cached_group("D8");
    CHECK(nilpotency_class(G) == 2);
    CHECK(center(G).elements.size() == 2);
    SeriesResult upper = series(G, SeriesKind::upper_central);
    CHECK(upper.terms[1].elements.size() == 2);
    CHECK(upper.terms.back().is_whole_group());
  }
}

TEST_CASE("consecutive series terms distinct except the stabilized pair") {
  for (const char* spec : {"C6", "S3", "D8", "S4", "Q8", "A4"}) {
    const FiniteGroup& G = testutil::cached_group(spec);
    for (SeriesKind kind : {SeriesKind::upper_central, SeriesKind::lower_central,
                            SeriesKind::derived}) {
      SeriesResult s = series(G, kind);
      REQUIRE(s.terms.size() >= 2);
      for (std::size_t i = 0; i + 2 < s.terms.size(); ++i)
        CHECK(s.terms[i].elements != s.terms[i + 1].elements);
      CHECK(s.terms[s.terms.size() - 2].elements == s.terms.back().elements);
    }
  }
}

TEST_CASE("upper central terms are conjugation-invariant") {
  for (const char* spec : {"S4", "D16", "wreath(C2,C2)"}) {
    const FiniteGroup& G = testutil::cached_group(spec);
    SeriesResult s = series(G, SeriesKind::upper_central);
    for (const Subgroup& t : s.terms)
      for (Element h : t.elements)
        for (Element g = 0; g < G.order(); ++g)
          REQUIRE(t.contains(G.conj(h, g)));
  }
}

TEST_CASE("nilpotency oracles agree") {
  for (const char* spec : {"C6", "S3", "D8", "D16", "Q8", "S4", "A4",
                           "wreath(C2,C2)", "fnil(p=3,k=2)"}) {
    const FiniteGroup& G = testutil::cached_group(spec);
    bool via_lower = nilpotency_class(G).has_value();
    bool via_hyper = hypercenter(G).is_whole_group();
    CHECK(via_lower == via_hyper);
  }
}

TEST_CASE("radicals") {
  SUBCASE("nilpotent group: all four radicals are the whole group") {
    const FiniteGroup& G = testutil::cached_group("D8");
    RadicalReport r = radicals(G);
    CHECK(r.fitting.is_whole_group());
    CHECK(r.baer.is_whole_group());
    CHECK(r.gruenberg.is_whole_group());
    CHECK(r.hirsch_plotkin.is_whole_group());
  }
  SUBCASE("S3: Fitting is A3") {
    const FiniteGroup& G = testutil::cached_group("S3");
    RadicalReport r = radicals(G);
    CHECK(r.fitting.elements.size() == 3);
    Element b = testutil::by_label(G, "b");
    CHECK(r.fitting.contains(b));
    CHECK(r.fitting.contains(G.mul(b, b)));
  }
  SUBCASE("S4: Fitting is the Klein four group") {
    const FiniteGroup& G = testutil::cached_group("S4");
    RadicalReport r = radicals(G);
    REQUIRE(r.fitting.elements.size() == 4);
    for (Element e : r.fitting.elements)
      if (e != 0) CHECK(G.element_order(e) == 2);
    CHECK(is_normal(G, r.fitting.elements));
    CHECK(is_abelian_subset(G, r.fitting.elements));
  }
  SUBCASE("the chain collapses to equality on finite groups") {
    for (const char* spec : {"S3", "S4", "A4", "D16", "wreath(C2,C2)"}) {
      RadicalReport r = radicals(testutil::cached_group(spec));
      CHECK(r.fitting.elements == r.baer.elements);
      CHECK(r.baer.elements == r.gruenberg.elements);
      CHECK(r.gruenberg.elements == r.hirsch_plotkin.elements);
    }
  }
  SUBCASE("baer membership agrees with per-element defects") {
    const FiniteGroup& G = testutil::cached_group("S4");
    RadicalReport r = radicals(G);
    for (Element x = 0; x < G.order(); ++x) {
      bool defect = subnormal_defect(G, closure(G, {x})).has_value();
      CHECK(defect == r.baer.contains(x));
    }
  }
}

TEST_CASE("normalizers") {
  const FiniteGroup& G = testutil::cached_group("S3");
  SUBCASE("normal subgroup: normalizer is G") {
    Subgroup a3 = closure(G, {testutil::by_label(G, "b")});
    CHECK(normalizer(G, a3).is_whole_group());
  }
  SUBCASE("<(12)> is self-normalizing in S3") {
    Subgroup h = closure(G, {testutil::by_label(G, "a")});
    Subgroup n = normalizer(G, h);
    CHECK(n.elements == h.elements);
    CHECK(n.elements.size() == 2);
  }
  SUBCASE("a Sylow 2-subgroup of S4 is self-normalizing") {
    const FiniteGroup& S4 = testutil::cached_group("S4");
    // deterministic scan for an order-8 subgroup
    Subgroup syl;
    bool found = false;
    for (Element u = 1; u < S4.order() && !found; ++u)
      for (Element v = u + 1; v < S4.order() && !found; ++v) {
        Subgroup h = closure(S4, {u, v});
        if (h.elements.size() == 8) {
          syl = h;
          found = true;
        }
      }
    REQUIRE(found);
    CHECK(normalizer(S4, syl).elements == syl.elements);
  }
}

TEST_CASE("conjugacy classes and cyclic index") {
  const FiniteGroup& G = testutil::cached_group("S4");
  ConjugacyInfo cls = conjugacy_classes(G);
  CHECK(cls.reps.size() == 5);  // S4 has 5 classes
  std::size_t total = 0;
  for (const auto& c : cls.classes) total += c.size();
  CHECK(total == 24);

  CyclicIndex cyc = cyclic_subgroup_index(G);
  for (Element e = 0; e < G.order(); ++e) {
    const std::vector<Element>& sub = cyc.subs[cyc.sub_of[e]];
    CHECK(static_cast<int>(sub.size()) == G.element_order(e));
    CHECK(std::binary_search(sub.begin(), sub.end(), e));
  }
}

TEST_CASE("group exponent") {
  CHECK(group_exponent(testutil::cached_group("C6")) == 6);
  CHECK(group_exponent(testutil::cached_group("S4")) == 12);
  CHECK(group_exponent(testutil::cached_group("Q8")) == 4);
}

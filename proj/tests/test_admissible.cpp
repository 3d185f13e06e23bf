#include "doctest.h"

#include <algorithm>

#include "brauer/admissible.hpp"
#include "brauer/dtl.hpp"

using namespace brauer;

TEST_CASE("admissibility examples") {
  RootSystem d4(DynkinDiagram::D(4));
  auto x = parse_set(d4, "a1,a2,a4");
  CHECK(is_orthogonal(d4, x));
  CHECK_FALSE(is_admissible(d4, x));
  CHECK(closure(d4, x) == parse_set(d4, "{a1, a2, a4, a1+a2+2a3+a4}"));
  CHECK(is_admissible(d4, RootSet{}));

  RootSystem a4(DynkinDiagram::A(4));
  CHECK(is_admissible(a4, parse_set(a4, "a1,a3")));
  RootSystem a3(DynkinDiagram::A(3));
  CHECK(closure(a3, parse_set(a3, "a1")) == parse_set(a3, "a1"));
  CHECK_THROWS_AS(closure(a3, parse_set(a3, "a1,a2")), std::invalid_argument);
}

TEST_CASE("closure is idempotent and fixes admissible sets") {
  for (auto label : {"D4", "D5", "E6"}) {
    RootSystem rs(DynkinDiagram::parse(label));
    for (const auto& b : orthogonal_sets(rs)) {
      auto c = closure(rs, b);
      CHECK(is_admissible(rs, c));
      CHECK(std::includes(c.begin(), c.end(), b.begin(), b.end()));
      CHECK(closure(rs, c) == c);
      if (is_admissible(rs, b)) CHECK(c == b);
    }
  }
}

TEST_CASE("both admissibility rules agree") {
  for (auto label : {"A3", "A5", "D4", "D5", "E6"}) {
    RootSystem rs(DynkinDiagram::parse(label));
    for (const auto& b : orthogonal_sets(rs)) CHECK(admissible_by_triples(rs, b) == admissible_by_orbit(rs, b));
  }
}

TEST_CASE("Weyl action") {
  RootSystem a4(DynkinDiagram::A(4));
  auto b = parse_set(a4, "a1+a2,a4");
  CHECK(weyl_action(a4, {4, 1, 2, 1}, b) == b);
  CHECK(weyl_action(a4, {}, b) == b);
  auto s = parse_set(a4, "a1");
  CHECK(weyl_action(a4, {1}, s) == s);
}

TEST_CASE("ei action") {
  RootSystem a2(DynkinDiagram::A(2));
  CHECK(ei_action(a2, 1, parse_set(a2, "a1")) == parse_set(a2, "a1"));
  CHECK(ei_action(a2, 1, RootSet{}) == parse_set(a2, "a1"));
  CHECK(ei_action(a2, 1, parse_set(a2, "a2")) == parse_set(a2, "a1"));
}

TEST_CASE("orbit of {a1,a3} in A4") {
  RootSystem rs(DynkinDiagram::A(4));
  auto p = orbit(rs, parse_set(rs, "a1,a3"));
  // Independent count: unordered pairs of disjoint 2-subsets of 5 points.
  int pairs = 0;
  for (int a = 0; a < 5; ++a)
    for (int b = a + 1; b < 5; ++b)
      for (int c = a + 1; c < 5; ++c)
        for (int d = c + 1; d < 5; ++d)
          if (c != b && d != b) ++pairs;
  CHECK(pairs == 15);
  CHECK(static_cast<int>(p.sets.size()) == pairs);
  CHECK(p.sets[p.maximal] == parse_set(rs, "a1+a2+a3,a2+a3+a4"));
  CHECK(set_height(p, parse_set(rs, "a1,a3")) == 0);
  CHECK(set_height(p, p.sets[p.maximal]) == p.d);
  CHECK(orbit(rs, RootSet{}).sets.size() == 1);
}

TEST_CASE("orbit of a non-admissible set is rejected") {
  RootSystem d4(DynkinDiagram::D(4));
  CHECK_THROWS(orbit(d4, parse_set(d4, "a1,a2,a4")));
}

TEST_CASE("orbit posets are graded with a unique maximum") {
  for (auto label : {"A4", "A5", "D4", "D5", "E6"}) {
    RootSystem rs(DynkinDiagram::parse(label));
    HeightTable ht(rs);
    for (const auto& b : admissible_sets(rs)) {
      const auto& p = ht.poset_of(b);
      REQUIRE(p.maximal >= 0);
      int h = ht.height(b);
      CHECK(h >= 0);
      CHECK(h <= p.d);
      for (int i = 1; i <= rs.rank(); ++i) {
        auto m = classify_move(rs, b, i);
        auto r = reflect_set(rs, i, b);
        if (m == Move::lower) CHECK(ht.height(r) == h - 1);
        if (m == Move::raise) CHECK(ht.height(r) == h + 1);
        if (m == Move::none) CHECK(r == b);
      }
    }
  }
}

TEST_CASE("sigma-fixed height-0 sets") {
  auto s1 = sigma_fixed_height0(1);
  REQUIRE(s1.size() == 2);
  CHECK(s1[0] == std::vector<RootSet>{RootSet{}});
  RootSystem a1(DynkinDiagram::A(1));
  CHECK(s1[1] == std::vector<RootSet>{parse_set(a1, "a1")});

  auto s2 = sigma_fixed_height0(2);
  RootSystem a3(DynkinDiagram::A(3));
  auto target = parse_set(a3, "a1,a3");
  CHECK(std::find(s2[2].begin(), s2[2].end(), target) != s2[2].end());
  std::size_t total = 0;
  for (const auto& g : s2) total += g.size();
  CHECK(total == 4);

  // Each sigma-invariant basis diagram is top times bottom with matching
  // sizes, so the squared counts add up to the STL rank.
  for (int n = 1; n <= 4; ++n) {
    long long squares = 0;
    for (const auto& g : sigma_fixed_height0(n)) squares += static_cast<long long>(g.size() * g.size());
    CHECK(squares == binomial(2 * n, n));
  }
}

TEST_CASE("parse errors") {
  RootSystem a3(DynkinDiagram::A(3));
  CHECK_THROWS(parse_set(a3, "a1,,a2"));
  CHECK_THROWS(parse_set(a3, "a4"));
  CHECK_THROWS(parse_set(a3, "2a1"));
  CHECK(parse_set(a3, "{}").empty());
  CHECK(parse_set(a3, "").empty());
}

#include "doctest.h"

#include "brauer/rootsys.hpp"

using namespace brauer;

namespace {

Root coeffs(std::initializer_list<int> c) {
  Root r(static_cast<Eigen::Index>(c.size()));
  int k = 0;
  for (int x : c) r(k++) = x;
  return r;
}

}  // namespace

TEST_CASE("positive root counts") {
  for (int n = 1; n <= 8; ++n) CHECK(RootSystem(DynkinDiagram::A(n)).num_positive() == n * (n + 1) / 2);
  for (int n = 4; n <= 8; ++n) CHECK(RootSystem(DynkinDiagram::D(n)).num_positive() == n * (n - 1));
  CHECK(RootSystem(DynkinDiagram::E(6)).num_positive() == 36);
  CHECK(RootSystem(DynkinDiagram::E(7)).num_positive() == 63);
  CHECK(RootSystem(DynkinDiagram::E(8)).num_positive() == 120);
}

TEST_CASE("A2 roots") {
  RootSystem rs(DynkinDiagram::A(2));
  REQUIRE(rs.num_positive() == 3);
  CHECK(rs.is_root(coeffs({1, 0})));
  CHECK(rs.is_root(coeffs({0, 1})));
  CHECK(rs.is_root(coeffs({1, 1})));
  CHECK_FALSE(rs.is_root(coeffs({2, 1})));
  CHECK(rs.reflect(coeffs({0, 1}), coeffs({1, 0})) == coeffs({1, 1}));
  CHECK(rs.reflect(coeffs({1, 0}), coeffs({1, 0})) == coeffs({-1, 0}));
}

TEST_CASE("simple root inner products follow the diagram") {
  for (auto d : {DynkinDiagram::A(6), DynkinDiagram::D(6), DynkinDiagram::E(7)}) {
    RootSystem rs(d);
    for (int i = 1; i <= rs.rank(); ++i)
      for (int j = 1; j <= rs.rank(); ++j) {
        int expected = i == j ? 2 : d.adjacent(i, j) ? -1 : 0;
        CHECK(rs.inner(rs.simple(i), rs.simple(j)) == expected);
      }
    for (int id = 0; id < rs.num_positive(); ++id) {
      CHECK(rs.inner(id, id) == 2);
      CHECK(rs.root(id).minCoeff() >= 0);
    }
  }
}

TEST_CASE("reflection agrees with the epsilon realization") {
  for (auto d : {DynkinDiagram::A(5), DynkinDiagram::D(5)}) {
    RootSystem rs(d);
    for (const auto& a : rs.positive_roots())
      for (const auto& b : rs.positive_roots()) {
        Eigen::VectorXi ea = rs.epsilon(a), eb = rs.epsilon(b);
        Eigen::VectorXi expect = eb - eb.dot(ea) * ea;
        CHECK(rs.epsilon(rs.reflect(b, a)) == expect);
      }
  }
  RootSystem d4(DynkinDiagram::D(4));
  CHECK(d4.reflect(coeffs({1, 1, 2, 1}), coeffs({0, 0, 1, 0})) == coeffs({1, 1, 1, 1}));
}

TEST_CASE("heights") {
  CHECK(root_height(coeffs({1, 0})) == 1);
  CHECK(root_height(coeffs({1, 1})) == 2);
  CHECK(root_height(coeffs({1, 1, 2, 1})) == 5);
  CHECK_THROWS(root_height(coeffs({1, -1})));
}

TEST_CASE("star on D4") {
  RootSystem rs(DynkinDiagram::D(4));
  auto a1 = rs.parse("a1"), a2 = rs.parse("a2"), a4 = rs.parse("a4"), top = rs.parse("a1+a2+2a3+a4");
  CHECK(rs.format_epsilon(a1) == "e2-e1");
  CHECK(rs.star(a1) == a2);
  CHECK(rs.format_epsilon(top) == "e4+e3");
  CHECK(rs.star(top) == a4);
  for (const auto& r : rs.positive_roots()) CHECK(rs.star(rs.star(r)) == r);
  RootSystem a3(DynkinDiagram::A(3));
  CHECK_THROWS(a3.star(a3.parse("a1")));
}

TEST_CASE("parse and format round trip") {
  RootSystem rs(DynkinDiagram::E(6));
  for (const auto& r : rs.positive_roots()) CHECK(rs.parse(rs.format(r)) == r);
  CHECK_THROWS(rs.parse("a1+a7"));
  CHECK_FALSE(rs.is_root(rs.parse("2a1")));
  CHECK(rs.parse("a1-a2") == rs.root(rs.simple(1)) - rs.root(rs.simple(2)));
  CHECK_THROWS(DynkinDiagram::parse("Q3"));
  CHECK_THROWS(DynkinDiagram::parse("E9"));
}

TEST_CASE("Weyl group orders") {
  CHECK(RootSystem(DynkinDiagram::A(3)).weyl_order() == 24);
  CHECK(RootSystem(DynkinDiagram::D(4)).weyl_order() == 192);
  CHECK(RootSystem(DynkinDiagram::E(6)).weyl_order() == 51840);
}

#include "doctest.h"

#include <limits>
#include <stdexcept>
#include <vector>

#include "brauer/scalars.hpp"

using namespace brauer;

TEST_CASE("h_mul follows the defining relations") {
  CHECK(HScalar::xi() * HScalar::xi() == HScalar::delta(2));
  CHECK(HScalar::xi() * HScalar::theta() == HScalar::theta(1));
  CHECK(HScalar::theta() * HScalar::xi() == HScalar::theta(1));
  CHECK(HScalar::theta() * HScalar::theta() == HScalar::theta(2));
  CHECK(HScalar::delta(0) * HScalar::xi(3) == HScalar::xi(3));
  CHECK(HScalar::delta(2) * HScalar::delta(-5) == HScalar::delta(-3));
}

TEST_CASE("h_mul is associative and commutative on a grid") {
  std::vector<HScalar> xs;
  for (int k = -2; k <= 2; ++k)
    for (Tag t : {Tag::one, Tag::xi, Tag::theta}) xs.push_back({k, t});
  for (auto a : xs)
    for (auto b : xs) {
      CHECK(a * b == b * a);
      for (auto c : xs) CHECK((a * b) * c == a * (b * c));
    }
}

TEST_CASE("tags and delta powers") {
  CHECK(h_eq_mod_delta(HScalar::theta(2), HScalar::theta()));
  CHECK_FALSE(h_eq_mod_delta(HScalar::xi(), HScalar::theta()));
  CHECK(h_eq_mod_delta(HScalar::delta(1), HScalar::delta(5)));
  CHECK((DeltaPower{2} * DeltaPower{3}).k == 5);
  CHECK(to_string(HScalar::theta(2)) == "d^2*theta");
  CHECK(parse_tag(tag_name(Tag::xi)) == Tag::xi);
  CHECK_THROWS_AS(parse_tag("zeta"), std::invalid_argument);
}

TEST_CASE("exponent overflow is reported") {
  const int big = std::numeric_limits<int>::max();
  CHECK_THROWS_AS(add_exponent(big, 1), std::overflow_error);
  CHECK_THROWS_AS(HScalar::delta(big) * HScalar::delta(1), std::overflow_error);
  CHECK(add_exponent(big, -1) == big - 1);
}

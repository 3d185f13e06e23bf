#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace brauer {

// Sum of two delta exponents; throws std::overflow_error instead of wrapping.
int add_exponent(int a, int b);

struct DeltaPower {
  int k = 0;
  friend auto operator<=>(const DeltaPower&, const DeltaPower&) = default;
};

DeltaPower operator*(DeltaPower a, DeltaPower b);

enum class Tag : std::uint8_t { one = 0, xi = 1, theta = 2 };

// delta^k times one of {1, xi, theta}.  Every element of H has exactly one
// such form, so the struct is always canonical.
struct HScalar {
  int k = 0;
  Tag tag = Tag::one;

  static HScalar delta(int k = 1) { return {k, Tag::one}; }
  static HScalar xi(int k = 0) { return {k, Tag::xi}; }
  static HScalar theta(int k = 0) { return {k, Tag::theta}; }

  friend auto operator<=>(const HScalar&, const HScalar&) = default;
};

// xi^2 = delta^2, xi theta = delta theta, theta^2 = delta^2 theta.
HScalar h_mul(HScalar a, HScalar b);
inline HScalar operator*(HScalar a, HScalar b) { return h_mul(a, b); }

bool h_eq_mod_delta(HScalar a, HScalar b);

std::string_view tag_name(Tag t);
Tag parse_tag(std::string_view s);
std::string to_string(HScalar h);

}  // namespace brauer

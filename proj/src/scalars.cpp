#include "brauer/scalars.hpp"

#include <stdexcept>
#include <utility>

namespace brauer {

int add_exponent(int a, int b) {
  int r;
  if (__builtin_add_overflow(a, b, &r))
    throw std::overflow_error("delta exponent overflow");
  return r;
}

DeltaPower operator*(DeltaPower a, DeltaPower b) { return {add_exponent(a.k, b.k)}; }

HScalar h_mul(HScalar a, HScalar b) {
  int k = add_exponent(a.k, b.k);
  Tag s = a.tag, t = b.tag;
  if (s > t) std::swap(s, t);
  if (s == Tag::one) return {k, t};
  if (t == Tag::xi) return {add_exponent(k, 2), Tag::one};  // xi xi
  if (s == Tag::xi) return {add_exponent(k, 1), Tag::theta};  // xi theta
  return {add_exponent(k, 2), Tag::theta};                    // theta theta
}

bool h_eq_mod_delta(HScalar a, HScalar b) { return a.tag == b.tag; }

std::string_view tag_name(Tag t) {
  switch (t) {
    case Tag::one: return "one";
    case Tag::xi: return "xi";
    case Tag::theta: return "theta";
  }
  return "?";
}

Tag parse_tag(std::string_view s) {
  if (s == "one") return Tag::one;
  if (s == "xi") return Tag::xi;
  if (s == "theta") return Tag::theta;
  throw std::invalid_argument("unknown scalar tag: " + std::string(s));
}

std::string to_string(HScalar h) {
  std::string out;
  if (h.k != 0) out = "d^" + std::to_string(h.k);
  if (h.tag != Tag::one) {
    if (!out.empty()) out += "*";
    out += tag_name(h.tag);
  }
  return out.empty() ? "1" : out;
}

}  // namespace brauer

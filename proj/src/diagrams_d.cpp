#include "brauer/diagrams_d.hpp"

#include <stdexcept>
#include <unordered_set>

namespace brauer {

std::vector<std::pair<int, int>> ScaledDiagramD::decorated_pairs() const {
  std::vector<std::pair<int, int>> out;
  for (auto pr : conn.pairs())
    if (decorated >> pr.first & 1) out.push_back(pr);
  return out;
}

DiagramDKey key_of(const ScaledDiagramD& d) { return {d.scalar.tag, d.conn, d.decorated}; }

std::size_t DiagramDKeyHash::operator()(const DiagramDKey& k) const noexcept {
  std::size_t h = ConnectorHash{}(k.conn);
  h ^= (k.decorated + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2));
  return h * 31 + static_cast<std::size_t>(k.tag);
}

ScaledDiagramD identity_d(int strands) { return {HScalar{}, Connector::identity(strands), 0}; }

ScaledDiagramD lift(const ScaledDiagramA& a) { return {HScalar::delta(a.delta), a.conn, 0}; }

ScaledDiagramD scale(const ScaledDiagramD& d, HScalar h) {
  ScaledDiagramD out = d;
  out.scalar = h_mul(d.scalar, h);
  if (out.scalar.tag == Tag::theta) out.decorated = 0;
  return out;
}

ScaledDiagramD with_decorations(ScaledDiagramD d, const std::vector<std::pair<int, int>>& pairs) {
  for (auto [p, q] : pairs) {
    if (p > q) std::swap(p, q);
    if (p < 0 || q >= 2 * d.conn.strands() || d.conn.partner(p) != q)
      throw std::invalid_argument("decoration on a pair that is not in the connector");
    d.decorated |= std::uint64_t{1} << p;
  }
  return d;
}

void validate(const ScaledDiagramD& d) {
  if (d.conn.strands() > 32) throw std::logic_error("too many strands for the mark mask");
  for (int e = 0; e < 2 * d.conn.strands(); ++e)
    if ((d.decorated >> e & 1) && d.conn.partner(e) < e) throw std::logic_error("mark stored on the larger endpoint");
  if (__builtin_popcountll(d.decorated) % 2) throw std::logic_error("odd number of marked pairs");
  if (d.scalar.tag == Tag::theta && d.decorated) throw std::logic_error("marks alongside theta");
  if (d.scalar.tag != Tag::one && d.conn.top_arcs() == 0) throw std::logic_error("xi or theta on a diagram without horizontal strands");
}

ScaledDiagramD compose_l1(const ScaledDiagramD& a, const ScaledDiagramD& b) {
  if (a.decorated || b.decorated) throw std::invalid_argument("compose_l1: marked operand");
  auto [c, loops] = stack(a.conn, b.conn);
  HScalar h = h_mul(h_mul(a.scalar, b.scalar), HScalar::delta(loops));
  return {h, std::move(c), 0};
}

ScaledDiagramD psi_gen(char kind, int i, int n) {
  const int strands = n + 1;
  if (i < 1 || i > strands) throw std::out_of_range("psi_gen: node out of range");
  if (kind != 'E' && kind != 'R') throw std::invalid_argument("psi_gen: kind must be E or R");
  int a = i == 1 ? 1 : i - 1;
  ScaledDiagramD d = lift(kind == 'E' ? gen_e(a, strands) : gen_r(a, strands));
  if (i == 1) {
    if (kind == 'E') d = with_decorations(d, {{0, 1}, {strands, strands + 1}});
    else d = with_decorations(d, {{0, strands + 1}, {1, strands}});
  }
  return d;
}

ScaledDiagramD theta_cup(int strands) { return {HScalar::theta(-1), gen_e(1, strands).conn, 0}; }

ScaledDiagramD compose(const ScaledDiagramD& a, const ScaledDiagramD& b) {
  if (!a.decorated && !b.decorated) return compose_l1(a, b);
  return compose_l2(a, b);
}

std::vector<ScaledDiagramD> enumerate_monoid_d(const std::vector<ScaledDiagramD>& gens, std::size_t max_elements) {
  if (gens.empty()) throw std::invalid_argument("enumerate_monoid_d: no generators");
  ScaledDiagramD id = identity_d(gens.front().conn.strands());
  std::unordered_set<DiagramDKey, DiagramDKeyHash> seen{key_of(id)};
  std::vector<ScaledDiagramD> out{id};
  for (std::size_t k = 0; k < out.size(); ++k)
    for (const auto& g : gens) {
      ScaledDiagramD y = compose(g, out[k]);
      if (seen.insert(key_of(y)).second) {
        if (out.size() >= max_elements) throw std::length_error("enumerate_monoid_d: element cap exceeded");
        y.scalar.k = 0;
        out.push_back(std::move(y));
      }
    }
  return out;
}

std::vector<ScaledDiagramD> psi_generators(int n) {
  std::vector<ScaledDiagramD> g;
  for (int i = 1; i <= n + 1; ++i) {
    g.push_back(psi_gen('R', i, n));
    g.push_back(psi_gen('E', i, n));
  }
  return g;
}

Census basis_census(int n) {
  const int strands = n + 1;
  if (n < 1 || strands > 7) throw std::out_of_range("basis_census: 1 <= n <= 6");
  Census c;
  // All perfect matchings of the 2N endpoints.
  std::vector<int> match(2 * strands, -1);
  long long even_subsets = 1ll << (strands - 1);
  auto rec = [&](auto&& self) -> void {
    int e = 0;
    while (e < 2 * strands && match[e] >= 0) ++e;
    if (e == 2 * strands) {
      bool horizontal = false;
      for (int k = 0; k < strands; ++k)
        if (match[k] < strands) horizontal = true;
      c.t += even_subsets;
      c.t_plain += 1;
      if (horizontal) {
        c.xi += even_subsets;
        c.theta += 1;
        c.plain_horizontal += 1;
      }
      return;
    }
    for (int f = e + 1; f < 2 * strands; ++f) {
      if (match[f] >= 0) continue;
      match[e] = f;
      match[f] = e;
      self(self);
      match[e] = match[f] = -1;
    }
  };
  rec(rec);
  return c;
}

}  // namespace brauer

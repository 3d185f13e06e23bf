// Decorated composition for type D diagrams.
//
// Sign bookkeeping: an unmarked arc on points p < q kills e_q - e_p, a marked
// one kills e_q + e_p.  Inside one connected component of the middle row all
// e_m become proportional, e_m = lam_m * e_ref, with lam flipping across every
// marked arc.  Each arc of the component, and each new arc it produces,
// carries the sign lam at its larger endpoint (for a new arc, times the mark of
// the through segment leaving that endpoint).  A component contributes the
// product of these signs; the number of factors is always even, so the choice
// of e_ref cancels.  The product over components, when -1, is xi delta^{-1}.

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

#include "brauer/diagrams_d.hpp"

namespace brauer {

bool l2_available() { return true; }

namespace {

struct End {
  enum Kind { top, bottom, loop } kind;
  int endpoint = -1;  // result endpoint for top/bottom
  int lam = 1;        // sign of the middle point the last segment left from
  int mark = 0;       // mark on that last segment
  int parity = 0;
  int sign = 1;       // product over arcs met
};

[[noreturn]] void dump_and_throw(const ScaledDiagramD& a, const ScaledDiagramD& b, const std::string& why) {
  std::ostringstream os;
  os << "compose_l2: " << why << "; operands:";
  for (const auto* d : {&a, &b}) {
    os << " [" << to_string(d->scalar) << " pairs";
    for (auto [p, q] : d->conn.pairs()) os << " " << p << "-" << q;
    os << " marks";
    for (auto [p, q] : d->decorated_pairs()) os << " " << p << "-" << q;
    os << "]";
  }
  throw std::logic_error(os.str());
}

}  // namespace

ScaledDiagramD compose_l2(const ScaledDiagramD& a, const ScaledDiagramD& b) {
  const int n = a.conn.strands();
  if (b.conn.strands() != n) throw std::invalid_argument("compose_l2: strand counts differ");
  const Connector& ca = a.conn;
  const Connector& cb = b.conn;
  auto mark = [](const ScaledDiagramD& d, int e) {
    int f = d.conn.partner(e);
    return static_cast<int>(d.decorated >> std::min(e, f) & 1);
  };

  HScalar h = h_mul(a.scalar, b.scalar);
  std::vector<std::uint8_t> p(2 * n, 0xff);
  std::uint64_t marks = 0;
  int odd_loops = 0;
  int sign = 1;

  auto join = [&](int u, int v, int parity) {
    p[u] = static_cast<std::uint8_t>(v);
    p[v] = static_cast<std::uint8_t>(u);
    if (parity) marks |= std::uint64_t{1} << std::min(u, v);
  };
  for (int t = 0; t < n; ++t)
    if (ca.partner(t) < n && t < ca.partner(t)) join(t, ca.partner(t), mark(a, t));
  for (int t = n; t < 2 * n; ++t)
    if (cb.partner(t) >= n && t < cb.partner(t)) join(t, cb.partner(t), mark(b, t));

  std::vector<bool> seen(n, false);
  std::vector<int> lam(n, 0);
  // Walk from middle point m, first through a's bottom ('a') or b's top ('b').
  auto walk = [&](int m, bool via_a) {
    End out;
    std::vector<int> visited{m};
    lam[m] = 1;
    int cur = m;
    for (;;) {
      seen[cur] = true;
      int f, d, next;
      if (via_a) {
        f = ca.partner(n + cur);
        d = mark(a, n + cur);
        out.parity ^= d;
        if (f < n) {
          out.kind = End::top;
          out.endpoint = f;
          out.lam = lam[cur];
          out.mark = d;
          break;
        }
        next = f - n;
      } else {
        f = cb.partner(cur);
        d = mark(b, cur);
        out.parity ^= d;
        if (f >= n) {
          out.kind = End::bottom;
          out.endpoint = f;
          out.lam = lam[cur];
          out.mark = d;
          break;
        }
        next = f;
      }
      int tau = d ? -1 : 1;
      if (lam[next] != 0) {  // back at the start: a closed loop
        out.kind = End::loop;
        out.sign *= lam[std::max(cur, next)];
        break;
      }
      lam[next] = lam[cur] * tau;
      visited.push_back(next);
      out.sign *= lam[std::max(cur, next)];
      cur = next;
      via_a = !via_a;
    }
    for (int v : visited) lam[v] = 0;
    return out;
  };

  for (int m = 0; m < n; ++m) {
    if (seen[m]) continue;
    End r1 = walk(m, true);
    if (r1.kind == End::loop) {
      if (r1.parity) {
        ++odd_loops;
      } else {
        h = h_mul(h, HScalar::delta(1));
        sign *= r1.sign;
      }
      continue;
    }
    // The second walk restarts at m with lam[m] = 1, matching the first.
    End r2 = walk(m, false);
    int s = r1.sign * r2.sign;
    if (r1.kind == r2.kind) {
      const End& big = r1.endpoint > r2.endpoint ? r1 : r2;
      s *= (big.mark ? -1 : 1) * big.lam;
    }
    sign *= s;
    join(r1.endpoint, r2.endpoint, r1.parity ^ r2.parity);
  }

  for (int k = 0; k < odd_loops / 2; ++k) h = h_mul(h, HScalar::theta());
  if (odd_loops % 2) {
    if (!marks) dump_and_throw(a, b, "single marked loop with no marked pair left");
    marks &= marks - 1;
    h = h_mul(h, HScalar::theta(-1));
  }
  if (h.tag != Tag::theta && sign < 0) h = h_mul(h, HScalar::xi(-1));
  if (h.tag == Tag::theta) marks = 0;
  ScaledDiagramD out{h, Connector(std::move(p)), marks};
  try {
    validate(out);
  } catch (const std::logic_error& e) {
    dump_and_throw(a, b, e.what());
  }
  return out;
}

}  // namespace brauer

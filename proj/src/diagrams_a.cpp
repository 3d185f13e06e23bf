#include "brauer/diagrams_a.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <stdexcept>
#include <unordered_set>

namespace brauer {

Connector::Connector(std::vector<std::uint8_t> partner) : p_(std::move(partner)) {
  if (p_.size() % 2) throw std::invalid_argument("connector needs an even number of endpoints");
  for (std::size_t e = 0; e < p_.size(); ++e)
    if (p_[e] >= p_.size() || p_[e] == e || p_[p_[e]] != e) throw std::invalid_argument("connector is not a perfect matching");
}

Connector Connector::identity(int n) {
  if (n < 1 || n > 100) throw std::invalid_argument("strand count out of range");
  std::vector<std::uint8_t> p(2 * n);
  for (int i = 0; i < n; ++i) {
    p[i] = static_cast<std::uint8_t>(n + i);
    p[n + i] = static_cast<std::uint8_t>(i);
  }
  return Connector(std::move(p));
}

Connector Connector::from_pairs(int n, const std::vector<std::pair<int, int>>& pairs) {
  if (n < 1 || n > 100) throw std::invalid_argument("strand count out of range");
  std::vector<std::uint8_t> p(2 * n, 0xff);
  for (auto [a, b] : pairs) {
    if (a < 0 || b < 0 || a >= 2 * n || b >= 2 * n || a == b || p[a] != 0xff || p[b] != 0xff)
      throw std::invalid_argument("pairs do not form a perfect matching");
    p[a] = static_cast<std::uint8_t>(b);
    p[b] = static_cast<std::uint8_t>(a);
  }
  for (auto x : p)
    if (x == 0xff) throw std::invalid_argument("pairs do not cover every endpoint");
  return Connector(std::move(p));
}

std::vector<std::pair<int, int>> Connector::pairs() const {
  std::vector<std::pair<int, int>> out;
  for (int e = 0; e < static_cast<int>(p_.size()); ++e)
    if (e < p_[e]) out.emplace_back(e, p_[e]);
  return out;
}

int Connector::top_arcs() const {
  int n = strands(), k = 0;
  for (int e = 0; e < n; ++e)
    if (p_[e] < n && e < p_[e]) ++k;
  return k;
}

std::size_t ConnectorHash::operator()(const Connector& c) const noexcept {
  std::size_t h = 1469598103934665603ull;
  for (auto x : c.raw()) h = (h ^ x) * 1099511628211ull;
  return h;
}

ScaledDiagramA identity_a(int n) { return {0, Connector::identity(n)}; }

ScaledDiagramA gen_r(int i, int n) {
  if (i < 1 || i > n - 1) throw std::out_of_range("gen_r index out of range");
  std::vector<std::pair<int, int>> pr;
  for (int k = 0; k < n; ++k) {
    int to = k == i - 1 ? i : k == i ? i - 1 : k;
    pr.emplace_back(k, n + to);
  }
  return {0, Connector::from_pairs(n, pr)};
}

ScaledDiagramA gen_e(int i, int n) {
  if (i < 1 || i > n - 1) throw std::out_of_range("gen_e index out of range");
  std::vector<std::pair<int, int>> pr{{i - 1, i}, {n + i - 1, n + i}};
  for (int k = 0; k < n; ++k)
    if (k != i - 1 && k != i) pr.emplace_back(k, n + k);
  return {0, Connector::from_pairs(n, pr)};
}

ScaledDiagramA scale(const ScaledDiagramA& d, int k) { return {add_exponent(d.delta, k), d.conn}; }

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace

std::pair<Connector, int> stack(const Connector& a, const Connector& b) {
  const int n = a.strands();
  if (b.strands() != n) throw std::invalid_argument("compose: strand counts differ");
  // Nodes: 0..n-1 top of a, n..2n-1 the shared middle row, 2n..3n-1 bottom of b.
  UnionFind uf(3 * n);
  for (int e = 0; e < 2 * n; ++e) {
    uf.unite(e, a.partner(e));
    uf.unite(n + e, n + b.partner(e));
  }
  std::vector<int> first(3 * n, -1);
  std::vector<std::uint8_t> p(2 * n);
  auto outer = [n](int node) { return node < n ? node : node - n; };
  for (int node : {0, 2}) {
    for (int k = 0; k < n; ++k) {
      int v = node * n + k;
      int r = uf.find(v);
      if (first[r] < 0) {
        first[r] = v;
      } else {
        p[outer(v)] = static_cast<std::uint8_t>(outer(first[r]));
        p[outer(first[r])] = static_cast<std::uint8_t>(outer(v));
      }
    }
  }
  int loops = 0;
  for (int k = n; k < 2 * n; ++k) {
    int r = uf.find(k);
    if (first[r] < 0) {
      first[r] = k;
      ++loops;
    }
  }
  return {Connector(std::move(p)), loops};
}

ScaledDiagramA compose(const ScaledDiagramA& a, const ScaledDiagramA& b) {
  auto [c, loops] = stack(a.conn, b.conn);
  return {add_exponent(add_exponent(a.delta, b.delta), loops), std::move(c)};
}

bool is_planar(const Connector& c) {
  // Walk the boundary: top 1..N then bottom N..1.
  const int n = c.strands();
  std::vector<int> pos(2 * n);
  for (int i = 0; i < n; ++i) {
    pos[i] = i;
    pos[n + i] = 2 * n - 1 - i;
  }
  std::vector<int> at(2 * n);
  for (int e = 0; e < 2 * n; ++e) at[pos[e]] = e;
  std::vector<int> st;
  for (int k = 0; k < 2 * n; ++k) {
    int e = at[k];
    int q = pos[c.partner(e)];
    if (q > k) {
      st.push_back(q);
    } else {
      if (st.empty() || st.back() != k) return false;
      st.pop_back();
    }
  }
  return true;
}

Connector mirror(const Connector& c) {
  const int n = c.strands();
  auto m = [n](int e) { return e < n ? n - 1 - e : n + (2 * n - 1 - e); };
  std::vector<std::uint8_t> p(2 * n);
  for (int e = 0; e < 2 * n; ++e) p[m(e)] = static_cast<std::uint8_t>(m(c.partner(e)));
  return Connector(std::move(p));
}

ScaledDiagramA mirror(const ScaledDiagramA& d) { return {d.delta, mirror(d.conn)}; }

Connector transpose(const Connector& c) {
  const int n = c.strands();
  auto t = [n](int e) { return e < n ? e + n : e - n; };
  std::vector<std::uint8_t> p(2 * n);
  for (int e = 0; e < 2 * n; ++e) p[t(e)] = static_cast<std::uint8_t>(t(c.partner(e)));
  return Connector(std::move(p));
}

ScaledDiagramA transpose(const ScaledDiagramA& d) { return {d.delta, transpose(d.conn)}; }

std::vector<Connector> enumerate_monoid(const std::vector<ScaledDiagramA>& gens, std::size_t max_elements) {
  if (gens.empty()) throw std::invalid_argument("enumerate_monoid: no generators");
  const int n = gens.front().conn.strands();
  Connector id = Connector::identity(n);
  std::unordered_set<Connector, ConnectorHash> seen{id};
  std::vector<Connector> out{id};
  for (std::size_t k = 0; k < out.size(); ++k) {
    for (const auto& g : gens) {
      Connector y = stack(g.conn, out[k]).first;
      if (seen.insert(y).second) {
        if (out.size() >= max_elements) throw std::length_error("enumerate_monoid: element cap exceeded");
        out.push_back(std::move(y));
      }
    }
  }
  return out;
}

std::vector<ScaledDiagramA> brauer_generators(int n) {
  std::vector<ScaledDiagramA> g;
  for (int i = 1; i < n; ++i) {
    g.push_back(gen_r(i, n));
    g.push_back(gen_e(i, n));
  }
  return g;
}

std::vector<ScaledDiagramA> tl_generators(int n) {
  std::vector<ScaledDiagramA> g;
  for (int i = 1; i < n; ++i) g.push_back(gen_e(i, n));
  return g;
}

std::vector<Connector> planar_connectors(int n) {
  // Non-crossing matchings of 2n points on the boundary cycle, mapped back.
  std::vector<Connector> out;
  std::vector<int> match(2 * n, -1);
  auto endpoint = [n](int k) { return k < n ? k : n + (2 * n - 1 - k); };
  auto rec = [&](auto&& self, int k, std::vector<int>& open) -> void {
    if (k == 2 * n) {
      if (!open.empty()) return;
      std::vector<std::pair<int, int>> pr;
      for (int a = 0; a < 2 * n; ++a)
        if (a < match[a]) pr.emplace_back(endpoint(a), endpoint(match[a]));
      out.push_back(Connector::from_pairs(n, pr));
      return;
    }
    if (static_cast<int>(open.size()) < 2 * n - k) {
      open.push_back(k);
      self(self, k + 1, open);
      open.pop_back();
    }
    if (!open.empty()) {
      int a = open.back();
      open.pop_back();
      match[a] = k;
      match[k] = a;
      self(self, k + 1, open);
      match[a] = match[k] = -1;
      open.push_back(a);
    }
  };
  std::vector<int> open;
  rec(rec, 0, open);
  std::sort(out.begin(), out.end());
  return out;
}

std::unordered_map<Connector, int, ConnectorHash> word_heights(int n, std::size_t max_elements) {
  auto gens = brauer_generators(n);
  std::unordered_map<Connector, int, ConnectorHash> dist;
  std::deque<Connector> dq;
  Connector id = Connector::identity(n);
  dist[id] = 0;
  dq.push_back(id);
  while (!dq.empty()) {
    Connector x = dq.front();
    dq.pop_front();
    int dx = dist.at(x);
    for (std::size_t g = 0; g < gens.size(); ++g) {
      int w = g % 2 == 0 ? 1 : 0;  // brauer_generators alternates R, E
      Connector y = stack(gens[g].conn, x).first;
      auto it = dist.find(y);
      if (it != dist.end() && it->second <= dx + w) continue;
      if (it == dist.end() && dist.size() >= max_elements) throw std::length_error("word_heights: element cap exceeded");
      dist[y] = dx + w;
      if (w == 0) dq.push_front(y);
      else dq.push_back(y);
    }
  }
  return dist;
}

int word_height(const ScaledDiagramA& d) {
  int n = d.conn.strands();
  if (n > 4) throw std::length_error("word_height: supported for at most 4 strands");
  static std::unordered_map<int, std::unordered_map<Connector, int, ConnectorHash>> cache;
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, word_heights(n)).first;
  return it->second.at(d.conn);
}

namespace {

void require_type_a(const RootSystem& rs, int n) {
  if (rs.diagram().family() != Family::A || rs.rank() != n - 1)
    throw std::invalid_argument("diagram top needs the root system A_{N-1}");
}

}  // namespace

std::pair<int, int> arc_of(const RootSystem& rs, int root_id) {
  if (rs.diagram().family() != Family::A) throw std::invalid_argument("arc_of: type A only");
  Eigen::VectorXi v = rs.epsilon(rs.root(root_id));
  int i = -1, j = -1;
  for (int k = 0; k < v.size(); ++k) {
    if (v(k) == 1) i = k;
    if (v(k) == -1) j = k;
  }
  return {i, j};
}

int root_of_arc(const RootSystem& rs, int i, int j) {
  if (i > j) std::swap(i, j);
  Root r = Root::Zero(rs.rank());
  for (int k = i; k < j; ++k) r(k) = 1;
  return rs.find(r);
}

RootSet top_of(const RootSystem& rs, const Connector& c) {
  const int n = c.strands();
  require_type_a(rs, n);
  RootSet out;
  for (int e = 0; e < n; ++e)
    if (c.partner(e) < n && e < c.partner(e)) out.push_back(root_of_arc(rs, e, c.partner(e)));
  return make_set(out);
}

RootSet top_of(const RootSystem& rs, const ScaledDiagramA& d) { return top_of(rs, d.conn); }

ScaledDiagramA e_beta(const RootSystem& rs, int root_id) {
  const int n = rs.rank() + 1;
  auto [i, j] = arc_of(rs, root_id);
  std::vector<std::pair<int, int>> pr{{i, j}, {n + i, n + j}};
  for (int k = 0; k < n; ++k)
    if (k != i && k != j) pr.emplace_back(k, n + k);
  return {0, Connector::from_pairs(n, pr)};
}

ScaledDiagramA e_set(const RootSystem& rs, const RootSet& b) {
  if (!is_orthogonal(rs, b)) throw std::invalid_argument("e_set: roots are not mutually orthogonal");
  ScaledDiagramA out = identity_a(rs.rank() + 1);
  for (int x : b) out = compose(out, e_beta(rs, x));
  return out;
}

RootSet diagram_action(const RootSystem& rs, const ScaledDiagramA& a, const RootSet& b) {
  require_type_a(rs, a.conn.strands());
  return top_of(rs, compose(a, e_set(rs, b)));
}

bool top_crossing_free(const RootSystem& rs, const RootSet& b) {
  std::vector<std::pair<int, int>> arcs;
  for (int x : b) arcs.push_back(arc_of(rs, x));
  const int n = rs.rank() + 1;
  std::vector<bool> used(n, false);
  for (auto [i, j] : arcs) used[i] = used[j] = true;
  for (auto [i, j] : arcs) {
    for (int k = i + 1; k < j; ++k)
      if (!used[k]) return false;
    for (auto [p, q] : arcs)
      if (i < p && p < j && j < q) return false;
  }
  return true;
}

}  // namespace brauer

#include "brauer/admissible.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <stdexcept>

namespace brauer {

RootSet make_set(std::vector<int> ids) {
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  return ids;
}

RootSet parse_set(const RootSystem& rs, std::string_view text) {
  std::vector<int> ids;
  std::string cur;
  bool any = false;
  auto flush = [&] {
    if (cur.empty()) throw std::invalid_argument("empty entry in root set: " + std::string(text));
    int id = rs.find(rs.parse(cur));
    if (id < 0) throw std::invalid_argument("not a positive root: " + cur);
    ids.push_back(id);
    cur.clear();
  };
  for (char c : text) {
    if (c == ',') flush();
    else if (c != ' ' && c != '{' && c != '}') cur += c, any = true;
  }
  if (any) flush();
  return make_set(ids);
}

std::string format_set(const RootSystem& rs, const RootSet& b) {
  // By height, then a1 before a2.
  std::vector<int> ids = b;
  std::sort(ids.begin(), ids.end(), [&](int x, int y) {
    if (rs.height(x) != rs.height(y)) return rs.height(x) < rs.height(y);
    const Root &rx = rs.root(x), &ry = rs.root(y);
    return std::lexicographical_compare(ry.begin(), ry.end(), rx.begin(), rx.end());
  });
  std::string out = "{";
  for (std::size_t k = 0; k < ids.size(); ++k) {
    if (k) out += ", ";
    out += rs.format(rs.root(ids[k]));
  }
  return out + "}";
}

bool is_orthogonal(const RootSystem& rs, const RootSet& b) {
  for (std::size_t x = 0; x < b.size(); ++x)
    for (std::size_t y = x + 1; y < b.size(); ++y)
      if (rs.inner(b[x], b[y]) != 0) return false;
  return true;
}

namespace {

bool contains(const RootSet& b, int id) { return std::binary_search(b.begin(), b.end(), id); }

// Calls f(id) for every root the triple rule requires; stops when f returns false.
template <class F>
bool for_each_required(const RootSystem& rs, const RootSet& b, F f) {
  const int p = rs.num_positive();
  std::vector<int> m;
  for (int g = 0; g < p; ++g) {
    for (int s : {1, -1}) {
      m.clear();
      for (int x : b)
        if (rs.inner(g, x) == s) m.push_back(x);
      for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = i + 1; j < m.size(); ++j)
          for (std::size_t k = j + 1; k < m.size(); ++k) {
            Root v = rs.root(m[i]) + rs.root(m[j]) + rs.root(m[k]) - 2 * s * rs.root(g);
            int id = rs.find(v);
            if (id < 0) id = rs.find(-v);
            if (id < 0) throw std::logic_error("triple rule produced a non-root");
            if (!f(id)) return false;
          }
    }
  }
  return true;
}

void require_orthogonal(const RootSystem& rs, const RootSet& b, const char* what) {
  for (int x : b)
    if (x < 0 || x >= rs.num_positive()) throw std::invalid_argument(std::string(what) + ": bad root id");
  if (!is_orthogonal(rs, b)) throw std::invalid_argument(std::string(what) + ": roots are not mutually orthogonal");
}

std::vector<RootSet> orbit_sets(const RootSystem& rs, const RootSet& b) {
  std::set<RootSet> seen{b};
  std::deque<RootSet> queue{b};
  std::vector<RootSet> out;
  while (!queue.empty()) {
    RootSet x = queue.front();
    queue.pop_front();
    out.push_back(x);
    for (int i = 1; i <= rs.rank(); ++i) {
      RootSet y = reflect_set(rs, i, x);
      if (seen.insert(y).second) queue.push_back(std::move(y));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool orbit_rule_local(const RootSystem& rs, const RootSet& b) {
  const int n = rs.rank();
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      if (i == j || rs.diagram().adjacent(i, j)) continue;
      bool hit = false;
      for (int g : b) {
        Root t = rs.root(g) - rs.root(rs.simple(i)) + rs.root(rs.simple(j));
        int id = rs.find(t);
        if (id >= 0 && contains(b, id)) {
          hit = true;
          break;
        }
      }
      if (hit && reflect_set(rs, i, b) != reflect_set(rs, j, b)) return false;
    }
  return true;
}

// Verdict of the minimal-height rule on B alone.
Move local_move(const RootSystem& rs, const RootSet& b, int node) {
  const int a = rs.simple(node);
  int best = -1;
  bool down = false, up = false;
  for (int x : b) {
    int ip = rs.inner(x, a);
    if (ip == 0 || x == a) continue;
    int h = rs.height(x);
    if (best < 0 || h < best) {
      best = h;
      down = up = false;
    }
    if (h == best) (ip > 0 ? down : up) = true;
  }
  if (down == up) return Move::none;  // nothing moved, or a tie pointing both ways
  return down ? Move::lower : Move::raise;
}

Move opposite(Move m) { return m == Move::lower ? Move::raise : m == Move::raise ? Move::lower : Move::none; }

bool is_closed_coclique(const RootSystem& rs, const RootSet& b) {
  RootSet simples;
  for (int x : b)
    if (rs.height(x) == 1) simples.push_back(x);
  return closure(rs, simples) == b;
}

}  // namespace

std::vector<RootSet> weyl_orbit(const RootSystem& rs, const RootSet& b) {
  require_orthogonal(rs, b, "weyl_orbit");
  return orbit_sets(rs, b);
}

bool admissible_by_triples(const RootSystem& rs, const RootSet& b) {
  require_orthogonal(rs, b, "admissible_by_triples");
  return for_each_required(rs, b, [&](int id) { return contains(b, id); });
}

bool admissible_by_orbit(const RootSystem& rs, const RootSet& b) {
  require_orthogonal(rs, b, "admissible_by_orbit");
  for (const auto& x : orbit_sets(rs, b))
    if (!orbit_rule_local(rs, x)) return false;
  return true;
}

bool is_admissible(const RootSystem& rs, const RootSet& b) {
  bool t = admissible_by_triples(rs, b);
  bool o = admissible_by_orbit(rs, b);
  if (t != o) throw std::logic_error("admissibility rules disagree on " + format_set(rs, b));
  return t;
}

RootSet closure(const RootSystem& rs, const RootSet& x) {
  require_orthogonal(rs, x, "closure");
  RootSet b = x;
  for (;;) {
    RootSet add;
    for_each_required(rs, b, [&](int id) {
      if (!contains(b, id)) add.push_back(id);
      return true;
    });
    if (add.empty()) return b;
    for (int id : add) b.push_back(id);
    b = make_set(b);
    if (!is_orthogonal(rs, b)) throw std::logic_error("closure left the orthogonal sets; input configuration is invalid");
  }
}

RootSet reflect_set(const RootSystem& rs, int node, const RootSet& b) {
  RootSet out;
  out.reserve(b.size());
  for (int x : b) out.push_back(rs.reflect_simple(node, x));
  return make_set(out);
}

RootSet reflect_set_by_root(const RootSystem& rs, int root_id, const RootSet& b) {
  RootSet out;
  out.reserve(b.size());
  for (int x : b) out.push_back(rs.reflect_positive(root_id, x));
  return make_set(out);
}

RootSet weyl_action(const RootSystem& rs, const std::vector<int>& word, const RootSet& b) {
  RootSet out = b;
  for (auto it = word.rbegin(); it != word.rend(); ++it) out = reflect_set(rs, *it, out);
  return out;
}

RootSet ei_action_with(const RootSystem& rs, int node, const RootSet& b, int beta) {
  const int a = rs.simple(node);
  if (!contains(b, beta) || rs.inner(beta, a) == 0 || beta == a)
    throw std::invalid_argument("ei_action_with: beta must be in B and not orthogonal to alpha_i");
  return reflect_set_by_root(rs, beta, reflect_set(rs, node, b));
}

RootSet ei_action(const RootSystem& rs, int node, const RootSet& b) {
  const int a = rs.simple(node);
  if (contains(b, a)) return b;
  // Ids are ordered by height, so the first hit has minimal height.
  for (int x : b)
    if (rs.inner(x, a) != 0) return ei_action_with(rs, node, b, x);
  RootSet y = b;
  y.push_back(a);
  return closure(rs, make_set(y));
}

Move classify_move(const RootSystem& rs, const RootSet& b, int node) {
  RootSet c = reflect_set(rs, node, b);
  if (c == b) return Move::none;
  Move here = local_move(rs, b, node);
  Move there = opposite(local_move(rs, c, node));
  if (here != Move::none && there != Move::none && here != there)
    throw std::logic_error("inconsistent raise/lower verdict at " + format_set(rs, b));
  if (here != Move::none) return here;
  if (there != Move::none) return there;
  throw std::logic_error("ambiguous raise/lower verdict at " + format_set(rs, b) + " for node " + std::to_string(node));
}

int OrbitPoset::find(const RootSet& b) const {
  auto it = index.find(b);
  return it == index.end() ? -1 : it->second;
}

OrbitPoset orbit(const RootSystem& rs, const RootSet& b) {
  require_orthogonal(rs, b, "orbit");
  OrbitPoset p;
  p.sets = orbit_sets(rs, b);
  const int m = static_cast<int>(p.sets.size());
  for (int k = 0; k < m; ++k) p.index[p.sets[k]] = k;
  p.lower.assign(m, {});
  std::vector<bool> raisable(m, false);
  for (int k = 0; k < m; ++k)
    for (int i = 1; i <= rs.rank(); ++i) {
      Move mv = classify_move(rs, p.sets[k], i);
      if (mv == Move::lower) p.lower[k].push_back({i, p.index.at(reflect_set(rs, i, p.sets[k]))});
      if (mv == Move::raise) raisable[k] = true;
    }
  for (int k = 0; k < m; ++k)
    if (!raisable[k]) {
      if (p.maximal >= 0) throw std::logic_error("orbit has two maximal elements");
      p.maximal = k;
    }
  if (p.maximal < 0) throw std::logic_error("orbit has no maximal element");

  std::vector<int> dist(m, -1);
  std::deque<int> queue{p.maximal};
  dist[p.maximal] = 0;
  while (!queue.empty()) {
    int k = queue.front();
    queue.pop_front();
    for (auto e : p.lower[k])
      if (dist[e.target] < 0) {
        dist[e.target] = dist[k] + 1;
        queue.push_back(e.target);
      }
  }
  if (std::count(dist.begin(), dist.end(), -1)) throw std::logic_error("orbit not reachable from its maximum by lowering");

  p.d = -1;
  for (int k = 0; k < m; ++k) {
    if (!is_closed_coclique(rs, p.sets[k])) continue;
    if (p.d >= 0 && p.d != dist[k]) throw std::logic_error("closed cocliques of one orbit at different depths");
    p.d = dist[k];
  }
  if (p.d < 0) throw std::logic_error("orbit has no closed coclique element");
  p.height.resize(m);
  for (int k = 0; k < m; ++k) p.height[k] = p.d - dist[k];
  return p;
}

int set_height(const OrbitPoset& poset, const RootSet& b) {
  int k = poset.find(b);
  if (k < 0) throw std::invalid_argument("set_height: set is not in this orbit");
  return poset.height[k];
}

std::vector<RootSet> orthogonal_sets(const RootSystem& rs) {
  std::vector<RootSet> out;
  RootSet cur;
  const int p = rs.num_positive();
  auto rec = [&](auto&& self, int start) -> void {
    out.push_back(cur);
    for (int x = start; x < p; ++x) {
      bool ok = true;
      for (int y : cur)
        if (rs.inner(x, y) != 0) {
          ok = false;
          break;
        }
      if (!ok) continue;
      cur.push_back(x);
      self(self, x + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<RootSet> admissible_sets(const RootSystem& rs) {
  std::vector<RootSet> out;
  for (auto& b : orthogonal_sets(rs))
    if (admissible_by_triples(rs, b)) out.push_back(b);
  return out;
}

const OrbitPoset& HeightTable::poset_of(const RootSet& b) {
  auto it = which_.find(b);
  if (it != which_.end()) return posets_[it->second];
  posets_.push_back(orbit(rs_, b));
  int idx = static_cast<int>(posets_.size()) - 1;
  for (const auto& x : posets_.back().sets) which_[x] = idx;
  return posets_.back();
}

int HeightTable::height(const RootSet& b) { return set_height(poset_of(b), b); }

std::vector<std::vector<RootSet>> sigma_fixed_height0(int n) {
  if (n < 1) throw std::invalid_argument("sigma_fixed_height0: n >= 1");
  RootSystem rs(DynkinDiagram::A(2 * n - 1));
  HeightTable heights(rs);
  std::vector<std::vector<RootSet>> out(n + 1);
  for (auto& b : admissible_sets(rs)) {
    RootSet m;
    for (int x : b) m.push_back(rs.find(rs.root(x).reverse()));
    if (make_set(m) != b) continue;
    if (heights.height(b) == 0) out[b.size()].push_back(b);
  }
  return out;
}

}  // namespace brauer

#include "brauer/dtl.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace brauer {

GenWord parse_word(std::string_view text) {
  GenWord w;
  std::istringstream in{std::string(text)};
  std::string tok;
  while (in >> tok) {
    GenKind kind;
    std::size_t pos;
    if (tok.rfind("he", 0) == 0) {
      kind = GenKind::ehat;
      pos = 2;
    } else if (tok.rfind("\xc3\xaa", 0) == 0) {  // UTF-8 e with circumflex
      kind = GenKind::ehat;
      pos = 2;
    } else if (tok[0] == 'e') {
      kind = GenKind::e;
      pos = 1;
    } else if (tok[0] == 'r') {
      kind = GenKind::r;
      pos = 1;
    } else {
      throw std::invalid_argument("bad generator symbol: " + tok);
    }
    if (pos >= tok.size()) throw std::invalid_argument("generator without index: " + tok);
    int idx = 0;
    for (std::size_t k = pos; k < tok.size(); ++k) {
      if (!std::isdigit(static_cast<unsigned char>(tok[k]))) throw std::invalid_argument("bad generator symbol: " + tok);
      idx = idx * 10 + (tok[k] - '0');
      if (idx > 1000) throw std::invalid_argument("generator index too large: " + tok);
    }
    w.gens.push_back({kind, idx});
  }
  return w;
}

std::string format_word(const GenWord& w) {
  std::string out;
  if (w.delta) out = "d^" + std::to_string(w.delta);
  for (auto g : w.gens) {
    if (!out.empty()) out += " ";
    out += g.kind == GenKind::e ? "e" : g.kind == GenKind::ehat ? "he" : "r";
    out += std::to_string(g.index);
  }
  return out.empty() ? "1" : out;
}

GenWord reverse(const GenWord& w) {
  GenWord out = w;
  std::reverse(out.gens.begin(), out.gens.end());
  return out;
}

GenWord concat(const GenWord& a, const GenWord& b) {
  GenWord out = a;
  out.gens.insert(out.gens.end(), b.gens.begin(), b.gens.end());
  out.delta = add_exponent(a.delta, b.delta);
  return out;
}

GenWord hat_e(int i, int n) {
  if (i < 0 || i > n - 1) throw std::out_of_range("hat_e: index out of range");
  GenWord w{{{GenKind::e, 0}}, 0};
  for (int k = 1; k <= i; ++k) {
    GenWord x{{{GenKind::e, k}}, 0};
    w = concat(concat(x, w), x);
  }
  return w;
}

GenWord expand_hats(const GenWord& w, int n) {
  GenWord out{{}, w.delta};
  for (auto g : w.gens) {
    if (g.kind == GenKind::ehat) {
      auto h = hat_e(g.index, n);
      out.gens.insert(out.gens.end(), h.gens.begin(), h.gens.end());
    } else {
      out.gens.push_back(g);
    }
  }
  return out;
}

int DtlPresentation::heavy_node() const {
  if (type != 'B' && type != 'C') return -1;
  return kappa[0] == 2 ? 0 : 1;
}

DtlPresentation dtl_presentation(char type, int n) {
  DtlPresentation p{type, n, {}, 0};
  switch (type) {
    case 'A':
    case 'D':
    case 'E':
      p.first_node = 1;
      p.kappa.assign(n + 1, 1);
      break;
    case 'B':
      if (n < 2) throw std::invalid_argument("B_n needs n >= 2");
      p.kappa.assign(n, 1);
      p.kappa[0] = 2;
      break;
    case 'C':
      if (n < 1) throw std::invalid_argument("C_n needs n >= 1");
      p.kappa.assign(n, 2);
      p.kappa[0] = 1;
      break;
    case 'F':
      if (n != 4) throw std::invalid_argument("F_n exists for n = 4 only");
      p.first_node = 1;
      p.kappa = {0, 2, 2, 1, 1};
      break;
    default:
      throw std::invalid_argument(std::string("unknown type ") + type);
  }
  return p;
}

namespace {

void check_index(const Gen& g, int n) {
  if (g.index < 0 || g.index > n - 1) throw std::out_of_range("generator index out of range for n = " + std::to_string(n));
}

}  // namespace

ScaledDiagramA phi_c(const GenWord& w, int n) {
  const int strands = 2 * n;
  ScaledDiagramA out = scale(identity_a(strands), w.delta);
  for (auto g : expand_hats(w, n).gens) {
    check_index(g, n);
    auto one = g.kind == GenKind::r ? gen_r : gen_e;
    ScaledDiagramA x = g.index == 0 ? one(n, strands) : compose(one(n - g.index, strands), one(n + g.index, strands));
    out = compose(out, x);
  }
  return out;
}

ScaledDiagramD phi_b(const GenWord& w, int n) {
  const int strands = n + 1;
  ScaledDiagramD out = scale(identity_d(strands), HScalar::delta(w.delta));
  for (auto g : expand_hats(w, n).gens) {
    check_index(g, n);
    ScaledDiagramD x;
    if (g.kind == GenKind::e) x = g.index == 0 ? theta_cup(strands) : psi_gen('E', g.index + 2, n);
    else x = g.index == 0 ? compose(psi_gen('R', 1, n), psi_gen('R', 2, n)) : psi_gen('R', g.index + 2, n);
    out = compose(out, x);
  }
  return out;
}

bool verify_identity_b(const GenWord& lhs, const GenWord& rhs, int n) { return phi_b(lhs, n) == phi_b(rhs, n); }
bool verify_identity_c(const GenWord& lhs, const GenWord& rhs, int n) { return phi_c(lhs, n) == phi_c(rhs, n); }

std::vector<std::vector<int>> jones_normal_forms(int m) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int last_j, int last_k) -> void {
    out.push_back(cur);
    for (int j = last_j + 1; j <= m; ++j)
      for (int k = last_k + 1; k <= j; ++k) {
        std::size_t mark = cur.size();
        for (int x = j; x >= k; --x) cur.push_back(x);
        self(self, j, k);
        cur.resize(mark);
      }
  };
  rec(rec, 0, 0);
  return out;
}

std::pair<std::vector<GenWord>, std::vector<GenWord>> spanning_sets(int n) {
  if (n < 2) throw std::invalid_argument("spanning_sets: n >= 2");
  std::vector<GenWord> k1, k2;
  for (const auto& f : jones_normal_forms(n - 1)) {
    GenWord w;
    for (int x : f) w.gens.push_back({GenKind::e, x});
    k1.push_back(w);
  }
  for (const auto& f : jones_normal_forms(n)) {
    GenWord w;
    for (int x : f) w.gens.push_back({GenKind::ehat, x - 1});
    k2.push_back(w);
  }
  return {k1, k2};
}

long long binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  long long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

long long catalan(int n) { return binomial(2 * n, n) / (n + 1); }

RankReport rank_dtl_b(int n) {
  if (n < 2 || n > 7) throw std::out_of_range("rank_dtl_b: 2 <= n <= 7");
  RankReport r;
  r.expected = catalan(n) + catalan(n + 1) - 1;
  auto [k1, k2] = spanning_sets(n);
  std::set<std::pair<Tag, Connector>> images;
  for (const auto* ks : {&k1, &k2})
    for (const auto& w : *ks) {
      auto d = phi_b(w, n);
      images.insert({d.scalar.tag, d.conn});
    }
  r.spanning = static_cast<long long>(images.size());
  std::vector<ScaledDiagramD> gens;
  for (int i = 0; i < n; ++i) gens.push_back(phi_b(GenWord{{{GenKind::e, i}}, 0}, n));
  auto monoid = enumerate_monoid_d(gens);
  std::set<std::pair<Tag, Connector>> reached;
  for (const auto& d : monoid) reached.insert({d.scalar.tag, d.conn});
  r.bfs = static_cast<long long>(reached.size());
  if (reached != images) throw std::runtime_error("rank_dtl_b: spanning-set images and generated monoid differ");
  return r;
}

std::vector<Connector> stl_basis(int n) {
  if (n < 1 || n > 7) throw std::out_of_range("stl_basis: 1 <= n <= 7");
  std::vector<Connector> out;
  for (auto& c : planar_connectors(2 * n))
    if (mirror(c) == c) out.push_back(c);
  return out;
}

RankReport rank_dtl_c(int n) {
  if (n < 1 || n > 6) throw std::out_of_range("rank_dtl_c: 1 <= n <= 6");
  RankReport r;
  r.expected = binomial(2 * n, n);
  auto basis = stl_basis(n);
  r.spanning = static_cast<long long>(basis.size());
  std::vector<ScaledDiagramA> gens;
  for (int i = 0; i < n; ++i) gens.push_back(phi_c(GenWord{{{GenKind::e, i}}, 0}, n));
  auto monoid = enumerate_monoid(gens);
  r.bfs = static_cast<long long>(monoid.size());
  std::sort(monoid.begin(), monoid.end());
  if (monoid != basis) throw std::runtime_error("rank_dtl_c: generated monoid differs from the STL basis");
  return r;
}

bool SurjectivityReport::all_reached() const {
  return std::all_of(witnesses.begin(), witnesses.end(), [](const Witness& w) { return w.reached; });
}

std::vector<int> y_nodes(int i, int n) {
  if (i < 0 || i > n) throw std::out_of_range("y_nodes: 0 <= i <= n");
  std::vector<int> y;
  if (i % 2) {
    y.push_back(n);
    for (int s = 2; s <= i - 1; s += 2) {
      y.push_back(n - s);
      y.push_back(n + s);
    }
  } else {
    for (int s = 1; s <= i - 1; s += 2) {
      y.push_back(n - s);
      y.push_back(n + s);
    }
  }
  std::sort(y.begin(), y.end());
  return y;
}

SurjectivityReport surjectivity_bfs(int n) {
  if (n < 1 || n > 5) throw std::out_of_range("surjectivity_bfs: 1 <= n <= 5");
  RootSystem rs(DynkinDiagram::A(2 * n - 1));
  std::vector<ScaledDiagramA> gens;
  for (int k = 0; k < n; ++k) gens.push_back(phi_c(GenWord{{{GenKind::e, k}}, 0}, n));
  auto targets = sigma_fixed_height0(n);
  SurjectivityReport rep{n, {}, {}};
  for (int i = 0; i <= n; ++i) {
    RootSet start;
    for (int y : y_nodes(i, n)) start.push_back(rs.simple(y));
    start = make_set(start);
    rep.starts.push_back(start);
    std::map<RootSet, GenWord> word{{start, GenWord{}}};
    std::deque<RootSet> queue{start};
    while (!queue.empty()) {
      RootSet b = queue.front();
      queue.pop_front();
      for (int k = 0; k < n; ++k) {
        RootSet c = diagram_action(rs, gens[k], b);
        if (word.count(c)) continue;
        GenWord w{{{GenKind::e, k}}, 0};
        word[c] = concat(w, word.at(b));
        queue.push_back(c);
      }
    }
    for (const auto& t : targets[i]) {
      auto it = word.find(t);
      rep.witnesses.push_back({i, t, it != word.end(), it != word.end() ? it->second : GenWord{}});
    }
  }
  return rep;
}

}  // namespace brauer

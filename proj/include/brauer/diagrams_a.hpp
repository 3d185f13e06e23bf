#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <unordered_map>
#include <utility>
#include <vector>

#include "brauer/admissible.hpp"
#include "brauer/rootsys.hpp"
#include "brauer/scalars.hpp"

namespace brauer {

// Perfect matching on 2N endpoints.  Internally top i is endpoint i-1 and
// bottom i is endpoint N+i-1.
class Connector {
 public:
  Connector() = default;
  explicit Connector(std::vector<std::uint8_t> partner);
  static Connector identity(int n);
  // 0-based endpoints.
  static Connector from_pairs(int n, const std::vector<std::pair<int, int>>& pairs);

  int strands() const { return static_cast<int>(p_.size() / 2); }
  int partner(int e) const { return p_[e]; }
  bool is_top(int e) const { return e < strands(); }
  const std::vector<std::uint8_t>& raw() const { return p_; }

  // (p, q) with p < q, sorted.
  std::vector<std::pair<int, int>> pairs() const;
  int top_arcs() const;

  friend auto operator<=>(const Connector&, const Connector&) = default;

 private:
  std::vector<std::uint8_t> p_;
};

struct ConnectorHash {
  std::size_t operator()(const Connector& c) const noexcept;
};

struct ScaledDiagramA {
  int delta = 0;
  Connector conn;
  friend auto operator<=>(const ScaledDiagramA&, const ScaledDiagramA&) = default;
};

ScaledDiagramA identity_a(int n);
ScaledDiagramA gen_r(int i, int n);
ScaledDiagramA gen_e(int i, int n);
ScaledDiagramA scale(const ScaledDiagramA& d, int k);

// a on top of b.
ScaledDiagramA compose(const ScaledDiagramA& a, const ScaledDiagramA& b);
// Pairing of the stacked diagram plus the number of closed loops.
std::pair<Connector, int> stack(const Connector& a, const Connector& b);

bool is_planar(const Connector& c);
ScaledDiagramA mirror(const ScaledDiagramA& d);
Connector mirror(const Connector& c);
ScaledDiagramA transpose(const ScaledDiagramA& d);
Connector transpose(const Connector& c);

// BFS closure of the identity under left multiplication, modulo delta.
std::vector<Connector> enumerate_monoid(const std::vector<ScaledDiagramA>& gens,
                                        std::size_t max_elements = 1'000'000);
std::vector<ScaledDiagramA> brauer_generators(int n);
std::vector<ScaledDiagramA> tl_generators(int n);
std::vector<Connector> planar_connectors(int n);

// Minimal number of R generators over all words for each element of
// BrM(A_{n-1}); 0/1 BFS in the left Cayley graph.
std::unordered_map<Connector, int, ConnectorHash> word_heights(int n, std::size_t max_elements = 200'000);
int word_height(const ScaledDiagramA& d);  // n <= 4

// Diagram tops versus admissible sets of A_{N-1}.
std::pair<int, int> arc_of(const RootSystem& rs, int root_id);  // 0-based points i<j
int root_of_arc(const RootSystem& rs, int i, int j);
RootSet top_of(const RootSystem& rs, const Connector& c);
RootSet top_of(const RootSystem& rs, const ScaledDiagramA& d);
RootSet diagram_action(const RootSystem& rs, const ScaledDiagramA& a, const RootSet& b);
ScaledDiagramA e_beta(const RootSystem& rs, int root_id);
ScaledDiagramA e_set(const RootSystem& rs, const RootSet& b);
// No two arcs cross and no free point sits under an arc.
bool top_crossing_free(const RootSystem& rs, const RootSet& b);

}  // namespace brauer

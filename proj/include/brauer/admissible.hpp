#pragma once

#include <deque>
#include <map>
#include <vector>

#include "brauer/rootsys.hpp"

namespace brauer {

// Sorted ids of positive roots.
using RootSet = std::vector<int>;

RootSet make_set(std::vector<int> ids);
RootSet parse_set(const RootSystem& rs, std::string_view text);  // "a1,a2+a3"
std::string format_set(const RootSystem& rs, const RootSet& b);

bool is_orthogonal(const RootSystem& rs, const RootSet& b);

// Triple rule: for distinct g1, g2, g3 in B and gamma positive with
// (gamma, g_i) = s for all i (s = +-1), the root +-(g1+g2+g3-2s*gamma)
// lies in B.
bool admissible_by_triples(const RootSystem& rs, const RootSet& b);
// Orbit rule: every B' in W.B satisfies R_i B' = R_j B' whenever i, j are
// distinct non-adjacent nodes and gamma, gamma-alpha_i+alpha_j both lie in B'.
bool admissible_by_orbit(const RootSystem& rs, const RootSet& b);
// Evaluates both rules; throws std::logic_error if they disagree.
bool is_admissible(const RootSystem& rs, const RootSet& b);

RootSet closure(const RootSystem& rs, const RootSet& x);

RootSet reflect_set(const RootSystem& rs, int node, const RootSet& b);
RootSet reflect_set_by_root(const RootSystem& rs, int root_id, const RootSet& b);
// Applies word[last] first.
RootSet weyl_action(const RootSystem& rs, const std::vector<int>& word, const RootSet& b);

RootSet ei_action(const RootSystem& rs, int node, const RootSet& b);
// Case 3 with an explicit beta; throws unless beta is in B and not orthogonal to alpha_i.
RootSet ei_action_with(const RootSystem& rs, int node, const RootSet& b, int beta);

enum class Move { none, lower, raise };
Move classify_move(const RootSystem& rs, const RootSet& b, int node);

struct OrbitEdge {
  int node;
  int target;
};

struct OrbitPoset {
  std::vector<RootSet> sets;  // sorted
  std::map<RootSet, int> index;
  std::vector<std::vector<OrbitEdge>> lower;  // lowering edges out of each set
  int maximal = -1;
  int d = 0;
  std::vector<int> height;
  int find(const RootSet& b) const;
};

// Throws if the orbit has no unique maximum, an ambiguous move, or no
// minimal element of closed-coclique form.
OrbitPoset orbit(const RootSystem& rs, const RootSet& b);
// W-orbit of b, sorted; no poset structure, so any orthogonal set works.
std::vector<RootSet> weyl_orbit(const RootSystem& rs, const RootSet& b);
int set_height(const OrbitPoset& poset, const RootSet& b);

std::vector<RootSet> orthogonal_sets(const RootSystem& rs);
std::vector<RootSet> admissible_sets(const RootSystem& rs);

// sigma-fixed height-0 admissible sets of A_{2n-1}, indexed by size.
std::vector<std::vector<RootSet>> sigma_fixed_height0(int n);

// Partition of sets into W-orbits; height of each set within its orbit.
class HeightTable {
 public:
  explicit HeightTable(const RootSystem& rs) : rs_(rs) {}
  int height(const RootSet& b);
  const OrbitPoset& poset_of(const RootSet& b);

 private:
  const RootSystem& rs_;
  std::deque<OrbitPoset> posets_;
  std::map<RootSet, int> which_;
};

}  // namespace brauer

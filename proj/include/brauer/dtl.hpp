#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "brauer/admissible.hpp"
#include "brauer/diagrams_a.hpp"
#include "brauer/diagrams_d.hpp"

namespace brauer {

enum class GenKind { e, ehat, r };

struct Gen {
  GenKind kind;
  int index;
  friend auto operator<=>(const Gen&, const Gen&) = default;
};

struct GenWord {
  std::vector<Gen> gens;
  int delta = 0;
  friend auto operator<=>(const GenWord&, const GenWord&) = default;
};

// Whitespace separated symbols: e0, e1, he1 (or the accented form), r0.
GenWord parse_word(std::string_view text);
std::string format_word(const GenWord& w);
GenWord reverse(const GenWord& w);
GenWord concat(const GenWord& a, const GenWord& b);
GenWord hat_e(int i, int n);
GenWord expand_hats(const GenWord& w, int n);

// Coxeter-style presentation data.  Nodes 0..n-1 on a path; for B_n and
// C_n the edge {0,1} is the double edge.
struct DtlPresentation {
  char type;
  int n;
  std::vector<int> kappa;  // indexed by node
  int first_node = 0;      // 0 for B, C; 1 for the simply-laced and F types
  bool adjacent(int i, int j) const { return i != j && (i - j == 1 || j - i == 1); }
  // Node j of relation e_j e_i e_j = delta e_j on the double edge, or -1.
  int heavy_node() const;
};
DtlPresentation dtl_presentation(char type, int n);

// e0 -> E_n, e_i -> E_{n-i} E_{n+i} in Br(A_{2n-1}); r likewise with R.
ScaledDiagramA phi_c(const GenWord& w, int n);
// e0 -> theta delta^{-1} cup{1,2}, e_i -> cup{i+1,i+2} on n+1 strands;
// r_i -> psi(R_{i+2}), r0 -> psi(R_1) psi(R_2).
ScaledDiagramD phi_b(const GenWord& w, int n);

bool verify_identity_b(const GenWord& lhs, const GenWord& rhs, int n);
bool verify_identity_c(const GenWord& lhs, const GenWord& rhs, int n);

// Reduced words for TL on a path of m nodes, as 1-based node positions:
// products of descending runs (j_1..k_1)(j_2..k_2)... with j and k both
// strictly increasing.
std::vector<std::vector<int>> jones_normal_forms(int m);
std::pair<std::vector<GenWord>, std::vector<GenWord>> spanning_sets(int n);

long long catalan(int n);
long long binomial(int n, int k);

struct RankReport {
  long long expected = 0;
  long long spanning = 0;  // image count of the spanning set (B) or STL basis size (C)
  long long bfs = 0;
};
// Both throw std::runtime_error when the two counts differ.
RankReport rank_dtl_b(int n);
RankReport rank_dtl_c(int n);

std::vector<Connector> stl_basis(int n);

struct Witness {
  int size;
  RootSet target;
  bool reached;
  GenWord word;  // phi_c(word) B_{Y_size} = target
};
struct SurjectivityReport {
  int n;
  std::vector<RootSet> starts;  // B_{Y_i}, i = 0..n
  std::vector<Witness> witnesses;
  bool all_reached() const;
};
std::vector<int> y_nodes(int i, int n);
SurjectivityReport surjectivity_bfs(int n);

}  // namespace brauer

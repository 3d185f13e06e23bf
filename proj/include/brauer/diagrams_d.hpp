#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "brauer/diagrams_a.hpp"
#include "brauer/scalars.hpp"

namespace brauer {

// scalar * (connector with marks).  Bit e of `decorated` marks the pair
// whose smaller endpoint is e.
struct ScaledDiagramD {
  HScalar scalar;
  Connector conn;
  std::uint64_t decorated = 0;

  std::vector<std::pair<int, int>> decorated_pairs() const;
  friend auto operator<=>(const ScaledDiagramD&, const ScaledDiagramD&) = default;
};

struct DiagramDKey {
  Tag tag;
  Connector conn;
  std::uint64_t decorated;
  friend auto operator<=>(const DiagramDKey&, const DiagramDKey&) = default;
};
DiagramDKey key_of(const ScaledDiagramD& d);
struct DiagramDKeyHash {
  std::size_t operator()(const DiagramDKey& k) const noexcept;
};

ScaledDiagramD identity_d(int strands);
ScaledDiagramD lift(const ScaledDiagramA& a);
ScaledDiagramD scale(const ScaledDiagramD& d, HScalar h);
ScaledDiagramD with_decorations(ScaledDiagramD d, const std::vector<std::pair<int, int>>& pairs);

// Throws std::logic_error if d breaks a basis invariant (odd mark count,
// marks under theta, xi or theta without a horizontal strand).
void validate(const ScaledDiagramD& d);

// Undecorated composition: concatenate, each loop is delta.
ScaledDiagramD compose_l1(const ScaledDiagramD& a, const ScaledDiagramD& b);

// Generator images for the type D_{n+1} diagram on n+1 strands.  Node i >= 2
// is the plain A-type generator on strands {i-1, i}; node 1 is the twin of
// node 2 with both strands marked.
ScaledDiagramD psi_gen(char kind, int i, int n);

// theta delta^{-1} times the cup-cap on strands {1,2}.
ScaledDiagramD theta_cup(int strands);

bool l2_available();

// Decorated composition.  Marks add mod 2 along traced strands; plain loops
// give delta; two marked loops give theta; a single marked loop takes the
// mark off one marked pair and gives theta delta^{-1}.  The xi delta^{-1}
// factor comes from the orientation of the arcs met in each middle
// component (see diagrams_d_l2.cpp).
ScaledDiagramD compose_l2(const ScaledDiagramD& a, const ScaledDiagramD& b);

// compose_l1 when both operands are unmarked, compose_l2 otherwise.
ScaledDiagramD compose(const ScaledDiagramD& a, const ScaledDiagramD& b);

// Closure of the identity under left multiplication, modulo delta.
std::vector<ScaledDiagramD> enumerate_monoid_d(const std::vector<ScaledDiagramD>& gens,
                                               std::size_t max_elements = 1'000'000);
std::vector<ScaledDiagramD> psi_generators(int n);

struct Census {
  long long t = 0;             // all connectors with an even set of marks
  long long xi = 0;            // those with a horizontal strand
  long long theta = 0;         // unmarked connectors with a horizontal strand
  long long t_plain = 0;       // unmarked connectors
  long long plain_horizontal = 0;
  long long total() const { return t + xi + theta; }
};
Census basis_census(int n);

}  // namespace brauer

#pragma once

#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <Eigen/Core>

namespace brauer {

// Coefficients over the simple roots alpha_1..alpha_n.
using Root = Eigen::VectorXi;

enum class Family { A, D, E };

// Simply-laced Dynkin diagram, nodes numbered from 1.
//  A_n: path 1-2-...-n.
//  D_n: fork nodes 1 and 2 both joined to 3, then the path 3-...-n.
//  E_n: 1-3-4-5-...-n with 2 attached to 4.
class DynkinDiagram {
 public:
  static DynkinDiagram A(int n);
  static DynkinDiagram D(int n);
  static DynkinDiagram E(int n);
  static DynkinDiagram parse(std::string_view label);  // "A4", "D5", "E6"

  Family family() const { return family_; }
  int rank() const { return n_; }
  std::string label() const;
  bool adjacent(int i, int j) const;
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }
  Eigen::MatrixXi cartan() const;

 private:
  DynkinDiagram(Family f, int n, std::vector<std::pair<int, int>> e)
      : family_(f), n_(n), edges_(std::move(e)) {}
  Family family_;
  int n_;
  std::vector<std::pair<int, int>> edges_;
};

// Positive roots are numbered 0..P-1 in order of (height, coefficient tuple).
class RootSystem {
 public:
  explicit RootSystem(DynkinDiagram d);

  const DynkinDiagram& diagram() const { return dia_; }
  int rank() const { return dia_.rank(); }
  int num_positive() const { return static_cast<int>(pos_.size()); }
  const std::vector<Root>& positive_roots() const { return pos_; }
  const Root& root(int id) const { return pos_.at(id); }

  int find(const Root& r) const;  // id, or -1 if r is not a positive root
  bool is_root(const Root& r) const;
  int simple(int i) const;  // id of alpha_i

  int inner(int a, int b) const { return gram_(a, b); }
  int inner(const Root& a, const Root& b) const;
  int height(int id) const;

  // id of the positive root among +-s_i(beta).
  int reflect_simple(int i, int id) const { return refl_[i - 1][id]; }
  // id of the positive root among +-s_alpha(beta), both given by id.
  int reflect_positive(int alpha, int beta) const;
  Root reflect(const Root& beta, const Root& alpha) const;

  // epsilon realization; A_n lives in R^{n+1}, D_n in R^n.
  Eigen::VectorXi epsilon(const Root& r) const;
  Root from_epsilon(const Eigen::VectorXi& v) const;
  Root star(const Root& r) const;

  std::string format(const Root& r) const;
  std::string format_epsilon(const Root& r) const;
  Root parse(std::string_view s) const;

  // Order of the group generated by the simple reflections, found by
  // closing the permutation action on all roots.
  long long weyl_order() const;

 private:
  DynkinDiagram dia_;
  Eigen::MatrixXi cartan_;
  std::vector<Root> pos_;
  std::map<std::vector<int>, int> index_;
  Eigen::MatrixXi gram_;
  std::vector<int> simple_;
  std::vector<std::vector<int>> refl_;
  Eigen::MatrixXi eps_;  // column i-1 holds the epsilon vector of alpha_i
};

// Sum of coefficients; rejects roots with a negative coefficient.
int root_height(const Root& r);

}  // namespace brauer

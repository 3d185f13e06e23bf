#include "brauer/rootsys.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <set>
#include <stdexcept>

#include <Eigen/LU>

namespace brauer {

namespace {

std::vector<int> key(const Root& r) { return {r.data(), r.data() + r.size()}; }

}  // namespace

DynkinDiagram DynkinDiagram::A(int n) {
  if (n < 1) throw std::invalid_argument("A_n needs n >= 1");
  std::vector<std::pair<int, int>> e;
  for (int i = 1; i < n; ++i) e.emplace_back(i, i + 1);
  return {Family::A, n, e};
}

DynkinDiagram DynkinDiagram::D(int n) {
  if (n < 3) throw std::invalid_argument("D_n needs n >= 3");
  std::vector<std::pair<int, int>> e{{1, 3}, {2, 3}};
  for (int i = 3; i < n; ++i) e.emplace_back(i, i + 1);
  return {Family::D, n, e};
}

DynkinDiagram DynkinDiagram::E(int n) {
  if (n < 6 || n > 8) throw std::invalid_argument("E_n needs 6 <= n <= 8");
  std::vector<std::pair<int, int>> e{{1, 3}, {2, 4}};
  for (int i = 3; i < n; ++i) e.emplace_back(i, i + 1);
  return {Family::E, n, e};
}

DynkinDiagram DynkinDiagram::parse(std::string_view label) {
  if (label.size() < 2) throw std::invalid_argument("bad diagram label: " + std::string(label));
  int n = 0;
  for (char c : label.substr(1)) {
    if (!std::isdigit(static_cast<unsigned char>(c)))
      throw std::invalid_argument("bad diagram label: " + std::string(label));
    n = n * 10 + (c - '0');
    if (n > 64) throw std::invalid_argument("diagram too large: " + std::string(label));
  }
  switch (std::toupper(static_cast<unsigned char>(label[0]))) {
    case 'A': return A(n);
    case 'D': return D(n);
    case 'E': return E(n);
  }
  throw std::invalid_argument("not a simply-laced type: " + std::string(label));
}

std::string DynkinDiagram::label() const {
  const char* f = family_ == Family::A ? "A" : family_ == Family::D ? "D" : "E";
  return f + std::to_string(n_);
}

bool DynkinDiagram::adjacent(int i, int j) const {
  for (auto [a, b] : edges_)
    if ((a == i && b == j) || (a == j && b == i)) return true;
  return false;
}

Eigen::MatrixXi DynkinDiagram::cartan() const {
  Eigen::MatrixXi c = 2 * Eigen::MatrixXi::Identity(n_, n_);
  for (auto [a, b] : edges_) c(a - 1, b - 1) = c(b - 1, a - 1) = -1;
  return c;
}

RootSystem::RootSystem(DynkinDiagram d) : dia_(std::move(d)), cartan_(dia_.cartan()) {
  const int n = dia_.rank();
  // beta + alpha_i is a root exactly when (beta, alpha_i) = -1.
  std::set<std::vector<int>> seen;
  std::deque<Root> queue;
  for (int i = 0; i < n; ++i) {
    Root r = Root::Unit(n, i);
    seen.insert(key(r));
    queue.push_back(r);
  }
  std::vector<Root> found;
  while (!queue.empty()) {
    Root b = queue.front();
    queue.pop_front();
    found.push_back(b);
    Eigen::VectorXi ip = cartan_ * b;
    for (int i = 0; i < n; ++i) {
      if (ip(i) != -1) continue;
      Root c = b + Root::Unit(n, i);
      if (seen.insert(key(c)).second) queue.push_back(c);
    }
  }
  std::sort(found.begin(), found.end(), [](const Root& a, const Root& b) {
    int ha = a.sum(), hb = b.sum();
    if (ha != hb) return ha < hb;
    return key(a) < key(b);
  });
  pos_ = std::move(found);
  const int p = num_positive();
  for (int id = 0; id < p; ++id) index_[key(pos_[id])] = id;
  for (int i = 0; i < n; ++i) simple_.push_back(find(Root::Unit(n, i)));

  gram_.resize(p, p);
  for (int a = 0; a < p; ++a)
    for (int b = 0; b < p; ++b) gram_(a, b) = pos_[a].dot(cartan_ * pos_[b]);

  refl_.assign(n, std::vector<int>(p));
  for (int i = 1; i <= n; ++i)
    for (int id = 0; id < p; ++id) refl_[i - 1][id] = reflect_positive(simple(i), id);

  if (dia_.family() == Family::A) {
    eps_ = Eigen::MatrixXi::Zero(n + 1, n);
    for (int i = 0; i < n; ++i) {
      eps_(i, i) = 1;
      eps_(i + 1, i) = -1;
    }
  } else if (dia_.family() == Family::D) {
    eps_ = Eigen::MatrixXi::Zero(n, n);
    eps_(1, 0) = 1;
    eps_(0, 0) = -1;
    eps_(1, 1) = 1;
    eps_(0, 1) = 1;
    for (int i = 2; i < n; ++i) {
      eps_(i, i) = 1;
      eps_(i - 1, i) = -1;
    }
  }
}

int RootSystem::find(const Root& r) const {
  if (r.size() != rank()) return -1;
  auto it = index_.find(key(r));
  return it == index_.end() ? -1 : it->second;
}

bool RootSystem::is_root(const Root& r) const { return find(r) >= 0 || find(-r) >= 0; }

int RootSystem::simple(int i) const {
  if (i < 1 || i > rank()) throw std::out_of_range("simple root index out of range");
  return simple_[i - 1];
}

int RootSystem::inner(const Root& a, const Root& b) const { return a.dot(cartan_ * b); }

int RootSystem::height(int id) const { return pos_.at(id).sum(); }

int RootSystem::reflect_positive(int alpha, int beta) const {
  Root r = pos_[beta] - gram_(beta, alpha) * pos_[alpha];
  int id = find(r);
  return id >= 0 ? id : find(-r);
}

Root RootSystem::reflect(const Root& beta, const Root& alpha) const {
  if (!is_root(alpha)) throw std::invalid_argument("reflect: alpha is not a root");
  return beta - inner(beta, alpha) * alpha;
}

Eigen::VectorXi RootSystem::epsilon(const Root& r) const {
  if (eps_.size() == 0) throw std::logic_error("no epsilon realization for " + dia_.label());
  return eps_ * r;
}

Root RootSystem::from_epsilon(const Eigen::VectorXi& v) const {
  if (eps_.size() == 0) throw std::logic_error("no epsilon realization for " + dia_.label());
  if (v.size() != eps_.rows()) throw std::invalid_argument("epsilon vector has wrong length");
  // The A_n realization is not square; solve the normal equations, then
  // insist the rounded answer reproduces v exactly.
  Eigen::MatrixXd m = eps_.cast<double>();
  Eigen::VectorXd x = (m.transpose() * m).lu().solve(m.transpose() * v.cast<double>());
  Root r = x.array().round().cast<int>();
  if (eps_ * r != v) throw std::invalid_argument("vector is not in the root lattice span");
  return r;
}

Root RootSystem::star(const Root& r) const {
  if (dia_.family() != Family::D) throw std::logic_error("star is defined for type D only");
  if (find(r) < 0) throw std::invalid_argument("star: not a positive root");
  Eigen::VectorXi v = epsilon(r);
  for (int i = 0; i < v.size(); ++i)
    if (v(i) != 0) {
      v(i) = -v(i);
      break;
    }
  return from_epsilon(v);
}

std::string RootSystem::format(const Root& r) const {
  std::string out;
  for (int i = 0; i < r.size(); ++i) {
    int c = r(i);
    if (c == 0) continue;
    if (c < 0) out += "-";
    else if (!out.empty()) out += "+";
    if (std::abs(c) != 1) out += std::to_string(std::abs(c));
    out += "a" + std::to_string(i + 1);
  }
  return out.empty() ? "0" : out;
}

std::string RootSystem::format_epsilon(const Root& r) const {
  Eigen::VectorXi v = epsilon(r);
  std::string out;
  for (int i = static_cast<int>(v.size()) - 1; i >= 0; --i) {
    int c = v(i);
    if (c == 0) continue;
    if (c < 0) out += "-";
    else if (!out.empty()) out += "+";
    if (std::abs(c) != 1) out += std::to_string(std::abs(c));
    out += "e" + std::to_string(i + 1);
  }
  return out.empty() ? "0" : out;
}

// Accepts "a1+a2+2a3+a4" and "-a2" style expressions.
Root RootSystem::parse(std::string_view s) const {
  Root r = Root::Zero(rank());
  std::size_t pos = 0;
  auto fail = [&] { throw std::invalid_argument("bad root literal: " + std::string(s)); };
  if (s.empty()) fail();
  while (pos < s.size()) {
    int sign = 1;
    if (s[pos] == '+' || s[pos] == '-') {
      sign = s[pos] == '-' ? -1 : 1;
      ++pos;
    } else if (pos != 0) {
      fail();
    }
    int coef = 0;
    bool has = false;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
      coef = coef * 10 + (s[pos++] - '0');
      has = true;
      if (coef > 1000) fail();
    }
    if (!has) coef = 1;
    if (pos >= s.size() || (s[pos] != 'a' && s[pos] != 'A')) fail();
    ++pos;
    int idx = 0;
    has = false;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
      idx = idx * 10 + (s[pos++] - '0');
      has = true;
      if (idx > rank()) fail();
    }
    if (!has || idx < 1) fail();
    r(idx - 1) += sign * coef;
  }
  return r;
}

long long RootSystem::weyl_order() const {
  // Roots +-beta_id are points id and id+P; each simple reflection is a
  // permutation of these 2P points, and the group is faithful on them.
  const int p = num_positive(), n = rank();
  std::vector<std::vector<int>> gens(n, std::vector<int>(2 * p));
  for (int i = 0; i < n; ++i)
    for (int id = 0; id < p; ++id) {
      Root r = pos_[id] - gram_(id, simple(i + 1)) * pos_[simple(i + 1)];
      int f = find(r);
      if (f >= 0) {
        gens[i][id] = f;
        gens[i][id + p] = f + p;
      } else {
        f = find(-r);
        gens[i][id] = f + p;
        gens[i][id + p] = f;
      }
    }
  std::vector<int> id(2 * p);
  for (int k = 0; k < 2 * p; ++k) id[k] = k;
  std::set<std::vector<int>> seen{id};
  std::deque<std::vector<int>> queue{id};
  while (!queue.empty()) {
    auto w = queue.front();
    queue.pop_front();
    for (const auto& g : gens) {
      std::vector<int> x(2 * p);
      for (int k = 0; k < 2 * p; ++k) x[k] = g[w[k]];
      if (seen.insert(x).second) queue.push_back(std::move(x));
    }
  }
  return static_cast<long long>(seen.size());
}

int root_height(const Root& r) {
  if ((r.array() < 0).any()) throw std::invalid_argument("root_height: negative root");
  return r.sum();
}

}  // namespace brauer

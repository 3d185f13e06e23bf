#include "brauer/suites.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace brauer {

bool all_pass(const std::vector<Check>& checks) {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass && !c.skipped; });
}

std::size_t count_failed(const std::vector<Check>& checks) {
  return std::count_if(checks.begin(), checks.end(), [](const Check& c) { return !c.pass && !c.skipped; });
}

std::size_t count_skipped(const std::vector<Check>& checks) {
  return std::count_if(checks.begin(), checks.end(), [](const Check& c) { return c.skipped; });
}

namespace {

// 'R', 'E' for Brauer generators; 'r', 'e', 'h' for r_i, e_i, hat e_i.
struct Sym {
  char kind;
  int node;
};

struct Side {
  int delta = 0;
  std::vector<Sym> syms;
};

Side S(std::initializer_list<Sym> s, int delta = 0) { return {delta, s}; }

std::string show_side(const Side& s) {
  std::string out;
  if (s.delta == 1) out = "d";
  else if (s.delta) out = "d^" + std::to_string(s.delta);
  for (auto y : s.syms) {
    if (!out.empty()) out += " ";
    out += y.kind == 'h' ? std::string("he") : std::string(1, y.kind);
    out += std::to_string(y.node);
  }
  return out.empty() ? "1" : out;
}

std::string show_conn(const Connector& c) {
  std::string out = "{";
  bool first = true;
  for (auto [p, q] : c.pairs()) {
    if (!first) out += ",";
    first = false;
    out += std::to_string(p + 1) + "-" + std::to_string(q + 1);
  }
  return out + "}";
}

std::string show(const ScaledDiagramA& d) { return "d^" + std::to_string(d.delta) + " " + show_conn(d.conn); }

std::string show(const ScaledDiagramD& d) {
  std::string out = to_string(d.scalar) + " " + show_conn(d.conn);
  if (d.decorated) {
    out += " marks";
    for (auto [p, q] : d.decorated_pairs()) out += " " + std::to_string(p + 1) + "-" + std::to_string(q + 1);
  }
  return out;
}

template <class Elem>
struct Algebra {
  std::function<Elem(Sym)> gen;
  std::function<Elem(const Elem&, const Elem&)> mul;
  std::function<Elem(const Elem&, int)> times_delta;
  Elem one;

  Elem eval(const Side& s) const {
    Elem x = times_delta(one, s.delta);
    for (auto y : s.syms) x = mul(x, gen(y));
    return x;
  }

  Check rel(const std::string& label, const Side& l, const Side& r) const {
    Check c;
    c.name = label + ": " + show_side(l) + " = " + show_side(r);
    try {
      Elem a = eval(l), b = eval(r);
      c.expected = show(b);
      c.actual = show(a);
      c.pass = a == b;
    } catch (const std::exception& e) {
      c.expected = show_side(r);
      c.actual = std::string("error: ") + e.what();
      c.pass = false;
    }
    return c;
  }
};

std::string idx(std::initializer_list<std::pair<const char*, int>> v) {
  std::string out;
  for (auto [k, x] : v) out += std::string(out.empty() ? "" : " ") + k + "=" + std::to_string(x);
  return out;
}

template <class Elem>
std::vector<Check> brauer_relations(const Algebra<Elem>& alg, int nodes, const std::function<bool(int, int)>& adj) {
  std::vector<Check> out;
  {
    Elem x = alg.times_delta(alg.times_delta(alg.one, 1), -1);
    out.push_back({"d d^-1 = 1", show(alg.one), show(x), x == alg.one});
  }
  for (int i = 1; i <= nodes; ++i) {
    auto n = idx({{"i", i}});
    out.push_back(alg.rel("Ri^2 = 1 " + n, S({{'R', i}, {'R', i}}), S({})));
    out.push_back(alg.rel("RiEi = Ei " + n, S({{'R', i}, {'E', i}}), S({{'E', i}})));
    out.push_back(alg.rel("EiRi = Ei " + n, S({{'E', i}, {'R', i}}), S({{'E', i}})));
    out.push_back(alg.rel("Ei^2 = d Ei " + n, S({{'E', i}, {'E', i}}), S({{'E', i}}, 1)));
  }
  for (int i = 1; i <= nodes; ++i)
    for (int j = 1; j <= nodes; ++j) {
      if (i == j) continue;
      auto n = idx({{"i", i}, {"j", j}});
      if (!adj(i, j)) {
        if (i < j) {
          out.push_back(alg.rel("RiRj = RjRi " + n, S({{'R', i}, {'R', j}}), S({{'R', j}, {'R', i}})));
          out.push_back(alg.rel("EiEj = EjEi " + n, S({{'E', i}, {'E', j}}), S({{'E', j}, {'E', i}})));
        }
        out.push_back(alg.rel("EiRj = RjEi " + n, S({{'E', i}, {'R', j}}), S({{'R', j}, {'E', i}})));
      } else {
        if (i < j) {
          out.push_back(alg.rel("RiRjRi = RjRiRj " + n, S({{'R', i}, {'R', j}, {'R', i}}), S({{'R', j}, {'R', i}, {'R', j}})));
          out.push_back(alg.rel("RiEjRi = RjEiRj " + n, S({{'R', i}, {'E', j}, {'R', i}}), S({{'R', j}, {'E', i}, {'R', j}})));
        }
        out.push_back(alg.rel("RjRiEj = EiEj " + n, S({{'R', j}, {'R', i}, {'E', j}}), S({{'E', i}, {'E', j}})));
      }
    }
  return out;
}

Algebra<ScaledDiagramA> type_a_algebra(int m) {
  const int strands = m + 1;
  return {[strands](Sym s) { return s.kind == 'R' ? gen_r(s.node, strands) : gen_e(s.node, strands); },
          [](const ScaledDiagramA& a, const ScaledDiagramA& b) { return compose(a, b); },
          [](const ScaledDiagramA& a, int k) { return scale(a, k); }, identity_a(strands)};
}

Algebra<ScaledDiagramA> phi_c_algebra(int n) {
  return {[n](Sym s) {
            GenKind k = s.kind == 'r' ? GenKind::r : s.kind == 'h' ? GenKind::ehat : GenKind::e;
            return phi_c(GenWord{{{k, s.node}}, 0}, n);
          },
          [](const ScaledDiagramA& a, const ScaledDiagramA& b) { return compose(a, b); },
          [](const ScaledDiagramA& a, int k) { return scale(a, k); }, identity_a(2 * n)};
}

Algebra<ScaledDiagramD> phi_b_algebra(int n) {
  return {[n](Sym s) {
            GenKind k = s.kind == 'r' ? GenKind::r : s.kind == 'h' ? GenKind::ehat : GenKind::e;
            return phi_b(GenWord{{{k, s.node}}, 0}, n);
          },
          [](const ScaledDiagramD& a, const ScaledDiagramD& b) { return compose(a, b); },
          [](const ScaledDiagramD& a, int k) { return scale(a, HScalar::delta(k)); }, identity_d(n + 1)};
}

Check skipped(const std::string& name, const std::string& why) {
  Check c;
  c.name = name;
  c.actual = why;
  c.skipped = true;
  return c;
}

}  // namespace

std::vector<Check> suite_brauer_a(int m) {
  if (m < 1 || m > 12) throw std::out_of_range("suite_brauer_a: 1 <= m <= 12");
  auto dia = DynkinDiagram::A(m);
  return brauer_relations(type_a_algebra(m), m, [&](int i, int j) { return dia.adjacent(i, j); });
}

std::vector<Check> suite_brauer_psi(int n) {
  if (n < 2 || n > 8) throw std::out_of_range("suite_brauer_psi: 2 <= n <= 8");
  if (!l2_available()) return {skipped("Brauer relations on psi images, D" + std::to_string(n + 1), "decorated layer not built")};
  auto dia = DynkinDiagram::D(n + 1);
  Algebra<ScaledDiagramD> alg{[n](Sym s) { return psi_gen(s.kind, s.node, n); },
                              [](const ScaledDiagramD& a, const ScaledDiagramD& b) { return compose(a, b); },
                              [](const ScaledDiagramD& a, int k) { return scale(a, HScalar::delta(k)); }, identity_d(n + 1)};
  return brauer_relations(alg, n + 1, [&](int i, int j) { return dia.adjacent(i, j); });
}

std::vector<Check> suite_derived_a(int m) {
  if (m < 2 || m > 12) throw std::out_of_range("suite_derived_a: 2 <= m <= 12");
  auto alg = type_a_algebra(m);
  auto dia = DynkinDiagram::A(m);
  std::vector<Check> out;
  for (int i = 1; i <= m; ++i)
    for (int j = 1; j <= m; ++j) {
      if (!dia.adjacent(i, j)) continue;
      auto n = idx({{"i", i}, {"j", j}});
      out.push_back(alg.rel("EiRjRi = EiEj " + n, S({{'E', i}, {'R', j}, {'R', i}}), S({{'E', i}, {'E', j}})));
      out.push_back(alg.rel("RjEiEj = RiEj " + n, S({{'R', j}, {'E', i}, {'E', j}}), S({{'R', i}, {'E', j}})));
      out.push_back(alg.rel("EiRjEi = Ei " + n, S({{'E', i}, {'R', j}, {'E', i}}), S({{'E', i}})));
      out.push_back(alg.rel("EjEiRj = EjRi " + n, S({{'E', j}, {'E', i}, {'R', j}}), S({{'E', j}, {'R', i}})));
      out.push_back(alg.rel("EiEjEi = Ei " + n, S({{'E', i}, {'E', j}, {'E', i}}), S({{'E', i}})));
      for (int k = 1; k <= m; ++k) {
        if (k == i || !dia.adjacent(j, k)) continue;
        auto nk = idx({{"i", i}, {"j", j}, {"k", k}});
        out.push_back(alg.rel("EjEiRkEj = EjRiEkEj " + nk, S({{'E', j}, {'E', i}, {'R', k}, {'E', j}}),
                              S({{'E', j}, {'R', i}, {'E', k}, {'E', j}})));
        out.push_back(alg.rel("EjRiRkEj = EjEiEkEj " + nk, S({{'E', j}, {'R', i}, {'R', k}, {'E', j}}),
                              S({{'E', j}, {'E', i}, {'E', k}, {'E', j}})));
      }
    }
  return out;
}

namespace {

template <class Elem>
std::vector<Check> dtl_relations(const Algebra<Elem>& alg, const DtlPresentation& p) {
  std::vector<Check> out;
  const int j0 = p.heavy_node();
  for (int i = 0; i < p.n; ++i)
    out.push_back(alg.rel("ei^2 = d^k ei " + idx({{"i", i}, {"k", p.kappa[i]}}), S({{'e', i}, {'e', i}}),
                          S({{'e', i}}, p.kappa[i])));
  for (int i = 0; i < p.n; ++i)
    for (int j = 0; j < p.n; ++j) {
      if (i == j) continue;
      auto n = idx({{"i", i}, {"j", j}});
      if (!p.adjacent(i, j)) {
        if (i < j) out.push_back(alg.rel("eiej = ejei " + n, S({{'e', i}, {'e', j}}), S({{'e', j}, {'e', i}})));
      } else if (std::min(i, j) == 0 && std::max(i, j) == 1 && j0 >= 0) {
        if (j == j0) out.push_back(alg.rel("ejeiej = d ej " + n, S({{'e', j}, {'e', i}, {'e', j}}), S({{'e', j}}, 1)));
      } else {
        out.push_back(alg.rel("eiejei = ei " + n, S({{'e', i}, {'e', j}, {'e', i}}), S({{'e', i}})));
      }
    }
  return out;
}

template <class Elem>
std::vector<Check> double_laced_relations(const Algebra<Elem>& alg, const DtlPresentation& p) {
  std::vector<Check> out;
  const int jh = p.heavy_node();
  const int ih = 1 - jh;
  for (int i = 0; i < p.n; ++i) {
    auto n = idx({{"i", i}});
    out.push_back(alg.rel("ri^2 = 1 " + n, S({{'r', i}, {'r', i}}), S({})));
    out.push_back(alg.rel("riei = ei " + n, S({{'r', i}, {'e', i}}), S({{'e', i}})));
    out.push_back(alg.rel("eiri = ei " + n, S({{'e', i}, {'r', i}}), S({{'e', i}})));
    out.push_back(alg.rel("ei^2 = d^k ei " + idx({{"i", i}, {"k", p.kappa[i]}}), S({{'e', i}, {'e', i}}),
                          S({{'e', i}}, p.kappa[i])));
  }
  for (int i = 0; i < p.n; ++i)
    for (int j = 0; j < p.n; ++j) {
      if (i == j) continue;
      auto n = idx({{"i", i}, {"j", j}});
      bool dbl = std::min(i, j) == 0 && std::max(i, j) == 1;
      if (!p.adjacent(i, j)) {
        if (i < j) {
          out.push_back(alg.rel("rirj = rjri " + n, S({{'r', i}, {'r', j}}), S({{'r', j}, {'r', i}})));
          out.push_back(alg.rel("eiej = ejei " + n, S({{'e', i}, {'e', j}}), S({{'e', j}, {'e', i}})));
        }
        out.push_back(alg.rel("eirj = rjei " + n, S({{'e', i}, {'r', j}}), S({{'r', j}, {'e', i}})));
      } else if (!dbl) {
        if (i < j) {
          out.push_back(alg.rel("rirjri = rjrirj " + n, S({{'r', i}, {'r', j}, {'r', i}}), S({{'r', j}, {'r', i}, {'r', j}})));
          out.push_back(alg.rel("riejri = rjeirj " + n, S({{'r', i}, {'e', j}, {'r', i}}), S({{'r', j}, {'e', i}, {'r', j}})));
        }
        out.push_back(alg.rel("rjriej = eiej " + n, S({{'r', j}, {'r', i}, {'e', j}}), S({{'e', i}, {'e', j}})));
      } else if (i == ih && j == jh) {
        out.push_back(alg.rel("rjrirjri = rirjrirj " + n, S({{'r', j}, {'r', i}, {'r', j}, {'r', i}}),
                              S({{'r', i}, {'r', j}, {'r', i}, {'r', j}})));
        out.push_back(alg.rel("rjriej = riej " + n, S({{'r', j}, {'r', i}, {'e', j}}), S({{'r', i}, {'e', j}})));
        out.push_back(alg.rel("rjeirjei = eiejei " + n, S({{'r', j}, {'e', i}, {'r', j}, {'e', i}}),
                              S({{'e', i}, {'e', j}, {'e', i}})));
        out.push_back(alg.rel("rjrirjei = eirjrirj " + n, S({{'r', j}, {'r', i}, {'r', j}, {'e', i}}),
                              S({{'e', i}, {'r', j}, {'r', i}, {'r', j}})));
        out.push_back(alg.rel("ejriej = d ej " + n, S({{'e', j}, {'r', i}, {'e', j}}), S({{'e', j}}, 1)));
        out.push_back(alg.rel("ejeiej = d ej " + n, S({{'e', j}, {'e', i}, {'e', j}}), S({{'e', j}}, 1)));
        out.push_back(alg.rel("ejrirj = ejri " + n, S({{'e', j}, {'r', i}, {'r', j}}), S({{'e', j}, {'r', i}})));
        out.push_back(alg.rel("ejeirj = ejei " + n, S({{'e', j}, {'e', i}, {'r', j}}), S({{'e', j}, {'e', i}})));
      }
    }
  return out;
}

}  // namespace

std::vector<Check> suite_dtl(char type, int n) {
  auto p = dtl_presentation(type, n);
  if (type == 'B') return dtl_relations(phi_b_algebra(n), p);
  if (type == 'C') return dtl_relations(phi_c_algebra(n), p);
  throw std::invalid_argument("suite_dtl: type must be B or C");
}

std::vector<Check> suite_double_laced(char type, int n) {
  auto p = dtl_presentation(type, n);
  if (type == 'C') return double_laced_relations(phi_c_algebra(n), p);
  if (type != 'B') throw std::invalid_argument("suite_double_laced: type must be B or C");
  if (!l2_available()) return {skipped("double-laced relations, B" + std::to_string(n), "decorated layer not built")};
  return double_laced_relations(phi_b_algebra(n), p);
}

std::vector<Check> suite_hat(int n) {
  if (n < 2 || n > 8) throw std::out_of_range("suite_hat: 2 <= n <= 8");
  auto alg = phi_b_algebra(n);
  std::vector<Check> out;
  for (int i = 0; i <= n - 2; ++i) {
    auto x = idx({{"i", i}});
    out.push_back(alg.rel("hei hei+1 = d hei ei+1 " + x, S({{'h', i}, {'h', i + 1}}), S({{'h', i}, {'e', i + 1}}, 1)));
    out.push_back(alg.rel("hei ei+1 hei = d hei " + x, S({{'h', i}, {'e', i + 1}, {'h', i}}), S({{'h', i}}, 1)));
    if (i >= 1) {
      out.push_back(alg.rel("hei hei+1 = d ei hei+1 " + x, S({{'h', i}, {'h', i + 1}}), S({{'e', i}, {'h', i + 1}}, 1)));
      out.push_back(alg.rel("hei+1 ei hei+1 = d hei+1 " + x, S({{'h', i + 1}, {'e', i}, {'h', i + 1}}), S({{'h', i + 1}}, 1)));
    }
  }
  for (int i = 0; i < n; ++i)
    out.push_back(alg.rel("hei^2 = d^2 hei " + idx({{"i", i}}), S({{'h', i}, {'h', i}}), S({{'h', i}}, 2)));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      auto x = idx({{"i", i}, {"j", j}});
      if (std::abs(i - j) > 1) {
        if (i < j) out.push_back(alg.rel("hei hej = hej hei " + x, S({{'h', i}, {'h', j}}), S({{'h', j}, {'h', i}})));
        out.push_back(alg.rel("hei ej = ej hei " + x, S({{'h', i}, {'e', j}}), S({{'e', j}, {'h', i}})));
        // fails for i = 0, where hat e0 = e0
        if (i >= 1)
          out.push_back(alg.rel("hei hej = d ei hej " + x, S({{'h', i}, {'h', j}}), S({{'e', i}, {'h', j}}, 1)));
      } else if (std::abs(i - j) == 1) {
        out.push_back(alg.rel("hei hej hei = d^2 hei " + x, S({{'h', i}, {'h', j}, {'h', i}}), S({{'h', i}}, 2)));
      }
    }
  return out;
}

std::vector<Check> suite_height_mirror(int m) {
  if (m < 1 || m > 3) throw std::out_of_range("suite_height_mirror: 1 <= m <= 3");
  auto heights = word_heights(m + 1);
  std::vector<Connector> elems;
  for (auto& [c, h] : heights) elems.push_back(c);
  std::sort(elems.begin(), elems.end());
  std::vector<Check> out;
  for (const auto& c : elems) {
    int a = heights.at(c), b = heights.at(mirror(c));
    out.push_back({"ht(a) = ht(mirror(a)) a=" + show_conn(c), std::to_string(a), std::to_string(b), a == b});
  }
  return out;
}

std::vector<Check> suite_admissible(const std::string& type_label) {
  RootSystem rs(DynkinDiagram::parse(type_label));
  std::vector<Check> out;
  auto add = [&](std::string name, std::string expected, std::string actual) {
    bool ok = expected == actual;
    out.push_back({std::move(name), std::move(expected), std::move(actual), ok});
  };
  auto guarded = [&](const std::string& name, auto&& f) {
    try {
      f();
    } catch (const std::exception& e) {
      out.push_back({name, "no error", std::string("error: ") + e.what(), false});
    }
  };

  if (type_label == "D4") {
    guarded("closure of {a1,a2,a4}", [&] {
      auto x = parse_set(rs, "a1,a2,a4");
      add("closure of {a1,a2,a4}", format_set(rs, parse_set(rs, "a1,a2,a4,a1+a2+2a3+a4")), format_set(rs, closure(rs, x)));
      add("{a1,a2,a4} not admissible", "false", is_admissible(rs, x) ? "true" : "false");
    });
  }
  if (type_label == "A4") {
    guarded("maximum of the orbit of {a1,a3}", [&] {
      auto p = orbit(rs, parse_set(rs, "a1,a3"));
      add("orbit of {a1,a3} size", "15", std::to_string(p.sets.size()));
      add("maximum of the orbit of {a1,a3}", format_set(rs, parse_set(rs, "a1+a2+a3,a2+a3+a4")),
          format_set(rs, p.sets[p.maximal]));
    });
  }

  guarded("admissibility rules agree", [&] {
    auto sets = orthogonal_sets(rs);
    std::map<RootSet, bool> by_orbit;
    std::size_t disagree = 0;
    for (const auto& b : sets) {
      auto it = by_orbit.find(b);
      bool o;
      if (it != by_orbit.end()) {
        o = it->second;
      } else {
        o = admissible_by_orbit(rs, b);
        for (const auto& x : weyl_orbit(rs, b)) by_orbit[x] = o;
      }
      if (o != admissible_by_triples(rs, b)) ++disagree;
    }
    add("admissibility rules agree on all " + std::to_string(sets.size()) + " orthogonal sets", "0 disagreements",
        std::to_string(disagree) + " disagreements");
  });

  std::vector<RootSet> adm;
  guarded("admissible sets", [&] { adm = admissible_sets(rs); });

  guarded("unique maximal element per orbit", [&] {
    std::set<RootSet> done;
    int orbits = 0;
    for (const auto& b : adm) {
      if (done.count(b)) continue;
      auto p = orbit(rs, b);
      ++orbits;
      for (const auto& x : p.sets) done.insert(x);
    }
    add("every admissible orbit has a unique maximum (" + std::to_string(orbits) + " orbits)", "true", "true");
  });

  guarded("ei action independent of beta", [&] {
    std::size_t bad = 0;
    for (const auto& b : adm)
      for (int i = 1; i <= rs.rank(); ++i) {
        auto ref = ei_action(rs, i, b);
        for (int beta : b)
          if (beta != rs.simple(i) && rs.inner(beta, rs.simple(i)) != 0 && !std::binary_search(b.begin(), b.end(), rs.simple(i)) &&
              ei_action_with(rs, i, b, beta) != ref)
            ++bad;
      }
    add("ei action independent of the choice of beta", "0 conflicts", std::to_string(bad) + " conflicts");
  });

  if (rs.diagram().family() == Family::A) {
    guarded("root action equals diagram action", [&] {
      const int strands = rs.rank() + 1;
      std::size_t bad = 0, total = 0;
      for (const auto& b : adm)
        for (int i = 1; i <= rs.rank(); ++i) {
          total += 2;
          if (ei_action(rs, i, b) != diagram_action(rs, gen_e(i, strands), b)) ++bad;
          if (weyl_action(rs, {i}, b) != diagram_action(rs, gen_r(i, strands), b)) ++bad;
        }
      add("root-level and diagram-top actions agree on " + std::to_string(total) + " instances", "0 mismatches",
          std::to_string(bad) + " mismatches");
    });
  }
  return out;
}

}  // namespace brauer

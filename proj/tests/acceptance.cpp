// Acceptance run: one line per criterion, exit status 1 if any fails.
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "brauer/dtl.hpp"
#include "brauer/suites.hpp"

using namespace brauer;

namespace {

struct Outcome {
  bool pass = false;
  bool skipped = false;
  std::string detail;
};

long long double_factorial(int k) {
  long long r = 1;
  for (int x = k; x > 1; x -= 2) r *= x;
  return r;
}

std::vector<long long> catalans(int upto) {
  std::vector<long long> c(upto + 1, 0);
  c[0] = 1;
  for (int k = 1; k <= upto; ++k)
    for (int i = 0; i < k; ++i) c[k] += c[i] * c[k - 1 - i];
  return c;
}

long long pascal(int n, int k) {
  std::vector<std::vector<long long>> t(n + 1, std::vector<long long>(n + 1, 0));
  for (int a = 0; a <= n; ++a) {
    t[a][0] = 1;
    for (int b = 1; b <= a; ++b) t[a][b] = t[a - 1][b - 1] + t[a - 1][b];
  }
  return t[n][k];
}

template <class T>
std::string join(const std::vector<T>& v) {
  std::ostringstream s;
  for (std::size_t i = 0; i < v.size(); ++i) s << (i ? " " : "") << v[i];
  return s.str();
}

Outcome c1() {
  std::vector<long long> got, want;
  for (int m = 1; m <= 4; ++m) {
    got.push_back(static_cast<long long>(enumerate_monoid(brauer_generators(m + 1)).size()));
    want.push_back(double_factorial(2 * m + 1));
  }
  return {got == want, false, "ranks " + join(got) + ", expected " + join(want)};
}

Outcome c2() {
  auto cat = catalans(8);
  std::vector<long long> planar, monoid, want;
  for (int n = 1; n <= 6; ++n) {
    planar.push_back(static_cast<long long>(planar_connectors(n + 1).size()));
    monoid.push_back(static_cast<long long>(enumerate_monoid(tl_generators(n + 1)).size()));
    want.push_back(cat[n + 1]);
  }
  return {planar == want && monoid == want, false,
          "planar " + join(planar) + ", monoid " + join(monoid) + ", expected " + join(want)};
}

Outcome c3() {
  std::vector<long long> bfs, stl, want;
  for (int n = 1; n <= 4; ++n) {
    auto r = rank_dtl_c(n);
    bfs.push_back(r.bfs);
    stl.push_back(static_cast<long long>(stl_basis(n).size()));
    want.push_back(pascal(2 * n, n));
  }
  return {bfs == want && stl == want, false, "monoid " + join(bfs) + ", STL " + join(stl) + ", expected " + join(want)};
}

Outcome c4() {
  auto cat = catalans(8);
  std::vector<long long> span, bfs, want;
  for (int n = 2; n <= 5; ++n) {
    auto r = rank_dtl_b(n);
    span.push_back(r.spanning);
    bfs.push_back(r.bfs);
    want.push_back(cat[n] + cat[n + 1] - 1);
  }
  return {span == want && bfs == want, false,
          "spanning " + join(span) + ", monoid " + join(bfs) + ", expected " + join(want)};
}

Outcome run_suites(const std::vector<std::pair<std::string, std::vector<Check>>>& suites) {
  std::size_t total = 0, failed = 0, skipped = 0;
  std::string first_failure, skipped_names;
  for (const auto& [name, checks] : suites) {
    total += checks.size();
    failed += count_failed(checks);
    skipped += count_skipped(checks);
    for (const auto& c : checks) {
      if (!c.pass && !c.skipped && first_failure.empty()) first_failure = "; first failure: " + c.name + " got " + c.actual;
      if (c.skipped) skipped_names += " " + name;
    }
  }
  std::string d = std::to_string(total - skipped) + " instances, " + std::to_string(failed) + " failed";
  if (skipped) d += ", skipped:" + skipped_names + " (decorated layer not built)";
  return {failed == 0, false, d + first_failure};
}

Outcome c5() {
  std::vector<std::pair<std::string, std::vector<Check>>> s;
  for (int m = 1; m <= 5; ++m) s.push_back({"brauer-A" + std::to_string(m), suite_brauer_a(m)});
  for (int n = 2; n <= 4; ++n) s.push_back({"brauer-psi-D" + std::to_string(n + 1), suite_brauer_psi(n)});
  for (int m = 2; m <= 5; ++m) s.push_back({"derived-A" + std::to_string(m), suite_derived_a(m)});
  for (int n = 2; n <= 5; ++n) s.push_back({"dtl-B" + std::to_string(n), suite_dtl('B', n)});
  for (int n = 1; n <= 4; ++n) s.push_back({"dtl-C" + std::to_string(n), suite_dtl('C', n)});
  for (int n = 2; n <= 5; ++n) s.push_back({"hat-B" + std::to_string(n), suite_hat(n)});
  return run_suites(s);
}

Outcome c6() {
  std::vector<std::pair<std::string, std::vector<Check>>> s;
  for (auto t : {"A1", "A2", "A3", "A4", "A5", "D4", "D5"}) s.push_back({t, suite_admissible(t)});
  return run_suites(s);
}

Outcome c7() {
  std::size_t sets = 0, unreached = 0, bad_replay = 0;
  for (int n = 1; n <= 4; ++n) {
    auto rep = surjectivity_bfs(n);
    RootSystem rs(DynkinDiagram::A(2 * n - 1));
    for (const auto& w : rep.witnesses) {
      ++sets;
      if (!w.reached) ++unreached;
      else if (diagram_action(rs, phi_c(w.word, n), rep.starts[w.size]) != w.target) ++bad_replay;
    }
  }
  return {unreached == 0 && bad_replay == 0 && sets > 0, false,
          std::to_string(sets) + " sets, " + std::to_string(unreached) + " unreachable, " + std::to_string(bad_replay) +
              " witness words failed replay"};
}

Outcome c8() {
  auto checks = suite_height_mirror(3);
  std::size_t ok = checks.size() - count_failed(checks);
  return {checks.size() == 105 && all_pass(checks), false, std::to_string(ok) + "/" + std::to_string(checks.size())};
}

// Arcs (p, q+1) from the support [p, q] of each root; crossing-free means no
// two arcs cross and no point left free sits under an arc.
bool crossing_free_by_arcs(const RootSystem& rs, const RootSet& b) {
  std::vector<std::pair<int, int>> arcs;
  std::vector<bool> used(rs.rank() + 1, false);
  for (int id : b) {
    const Root& r = rs.root(id);
    int p = 0;
    while (r(p) == 0) ++p;
    int q = p;
    while (q + 1 < r.size() && r(q + 1) != 0) ++q;
    arcs.push_back({p, q + 1});
    used[p] = used[q + 1] = true;
  }
  for (auto [p, q] : arcs) {
    for (auto [r, s] : arcs)
      if (p < r && r < q && q < s) return false;
    for (int x = p + 1; x < q; ++x)
      if (!used[x]) return false;
  }
  return true;
}

Outcome c9() {
  std::size_t sets = 0, mismatch = 0, zero = 0;
  for (int n = 1; n <= 7; ++n) {
    RootSystem rs(DynkinDiagram::A(n));
    HeightTable ht(rs);
    for (const auto& b : admissible_sets(rs)) {
      ++sets;
      bool h0 = ht.height(b) == 0;
      zero += h0;
      if (h0 != crossing_free_by_arcs(rs, b) || h0 != top_crossing_free(rs, b)) ++mismatch;
    }
  }
  return {mismatch == 0, false,
          std::to_string(sets) + " admissible sets, " + std::to_string(zero) + " of height 0, " + std::to_string(mismatch) +
              " mismatches"};
}

Outcome c10() {
  if (!l2_available()) return {false, true, "decorated layer not built"};
  std::ostringstream d;
  bool ok = true;
  for (int n = 1; n <= 2; ++n) {
    auto c = basis_census(n);
    auto m = enumerate_monoid_d(psi_generators(n));
    long long one = 0, xi = 0, theta = 0;
    for (const auto& x : m) (x.scalar.tag == Tag::one ? one : x.scalar.tag == Tag::xi ? xi : theta)++;
    long long want = double_factorial(2 * n + 1) << n;
    ok = ok && c.t == want && one == c.t && xi == c.xi && theta == c.theta;
    d << "n=" << n << ": T " << c.t << " (expected " << want << "), xi " << c.xi << "/" << xi << ", theta " << c.theta << "/"
      << theta << "; ";
  }
  std::size_t pairs = 0, differ = 0;
  for (int strands = 2; strands <= 4; ++strands) {
    auto elems = enumerate_monoid(brauer_generators(strands));
    for (const auto& x : elems)
      for (const auto& y : elems) {
        ScaledDiagramD a{HScalar{}, x, 0}, b{HScalar{}, y, 0};
        ++pairs;
        if (compose_l2(a, b) != compose_l1(a, b)) ++differ;
      }
  }
  ok = ok && differ == 0;
  d << pairs << " unmarked pairs, " << differ << " differ";
  return {ok, false, d.str()};
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* title;
    double limit;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria = {
      {1, "Br(A_m) rank, m = 1..4", 60, c1},
      {2, "TL(A_n) rank, n = 1..6", 60, c2},
      {3, "DTL(C_n) rank and STL basis, n = 1..4", 120, c3},
      {4, "DTL(B_n) rank, n = 2..5", 120, c4},
      {5, "relation suites", 0, c5},
      {6, "admissible sets", 0, c6},
      {7, "surjectivity witnesses, n <= 4", 300, c7},
      {8, "height invariance on BrM(A_3)", 60, c8},
      {9, "height zero iff crossing-free top, A_n n <= 7", 0, c9},
      {10, "decorated layer census and L1/L2 agreement", 0, c10},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, false, std::string("error: ") + e.what()};
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    bool late = c.limit > 0 && secs > c.limit;
    const char* verdict = o.skipped ? "SKIP" : (o.pass && !late) ? "PASS" : "FAIL";
    if (!o.skipped && (!o.pass || late)) ++failures;
    std::string limit = c.limit > 0 ? ", limit " + std::to_string(static_cast<int>(c.limit)) + " s" : "";
    std::printf("criterion %2d %s  %s: %s [%.2f s%s]\n", c.id, verdict, c.title, o.detail.c_str(), secs, limit.c_str());
    std::fflush(stdout);
  }
  return failures ? 1 : 0;
}

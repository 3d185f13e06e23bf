#pragma once

#include <functional>
#include <string>
#include <vector>

#include "brauer/dtl.hpp"

namespace brauer {

struct Check {
  std::string name;
  std::string expected;
  std::string actual;
  bool pass = false;
  bool skipped = false;
};

bool all_pass(const std::vector<Check>& checks);  // skipped checks do not count as passes
std::size_t count_failed(const std::vector<Check>& checks);
std::size_t count_skipped(const std::vector<Check>& checks);

// Brauer monoid presentation on the type A_m diagrams.
std::vector<Check> suite_brauer_a(int m);
// The same presentation on the type D_{n+1} images of psi; skipped without L2.
std::vector<Check> suite_brauer_psi(int n);
// Derived relations for adjacent i ~ j ~ k in Br(A_m).
std::vector<Check> suite_derived_a(int m);
// DTL presentation under phi_b ('B') or phi_c ('C').
std::vector<Check> suite_dtl(char type, int n);
// Double-laced Brauer presentation on {r_i, e_i}; 'B' is skipped without L2.
std::vector<Check> suite_double_laced(char type, int n);
// Identities among the hat elements under phi_b.
std::vector<Check> suite_hat(int n);
// ht(a) = ht(mirror(a)) for every element of BrM(A_m).
std::vector<Check> suite_height_mirror(int m);
// Closure example, agreement of the two admissibility rules, unique maxima,
// and root-level versus diagram-level actions.
std::vector<Check> suite_admissible(const std::string& type_label);

}  // namespace brauer

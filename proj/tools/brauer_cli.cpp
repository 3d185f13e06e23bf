// brauer: command line front end for the rank, relation and orbit checks.
#include <chrono>
#include <cstdio>
#include <ctime>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "brauer/dtl.hpp"
#include "brauer/suites.hpp"

using namespace brauer;
using json = nlohmann::ordered_json;

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Everything a subcommand produces.  Rendered after the run so the header
// can carry the timestamp and duration.
struct Report {
  std::vector<Check> checks;
  std::vector<std::string> lines;  // free text, text mode only
  json data = json::object();      // extra payload, JSON mode only
};

struct Options {
  bool as_json = false;
  std::size_t max_elements = 1'000'000;
  std::string algebra, type, suite, seed, word, set, dot, witnesses;
  int m = -1, n = -1;
  bool list_positive = false;
};

std::string timestamp() {
  std::time_t t = std::time(nullptr);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&t));
  return buf;
}

Check equal_check(std::string name, long long expected, long long actual) {
  return {std::move(name), std::to_string(expected), std::to_string(actual), expected == actual};
}

long long double_factorial(int k) {
  long long r = 1;
  for (int x = k; x > 1; x -= 2) r *= x;
  return r;
}

// (2^N + 1)(2N-1)!! - (2^{N-1} + 1) N!
long long brauer_d_rank(int big_n) {
  long long fact = 1;
  for (int k = 2; k <= big_n; ++k) fact *= k;
  return ((1ll << big_n) + 1) * double_factorial(2 * big_n - 1) - ((1ll << (big_n - 1)) + 1) * fact;
}

int size_param(const Options& o, const char* what) {
  int v = o.n >= 0 ? o.n : o.m;
  if (v < 0) throw UsageError(std::string(what) + " needs --n or --m");
  return v;
}

// "B4" -> ('B', 4)
std::pair<char, int> split_type(const std::string& t) {
  if (t.size() < 2 || !std::isalpha(static_cast<unsigned char>(t[0]))) throw UsageError("bad --type: " + t);
  try {
    return {static_cast<char>(std::toupper(static_cast<unsigned char>(t[0]))), std::stoi(t.substr(1))};
  } catch (const std::exception&) {
    throw UsageError("bad --type: " + t);
  }
}

std::string show_conn(const Connector& c) {
  std::string out = "{";
  for (auto [p, q] : c.pairs()) out += (out.size() > 1 ? "," : "") + std::to_string(p + 1) + "-" + std::to_string(q + 1);
  return out + "}";
}

json conn_json(const Connector& c) {
  json a = json::array();
  for (auto [p, q] : c.pairs()) a.push_back({p + 1, q + 1});
  return a;
}

Report cmd_rank(const Options& o) {
  Report r;
  std::string alg = o.algebra;
  int size = -1;
  if (alg.empty() && !o.type.empty()) {
    auto [t, k] = split_type(o.type);
    if (t != 'B' && t != 'C') throw UsageError("--type shortcut covers B_n and C_n only");
    alg = t == 'B' ? "dtlB" : "dtlC";
    size = k;
  }
  if (alg.empty()) throw UsageError("rank needs --algebra or --type");
  if (size < 0) size = size_param(o, "rank");
  if (alg == "brA") {
    if (size < 1 || size > 6) throw UsageError("brA supports 1 <= m <= 6");
    auto e = enumerate_monoid(brauer_generators(size + 1), o.max_elements);
    r.checks.push_back(equal_check("rank Br(A" + std::to_string(size) + ")", double_factorial(2 * size + 1),
                                   static_cast<long long>(e.size())));
  } else if (alg == "tlA") {
    if (size < 1 || size > 12) throw UsageError("tlA supports 1 <= n <= 12");
    auto p = planar_connectors(size + 1);
    auto e = enumerate_monoid(tl_generators(size + 1), o.max_elements);
    r.checks.push_back(equal_check("planar diagrams TL(A" + std::to_string(size) + ")", catalan(size + 1),
                                   static_cast<long long>(p.size())));
    r.checks.push_back(equal_check("rank TL(A" + std::to_string(size) + ")", catalan(size + 1),
                                   static_cast<long long>(e.size())));
  } else if (alg == "dtlB") {
    if (size < 2 || size > 7) throw UsageError("dtlB supports 2 <= n <= 7");
    auto rep = rank_dtl_b(size);
    r.checks.push_back(equal_check("spanning image DTL(B" + std::to_string(size) + ")", rep.expected, rep.spanning));
    r.checks.push_back(equal_check("rank DTL(B" + std::to_string(size) + ")", rep.expected, rep.bfs));
  } else if (alg == "dtlC") {
    if (size < 1 || size > 7) throw UsageError("dtlC supports 1 <= n <= 7");
    auto rep = rank_dtl_c(size);
    r.checks.push_back(equal_check("STL basis C" + std::to_string(size), rep.expected, rep.spanning));
    r.checks.push_back(equal_check("rank DTL(C" + std::to_string(size) + ")", rep.expected, rep.bfs));
  } else if (alg == "brD") {
    if (size < 2 || size > 6) throw UsageError("brD supports 2 <= N <= 6");
    if (!l2_available()) throw UsageError("brD needs the decorated layer, rebuild with BRAUER_WITH_L2=ON");
    auto e = enumerate_monoid_d(psi_generators(size - 1), o.max_elements);
    r.checks.push_back(equal_check("rank Br(D" + std::to_string(size) + ")", brauer_d_rank(size),
                                   static_cast<long long>(e.size())));
  } else {
    throw UsageError("unknown algebra " + alg + " (brA, tlA, dtlB, dtlC, brD)");
  }
  return r;
}

Report cmd_enumerate(const Options& o) {
  Report r;
  int size = size_param(o, "enumerate");
  std::vector<Connector> elems;
  if (o.algebra == "brA" || o.algebra == "tlA") {
    if (size < 1) throw UsageError("size must be positive");
    elems = enumerate_monoid(o.algebra == "brA" ? brauer_generators(size + 1) : tl_generators(size + 1), o.max_elements);
  } else if (o.algebra == "stl" || o.algebra == "dtlC") {
    if (size < 1 || size > 7) throw UsageError("dtlC supports 1 <= n <= 7");
    elems = stl_basis(size);
  } else if (o.algebra == "brD") {
    if (!l2_available()) throw UsageError("brD needs the decorated layer, rebuild with BRAUER_WITH_L2=ON");
    if (size < 2 || size > 6) throw UsageError("brD supports 2 <= N <= 6");
    auto d = enumerate_monoid_d(psi_generators(size - 1), o.max_elements);
    std::sort(d.begin(), d.end());
    json list = json::array();
    for (const auto& x : d) {
      std::string line = std::string(tag_name(x.scalar.tag)) + " " + show_conn(x.conn);
      json marks = json::array();
      for (auto [p, q] : x.decorated_pairs()) {
        line += " *" + std::to_string(p + 1) + "-" + std::to_string(q + 1);
        marks.push_back({p + 1, q + 1});
      }
      r.lines.push_back(line);
      list.push_back({{"tag", tag_name(x.scalar.tag)}, {"pairs", conn_json(x.conn)}, {"marks", marks}});
    }
    r.data["elements"] = list;
    r.checks.push_back({"element count", std::to_string(d.size()), std::to_string(d.size()), true});
    return r;
  } else {
    throw UsageError("enumerate supports --algebra brA, tlA, dtlC, brD");
  }
  std::sort(elems.begin(), elems.end());
  json list = json::array();
  for (const auto& c : elems) {
    r.lines.push_back(show_conn(c));
    list.push_back(conn_json(c));
  }
  r.data["elements"] = list;
  r.checks.push_back({"element count", std::to_string(elems.size()), std::to_string(elems.size()), true});
  return r;
}

Report cmd_verify(const Options& o) {
  Report r;
  const std::string& s = o.suite;
  auto need_type = [&] {
    if (o.type.empty()) throw UsageError("suite " + s + " needs --type");
    return split_type(o.type);
  };
  if (s == "def11") {
    auto [t, k] = need_type();
    if (t == 'A') r.checks = suite_brauer_a(k);
    else if (t == 'D') r.checks = suite_brauer_psi(k - 1);
    else throw UsageError("def11 runs on types A and D");
  } else if (s == "rem31") {
    auto [t, k] = need_type();
    if (t != 'A') throw UsageError("rem31 runs on type A");
    r.checks = suite_derived_a(k);
  } else if (s == "def01" || s == "def02") {
    auto [t, k] = need_type();
    if (t != 'B' && t != 'C') throw UsageError(s + " runs on types B and C");
    r.checks = s == "def01" ? suite_dtl(t, k) : suite_double_laced(t, k);
  } else if (s == "newrel") {
    int k = o.n >= 0 ? o.n : o.type.empty() ? -1 : need_type().second;
    if (k < 0) throw UsageError("newrel needs --n");
    r.checks = suite_hat(k);
  } else if (s == "heightinv") {
    auto [t, k] = need_type();
    if (t != 'A') throw UsageError("heightinv runs on type A");
    r.checks = suite_height_mirror(k);
  } else if (s == "admissible") {
    need_type();
    r.checks = suite_admissible(o.type);
  } else {
    throw UsageError("unknown suite " + s + " (def11, rem31, def01, def02, newrel, heightinv, admissible)");
  }
  return r;
}

RootSystem system_of(const Options& o) {
  if (o.type.empty()) throw UsageError("--type is required");
  return RootSystem(DynkinDiagram::parse(o.type));
}

RootSet admissible_seed(const RootSystem& rs, const std::string& text) {
  RootSet b = parse_set(rs, text);
  if (!is_orthogonal(rs, b)) throw UsageError("seed roots are not mutually orthogonal");
  if (!is_admissible(rs, b))
    throw UsageError("seed " + format_set(rs, b) + " is not admissible; its closure is " + format_set(rs, closure(rs, b)));
  return b;
}

Report cmd_orbit(const Options& o) {
  Report r;
  RootSystem rs = system_of(o);
  auto p = orbit(rs, admissible_seed(rs, o.seed));
  json sets = json::array();
  for (std::size_t k = 0; k < p.sets.size(); ++k) {
    std::string f = format_set(rs, p.sets[k]);
    r.lines.push_back("height " + std::to_string(p.height[k]) + "  " + f);
    sets.push_back({{"set", f}, {"height", p.height[k]}});
  }
  r.data["sets"] = sets;
  r.data["maximal"] = format_set(rs, p.sets[p.maximal]);
  r.data["d"] = p.d;
  r.checks.push_back({"unique maximal element", "1", "1", true});
  r.checks.push_back({"maximal element has height d", std::to_string(p.d), std::to_string(p.height[p.maximal]),
                      p.height[p.maximal] == p.d});
  return r;
}

std::string hasse_dot(const RootSystem& rs, const OrbitPoset& p) {
  std::ostringstream s;
  s << "digraph hasse {\n  rankdir=BT;\n  node [shape=box];\n";
  for (int h = 0; h <= p.d; ++h) {
    s << "  { rank=same;";
    for (std::size_t k = 0; k < p.sets.size(); ++k)
      if (p.height[k] == h) s << " n" << k << ";";
    s << " }\n";
  }
  for (std::size_t k = 0; k < p.sets.size(); ++k)
    s << "  n" << k << " [label=\"" << format_set(rs, p.sets[k]) << "\\nht " << p.height[k] << "\"];\n";
  for (std::size_t k = 0; k < p.sets.size(); ++k)
    for (const auto& e : p.lower[k]) s << "  n" << e.target << " -> n" << k << " [label=\"R" << e.node << "\"];\n";
  s << "}\n";
  return s.str();
}

Report cmd_hasse(const Options& o) {
  Report r;
  RootSystem rs = system_of(o);
  auto p = orbit(rs, admissible_seed(rs, o.seed));
  std::string dot = hasse_dot(rs, p);
  if (o.dot.empty()) {
    std::istringstream in(dot);
    for (std::string line; std::getline(in, line);) r.lines.push_back(line);
  } else {
    std::ofstream f(o.dot);
    if (!f) throw UsageError("cannot write " + o.dot);
    f << dot;
    r.lines.push_back("wrote " + o.dot);
  }
  int sinks = 0;
  for (int h : p.height) sinks += h == p.d;
  std::size_t edges = 0;
  for (const auto& l : p.lower) edges += l.size();
  r.data["nodes"] = p.sets.size();
  r.data["edges"] = edges;
  r.data["dot"] = dot;
  r.checks.push_back({"nodes", std::to_string(p.sets.size()), std::to_string(p.sets.size()), true});
  r.checks.push_back({"elements at the top height", "1", std::to_string(sinks), sinks == 1});
  return r;
}

Report cmd_action(const Options& o) {
  Report r;
  RootSystem rs = system_of(o);
  RootSet b = parse_set(rs, o.set);
  if (!is_admissible(rs, b)) throw UsageError("set " + format_set(rs, b) + " is not admissible");
  std::vector<std::pair<char, int>> word;
  std::istringstream in(o.word);
  for (std::string tok; in >> tok;) {
    char k = static_cast<char>(std::toupper(static_cast<unsigned char>(tok[0])));
    if ((k != 'E' && k != 'R') || tok.size() < 2) throw UsageError("bad word symbol " + tok + " (use E1, R2, ...)");
    int i;
    try {
      i = std::stoi(tok.substr(1));
    } catch (const std::exception&) {
      throw UsageError("bad word symbol " + tok);
    }
    if (i < 1 || i > rs.rank()) throw UsageError("node out of range in " + tok);
    word.push_back({k, i});
  }
  json trace = json::array();
  RootSet cur = b;
  r.lines.push_back("start  " + format_set(rs, cur));
  const bool type_a = rs.diagram().family() == Family::A;
  bool agree = true;
  // Rightmost symbol acts first.
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    auto [k, i] = *it;
    RootSet next = k == 'E' ? ei_action(rs, i, cur) : reflect_set(rs, i, cur);
    if (type_a) {
      auto g = k == 'E' ? gen_e(i, rs.rank() + 1) : gen_r(i, rs.rank() + 1);
      agree = agree && diagram_action(rs, g, cur) == next;
    }
    std::string sym = std::string(1, k) + std::to_string(i);
    r.lines.push_back(sym + "  " + format_set(rs, next));
    trace.push_back({{"symbol", sym}, {"set", format_set(rs, next)}});
    cur = next;
  }
  r.data["trace"] = trace;
  r.data["result"] = format_set(rs, cur);
  r.checks.push_back({"result is admissible", "true", is_admissible(rs, cur) ? "true" : "false", is_admissible(rs, cur)});
  if (type_a) r.checks.push_back({"diagram-top action agrees", "true", agree ? "true" : "false", agree});
  return r;
}

Report cmd_closure(const Options& o) {
  Report r;
  RootSystem rs = system_of(o);
  RootSet x = parse_set(rs, o.set);
  if (!is_orthogonal(rs, x)) throw UsageError("roots are not mutually orthogonal");
  RootSet c = closure(rs, x);
  r.lines.push_back(format_set(rs, c));
  r.data["closure"] = format_set(rs, c);
  r.data["input_admissible"] = is_admissible(rs, x);
  r.checks.push_back({"closure is admissible", "true", is_admissible(rs, c) ? "true" : "false", is_admissible(rs, c)});
  return r;
}

Report cmd_iso_check(const Options& o) {
  Report r;
  int n = size_param(o, "iso-check");
  if (n < 1 || n > 5) throw UsageError("iso-check supports 1 <= n <= 5");
  auto rank = rank_dtl_c(n);
  r.checks.push_back(equal_check("rank DTL(C" + std::to_string(n) + ")", rank.expected, rank.bfs));
  r.checks.push_back(equal_check("STL basis", rank.expected, rank.spanning));
  auto rep = surjectivity_bfs(n);
  RootSystem rs(DynkinDiagram::A(2 * n - 1));
  json wit = json::array();
  for (const auto& w : rep.witnesses) {
    std::string target = format_set(rs, w.target);
    bool replay = w.reached && diagram_action(rs, phi_c(w.word, n), rep.starts[w.size]) == w.target;
    r.checks.push_back({"reach " + target + " from " + format_set(rs, rep.starts[w.size]), "reached",
                        w.reached ? "by " + (w.word.gens.empty() ? std::string("1") : format_word(w.word)) : "unreached",
                        w.reached && replay});
    wit.push_back({{"size", w.size},
                   {"start", format_set(rs, rep.starts[w.size])},
                   {"target", target},
                   {"reached", w.reached},
                   {"word", format_word(w.word)}});
  }
  r.data["witnesses"] = wit;
  if (!o.witnesses.empty()) {
    std::ofstream f(o.witnesses);
    if (!f) throw UsageError("cannot write " + o.witnesses);
    f << json{{"schema", 1}, {"n", n}, {"witnesses", wit}}.dump(2) << "\n";
    r.lines.push_back("wrote " + o.witnesses);
  }
  return r;
}

Report cmd_rootsys(const Options& o) {
  Report r;
  RootSystem rs = system_of(o);
  r.lines.push_back(rs.diagram().label() + ": " + std::to_string(rs.num_positive()) + " positive roots");
  json roots = json::array();
  if (o.list_positive)
    for (int id = 0; id < rs.num_positive(); ++id) {
      const Root& x = rs.root(id);
      std::string eps = rs.diagram().family() == Family::E ? "" : rs.format_epsilon(x);
      r.lines.push_back(rs.format(x) + (eps.empty() ? "" : "  = " + eps) + "  height " + std::to_string(rs.height(id)));
      roots.push_back({{"root", rs.format(x)}, {"height", rs.height(id)}});
    }
  r.data["positive"] = rs.num_positive();
  if (o.list_positive) r.data["roots"] = roots;
  return r;
}

void emit(const Options& o, const std::string& command, const Report& r, double secs) {
  std::size_t failed = count_failed(r.checks), skipped = count_skipped(r.checks);
  bool pass = failed == 0;
  if (o.as_json) {
    std::cout << json{{"schema", 1}, {"command", command}, {"timestamp", timestamp()}, {"duration_s", secs}}.dump() << "\n";
    json checks = json::array();
    for (const auto& c : r.checks)
      checks.push_back({{"name", c.name},
                        {"expected", c.expected},
                        {"actual", c.actual},
                        {"verdict", c.skipped ? "skip" : c.pass ? "pass" : "fail"}});
    json body{{"schema", 1}, {"command", command}, {"pass", pass}, {"failed", failed}, {"skipped", skipped}, {"checks", checks}};
    for (auto& [k, v] : r.data.items()) body[k] = v;
    std::cout << body.dump() << "\n";
    return;
  }
  std::printf("# %s | %s | %.3f s\n", command.c_str(), timestamp().c_str(), secs);
  for (const auto& l : r.lines) std::printf("%s\n", l.c_str());
  for (const auto& c : r.checks) {
    const char* v = c.skipped ? "SKIP" : c.pass ? "PASS" : "FAIL";
    if (c.skipped) std::printf("%s  %s (%s)\n", v, c.name.c_str(), c.actual.c_str());
    else if (c.pass) std::printf("%s  %s = %s\n", v, c.name.c_str(), c.actual.c_str());
    else std::printf("%s  %s: expected %s, got %s\n", v, c.name.c_str(), c.expected.c_str(), c.actual.c_str());
  }
  std::printf("%zu checks, %zu failed, %zu skipped\n", r.checks.size(), failed, skipped);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Brauer, Temperley-Lieb and Dieck-Temperley-Lieb diagram checks"};
  app.require_subcommand(1);
  Options o;
  app.add_flag("--json", o.as_json, "JSON lines output");
  app.add_option("--max-elements", o.max_elements, "enumeration cap")->check(CLI::PositiveNumber);

  auto* rank = app.add_subcommand("rank", "rank of a diagram algebra");
  rank->add_option("--algebra", o.algebra, "brA, tlA, dtlB, dtlC or brD");
  rank->add_option("--type", o.type, "B4 or C3 as a shortcut for dtlB/dtlC");
  rank->add_option("--m", o.m, "size for type A");
  rank->add_option("--n", o.n, "size");

  auto* en = app.add_subcommand("enumerate", "list the basis diagrams");
  en->add_option("--algebra", o.algebra, "brA, tlA, dtlC or brD")->required();
  en->add_option("--m", o.m, "size for type A");
  en->add_option("--n", o.n, "size");

  auto* ver = app.add_subcommand("verify", "run a relation or property suite");
  ver->add_option("--suite", o.suite, "def11, rem31, def01, def02, newrel, heightinv, admissible")->required();
  ver->add_option("--type", o.type, "A4, D5, B3, ...");
  ver->add_option("--n", o.n, "size for newrel");

  auto* orb = app.add_subcommand("orbit", "W-orbit of an admissible set with heights");
  orb->add_option("--type", o.type)->required();
  orb->add_option("--seed", o.seed, "a1,a3")->required();

  auto* has = app.add_subcommand("hasse", "Hasse diagram of an orbit as DOT");
  has->add_option("--type", o.type)->required();
  has->add_option("--seed", o.seed)->required();
  has->add_option("--dot", o.dot, "output path, stdout if omitted");

  auto* act = app.add_subcommand("action", "apply a word in E_i, R_i to an admissible set");
  act->add_option("--type", o.type)->required();
  act->add_option("--word", o.word, "\"E1 R2\", rightmost first")->required();
  act->add_option("--set", o.set)->required();

  auto* clo = app.add_subcommand("closure", "admissible closure of an orthogonal set");
  clo->add_option("--type", o.type)->required();
  clo->add_option("--set", o.set)->required();

  auto* iso = app.add_subcommand("iso-check", "DTL(C_n) rank and surjectivity witnesses");
  iso->add_option("--n", o.n)->required();
  iso->add_option("--witnesses", o.witnesses, "write witness words as JSON");

  auto* rsys = app.add_subcommand("rootsys", "positive roots of a simply-laced system");
  rsys->add_option("--type", o.type)->required();
  rsys->add_flag("--list-positive", o.list_positive);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  std::string command;
  for (int i = 1; i < argc; ++i) command += (i > 1 ? " " : "") + std::string(argv[i]);

  auto t0 = std::chrono::steady_clock::now();
  Report r;
  try {
    if (*rank) r = cmd_rank(o);
    else if (*en) r = cmd_enumerate(o);
    else if (*ver) r = cmd_verify(o);
    else if (*orb) r = cmd_orbit(o);
    else if (*has) r = cmd_hasse(o);
    else if (*act) r = cmd_action(o);
    else if (*clo) r = cmd_closure(o);
    else if (*iso) r = cmd_iso_check(o);
    else if (*rsys) r = cmd_rootsys(o);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::length_error& e) {
    std::cerr << "error: " << e.what() << " (raise --max-elements)\n";
    return 2;
  } catch (const std::exception& e) {
    // Checks that fail by throwing still produce a report.
    r.checks.push_back({"run", "completed", std::string("error: ") + e.what(), false});
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  emit(o, command, r, secs);
  return count_failed(r.checks) ? 1 : 0;
}

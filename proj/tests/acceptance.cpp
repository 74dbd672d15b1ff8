// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <chrono>
#include <functional>
#include <iostream>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "oracles.hpp"
#include "torcol/constructions.hpp"
#include "torcol/embedding.hpp"
#include "torcol/facts.hpp"
#include "torcol/generators.hpp"
#include "torcol/homology.hpp"
#include "torcol/isomorphism.hpp"
#include "torcol/patterns.hpp"
#include "torcol/solver.hpp"
#include "torcol/surgery.hpp"

using namespace torcol;

namespace {

using Clock = std::chrono::steady_clock;

struct Check {
  bool ok = true;
  std::ostringstream why;

  void require(bool cond, const std::string& what) {
    if (!cond && ok) why << what;
    ok = ok && cond;
  }
};

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

Graph named(NamedKind kind) { return gen_named({kind}).graph; }

/// Status of an exact solve, timed against a per-instance limit.
SolveStatus timed_solve(Check& c, const std::string& label, const Graph& g, const DefectVector& d,
                        double limit, std::optional<Coloring>* out = nullptr) {
  auto t0 = Clock::now();
  auto r = solve(g, d);
  double s = seconds_since(t0);
  c.require(s < limit, label + " took " + std::to_string(s) + " s");
  if (r.status == SolveStatus::Sat) {
    c.require(verify_coloring(g, *r.coloring, d).valid, label + " certificate rejected");
    if (out) *out = r.coloring;
  }
  return r.status;
}

void criterion1(Check& c) {
  auto unsat = [&](const std::string& label, const Graph& g, const DefectVector& d) {
    c.require(timed_solve(c, label, g, d, 60.0) == SolveStatus::Unsat, label + " not UNSAT");
  };
  Graph k7 = named(NamedKind::K7);
  unsat("K7 (0,0,0,2)", k7, {0, 0, 0, 2});
  unsat("K7 (0,0,0,0,1)", k7, {0, 0, 0, 0, 1});
  unsat("K7 proper 6", k7, DefectVector::proper(6));
  unsat("T11 proper 5", named(NamedKind::T11), DefectVector::proper(5));
  unsat("C3vC5 proper 5", named(NamedKind::C3vC5), DefectVector::proper(5));
  unsat("K2vH7 proper 5", named(NamedKind::K2vH7), DefectVector::proper(5));
  Graph k6 = named(NamedKind::K6);
  unsat("K6 proper 5", k6, DefectVector::proper(5));
  c.require(timed_solve(c, "K6 proper 6", k6, DefectVector::proper(6), 60.0) == SolveStatus::Sat,
            "K6 proper 6 not SAT");
  for (GridSpec s : {GridSpec{3, 3, 2}, GridSpec{3, 3, 3}, GridSpec{5, 3, 2}, GridSpec{5, 3, 3},
                     GridSpec{5, 5, 3}, GridSpec{5, 5, 4}})
    unsat(s.token() + " proper 4", gen_grid(s).graph(), DefectVector::proper(4));
}

void criterion2(Check& c) {
  auto sat = [&](const std::string& label, const Graph& g, const DefectVector& d) {
    std::optional<Coloring> col;
    bool ok = timed_solve(c, label, g, d, 60.0, &col) == SolveStatus::Sat;
    c.require(ok, label + " not SAT");
    return col;
  };
  sat("T11 (0,0,0,2)", named(NamedKind::T11), {0, 0, 0, 2});
  Graph k7 = named(NamedKind::K7);
  sat("K7 (0,0,0,3)", k7, {0, 0, 0, 3});
  sat("K7 (0,0,0,1*,1*)", k7, DefectVector::parse("0,0,0,1*,1*"));
  auto d = DefectVector::parse("0,0,0,0,1*");
  for (auto kind : {NamedKind::C3vC5, NamedKind::K2vH7}) {
    Graph g = named(kind);
    auto col = sat("(0,0,0,0,1*)", g, d);
    if (col) c.require(verify_coloring(g, *col, d).total_mono() == 1, "mono count is not exactly one");
  }
}

void criterion3(Check& c) {
  auto t0 = Clock::now();
  for (int n = 8; n <= 60; ++n) {
    if (n == 11) continue;
    Graph g = gen_circulant({n, {1, 2, 3}});
    auto rep = verify_coloring(g, pattern_circ123(n).coloring(), {0, 0, 0, 1});
    c.require(rep.valid, "circ123 pattern fails at n=" + std::to_string(n));
    c.require(rep.total_mono() <= 3, "circ123 pattern has >3 mono edges at n=" + std::to_string(n));
  }
  int listed = 0, transported = 0;
  for (auto [r, n] : sporadic_pairs()) {
    auto tp = pattern_exception(r, n);
    (tp.unit == 1 ? listed : transported)++;
    Graph g = gen_circulant({n, normalize_offsets(n, {1, r, r + 1})});
    auto rep = verify_coloring(g, tp.pattern.coloring(), {0, 0, 0, 1});
    std::string pair = "(" + std::to_string(r) + "," + std::to_string(n) + ")";
    c.require(rep.valid, "pattern fails for " + pair);
    c.require(rep.total_mono() <= 2, "pattern has >2 mono edges for " + pair);
  }
  c.require(listed == 9 && transported == 7, "expected 9 listed and 7 transported patterns");
  double s = seconds_since(t0);
  c.require(s < 30.0, "pattern suite took " + std::to_string(s) + " s");
}

/// True when the vertex set induces one connected 2-regular subgraph.
bool induces_chordless_cycle(const Graph& g, const std::vector<int>& vs) {
  if (vs.size() < 3) return false;
  std::vector<char> in(static_cast<std::size_t>(g.order()), 0);
  for (int v : vs) in[v] = 1;
  for (int v : vs) {
    int d = 0;
    for (int w : g.neighbors(v)) d += in[w];
    if (d != 2) return false;
  }
  std::vector<int> stack{vs[0]};
  std::vector<char> seen(in.size(), 0);
  seen[vs[0]] = 1;
  std::size_t reached = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int w : g.neighbors(v))
      if (in[w] && !seen[w]) {
        seen[w] = 1;
        ++reached;
        stack.push_back(w);
      }
  }
  return reached == vs.size();
}

void criterion4(Check& c, const std::vector<CorpusEntry>& corpus) {
  auto t0 = Clock::now();
  c.require(corpus.size() >= 50, "corpus too small");
  for (const auto& e : corpus) {
    const Graph& g = e.rot.graph();
    try {
      auto a = color_600001(e.rot);
      c.require(verify_coloring(g, a.coloring, a.claimed).valid &&
                    a.claimed == DefectVector::parse("0,0,0,0,0,1*"),
                "600001 fails on " + e.name);

      auto b = color_00002(e.rot);
      c.require(verify_coloring(g, b.coloring, b.claimed).valid && b.claimed == DefectVector{0, 0, 0, 0, 2},
                "00002 fails on " + e.name);
      std::vector<int> five;
      for (int v = 0; v < g.order(); ++v)
        if (b.coloring[v] == 5) five.push_back(v);
      c.require(induces_chordless_cycle(g, five), "00002 class 5 is not a chordless cycle on " + e.name);

      auto d = color_0004(e.rot);
      auto rep = verify_coloring(g, d.coloring, d.claimed);
      c.require(rep.valid && d.claimed == DefectVector{0, 0, 0, 4}, "0004 fails on " + e.name);
      c.require(rep.per_class[3].max_degree <= 4, "0004 defect class degree > 4 on " + e.name);
    } catch (const std::exception& ex) {
      c.require(false, e.name + ": " + ex.what());
    }
  }
  double s = seconds_since(t0);
  c.require(s < 600.0, "pipelines took " + std::to_string(s) + " s");
}

void criterion5(Check& c, const std::vector<CorpusEntry>& corpus) {
  for (const auto& e : corpus) {
    const Graph& g = e.rot.graph();
    try {
      auto cycle = shortest_noncontractible_cycle(e.rot);
      const auto& vs = cycle.vertices;
      int l = static_cast<int>(vs.size());
      std::vector<char> on(static_cast<std::size_t>(g.order()), 0);
      for (int v : vs) on[v] = 1;
      bool induced = true;
      for (int i = 0; i < l; ++i)
        for (int j = i + 2; j < l; ++j)
          if (!(i == 0 && j == l - 1) && g.has_edge(vs[i], vs[j])) induced = false;
      c.require(induced, "SNCC has a chord on " + e.name);
      for (int v = 0; v < g.order(); ++v) {
        int count = 0;
        for (int w : g.neighbors(v)) count += on[w];
        c.require(count <= 3, "vertex with >3 neighbors on the SNCC of " + e.name);
      }
      auto cut = cut_and_contract(e.rot, cycle);
      c.require(planarity_check(cut.graph), "cut_and_contract output not planar on " + e.name);
      auto path = shortest_path(cut.graph, cut.u, cut.v);
      auto contracted = contract_path(cut.graph, path);
      c.require(planarity_check(contracted.graph), "contract_path output not planar on " + e.name);
    } catch (const std::exception& ex) {
      c.require(false, e.name + ": " + ex.what());
    }
  }
}

void criterion6(Check& c) {
  auto t0 = Clock::now();
  std::mt19937_64 rng(20240601);
  int agree = 0;
  for (int t = 0; t < 200; ++t) {
    int n = 1 + static_cast<int>(rng() % 9);
    Graph g = oracle::random_connected_graph(n, 0.2 + 0.1 * static_cast<double>(rng() % 6), rng);
    int k = 1 + static_cast<int>(rng() % 3);
    std::vector<DefectEntry> entries;
    for (int i = 0; i < k; ++i) {
      int b = static_cast<int>(rng() % 3);
      entries.push_back({b, b == 1 && rng() % 2 == 0});
    }
    DefectVector d(entries);
    auto a = solve(g, d);
    auto b = enumerate_oracle(g, d);
    bool same = a.status == b.status;
    if (same && a.status == SolveStatus::Sat) same = verify_coloring(g, *a.coloring, d).valid;
    agree += same;
    c.require(same, "disagreement at trial " + std::to_string(t) + " with " + d.to_string());
  }
  c.require(agree == 200, "agreement " + std::to_string(agree) + "/200");
  double s = seconds_since(t0);
  c.require(s < 600.0, "oracle comparison took " + std::to_string(s) + " s");
}

void criterion7(Check& c) {
  auto t0 = Clock::now();
  auto iso_checked = [](const Graph& a, const Graph& b) {
    auto iso = find_isomorphism(a, b);
    return iso && is_isomorphism(a, b, *iso);
  };
  for (int m = 3; m <= 12; ++m)
    for (int i = 3; i <= m; ++i) {
      GridSpec spec{m, 1, i};
      if (!spec.valid()) continue;
      Graph circ = gen_circulant({m, normalize_offsets(m, {1, i - 2, i - 1})});
      c.require(iso_checked(gen_grid(spec).graph(), circ), spec.token() + " not isomorphic to its circulant");
    }
  std::mt19937_64 rng(99);
  for (int t = 0; t < 50; ++t) {
    int n = 5 + static_cast<int>(rng() % 16);
    std::vector<int> s;
    for (int x = 1; x <= n / 2; ++x)
      if (rng() % 3 == 0) s.push_back(x);
    if (s.empty()) s.push_back(1 + static_cast<int>(rng() % (n / 2)));
    int p;
    do p = 1 + static_cast<int>(rng() % (n - 1));
    while (std::gcd(p, n) != 1);
    std::vector<int> ps;
    for (int x : s) ps.push_back(x * p);
    c.require(iso_checked(gen_circulant({n, s}), gen_circulant({n, normalize_offsets(n, ps)})),
              "unit transform not isomorphic at n=" + std::to_string(n));
  }
  double sec = seconds_since(t0);
  c.require(sec < 300.0, "isomorphism suite took " + std::to_string(sec) + " s");
}

std::string cli_value(const std::string& text, const std::string& key) {
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);)
    if (line.rfind(key + " ", 0) == 0) return line.substr(key.size() + 1);
  return "";
}

void criterion8(Check& c) {
  for (auto [token, faces] : {std::pair{"k7", "14"}, std::pair{"t11", "22"}, std::pair{"k6", "9"}}) {
    std::ostringstream out, err;
    int code = run_cli({"embed-info", token}, out, err);
    std::string o = out.str();
    c.require(code == 0, std::string(token) + ": embed-info exit " + std::to_string(code));
    int v = std::atoi(cli_value(o, "vertices").c_str());
    int e = std::atoi(cli_value(o, "edges").c_str());
    int f = std::atoi(cli_value(o, "faces").c_str());
    c.require(cli_value(o, "faces") == faces, std::string(token) + ": faces " + cli_value(o, "faces"));
    c.require(f == e - v, std::string(token) + ": faces != edges - vertices");
    c.require(cli_value(o, "genus") == "2", std::string(token) + ": genus " + cli_value(o, "genus"));
  }
}

void criterion9(Check& c) {
  std::ostringstream out, err;
  int code = run_cli({"table1"}, out, err);
  c.require(code == 0, "table1 exit " + std::to_string(code));
  std::istringstream in(out.str());
  int lines = 0;
  for (std::string line; std::getline(in, line);) {
    if (line.empty()) continue;
    ++lines;
    c.require(line.rfind("PASS ", 0) == 0, line);
  }
  c.require(lines > 0, "table1 printed nothing");
}

}  // namespace

int main() {
  auto corpus = toroidal_corpus(49);
  const std::vector<std::pair<std::string, std::function<void(Check&)>>> criteria{
      {"non-colorability facts", criterion1},
      {"colorability facts", criterion2},
      {"pattern suite", criterion3},
      {"pipeline suite", [&](Check& c) { criterion4(c, corpus); }},
      {"observation suite", [&](Check& c) { criterion5(c, corpus); }},
      {"oracle equivalence", criterion6},
      {"isomorphism suite", criterion7},
      {"Euler arithmetic", criterion8},
      {"table1 command", criterion9},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Check c;
    auto t0 = Clock::now();
    try {
      criteria[i].second(c);
    } catch (const std::exception& ex) {
      c.require(false, std::string("exception: ") + ex.what());
    }
    double s = seconds_since(t0);
    std::cout << (c.ok ? "PASS" : "FAIL") << " criterion " << i + 1 << ": " << criteria[i].first << " ("
              << s << " s)";
    if (!c.ok) std::cout << " - " << c.why.str();
    std::cout << '\n' << std::flush;
    failed += !c.ok;
  }
  return failed == 0 ? 0 : 1;
}

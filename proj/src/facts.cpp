#include "torcol/facts.hpp"

#include <chrono>

#include "torcol/constructions.hpp"
#include "torcol/generators.hpp"
#include "torcol/solver.hpp"

namespace torcol {

std::vector<CorpusEntry> toroidal_corpus(int max_order) {
  std::vector<CorpusEntry> out;
  for (int rows = 1; rows <= max_order; ++rows)
    for (int cols = 1; rows * cols <= max_order; ++cols)
      for (int shift = 1; shift <= rows; ++shift) {
        GridSpec spec{rows, cols, shift};
        if (spec.valid()) out.push_back({spec.token(), gen_grid(spec)});
      }
  out.push_back({"k7", *gen_named({NamedKind::K7}).rotation});
  out.push_back({"t11", *gen_named({NamedKind::T11}).rotation});
  return out;
}

namespace {

using Clock = std::chrono::steady_clock;

FactResult run_fact(const std::string& name, const std::function<std::string()>& body) {
  FactResult r{name, false, {}, 0.0};
  auto start = Clock::now();
  try {
    r.detail = body();
    r.pass = true;
  } catch (const std::exception& e) {
    r.detail = e.what();
  }
  r.seconds = std::chrono::duration<double>(Clock::now() - start).count();
  return r;
}

std::string expect_status(const Graph& g, const DefectVector& d, SolveStatus want) {
  auto result = solve(g, d);
  if (result.status != want)
    throw std::runtime_error(std::string("expected ") + to_string(want) + ", got " + to_string(result.status));
  return std::string(to_string(want)) + " nodes=" + std::to_string(result.stats.nodes);
}

std::string over_corpus(const std::vector<CorpusEntry>& corpus, int max_order,
                        const std::function<void(const CorpusEntry&)>& check) {
  int count = 0;
  for (const auto& entry : corpus) {
    if (entry.rot.order() > max_order) continue;
    try {
      check(entry);
    } catch (const std::exception& e) {
      throw std::runtime_error(entry.name + ": " + e.what());
    }
    ++count;
  }
  return "instances=" + std::to_string(count);
}

}  // namespace

std::vector<FactResult> table1_facts(const std::function<void(const FactResult&)>& progress) {
  const auto corpus = toroidal_corpus();
  const Graph k7 = gen_named({NamedKind::K7}).graph;
  std::vector<FactResult> out;
  auto add = [&](const std::string& name, const std::function<std::string()>& body) {
    out.push_back(run_fact(name, body));
    if (progress) progress(out.back());
  };

  add("k7:0,0,0,0,0,0,0:corpus-solve", [&] {
    return over_corpus(corpus, 1000, [](const CorpusEntry& e) {
      if (solve(e.rot.graph(), DefectVector::proper(7)).status != SolveStatus::Sat)
        throw std::runtime_error("no proper 7-coloring");
    });
  });
  add("k7:tight:K7-not-proper-6", [&] { return expect_status(k7, DefectVector::proper(6), SolveStatus::Unsat); });

  add("k6:0,0,0,0,0,1*:color_600001", [&] {
    return over_corpus(corpus, 1000, [](const CorpusEntry& e) { color_600001(e.rot); });
  });

  add("k5:0,0,0,0,2:color_00002", [&] {
    return over_corpus(corpus, 1000, [](const CorpusEntry& e) { color_00002(e.rot); });
  });
  add("k5:0,0,0,1*,1*:corpus-solve", [&] {
    const auto d = DefectVector::parse("0,0,0,1*,1*");
    return over_corpus(corpus, 1000, [&](const CorpusEntry& e) {
      auto result = solve(e.rot.graph(), d);
      if (result.status != SolveStatus::Sat) throw std::runtime_error(to_string(result.status));
      make_certificate(e.rot.graph(), *result.coloring, d, "solve");
    });
  });
  add("k5:tight:K7-not-0,0,0,0,1", [&] { return expect_status(k7, DefectVector{0, 0, 0, 0, 1}, SolveStatus::Unsat); });

  add("k4:0,0,0,4:color_0004", [&] {
    int attained = 0;
    auto detail = over_corpus(corpus, 1000, [&](const CorpusEntry& e) {
      auto cert = color_0004(e.rot);
      auto report = verify_coloring(e.rot.graph(), cert.coloring, cert.claimed);
      attained = std::max(attained, report.per_class[3].max_degree);
    });
    return detail + " max-defect=" + std::to_string(attained);
  });
  add("k4:0,1,2,2:color_0122", [&] {
    return over_corpus(corpus, 30, [](const CorpusEntry& e) { color_0122(e.rot.graph()); });
  });
  add("k4:tight:K7-not-0,0,0,2", [&] { return expect_status(k7, DefectVector{0, 0, 0, 2}, SolveStatus::Unsat); });

  add("k3:2,2,2:corpus-solve", [&] {
    return over_corpus(corpus, 30, [](const CorpusEntry& e) {
      if (solve(e.rot.graph(), DefectVector{2, 2, 2}).status != SolveStatus::Sat)
        throw std::runtime_error("no (2,2,2)-coloring");
    });
  });
  return out;
}

}  // namespace torcol

#include "torcol/solver.hpp"

#include <chrono>
#include <stdexcept>
#include <string>

namespace torcol {

const char* to_string(SolveStatus status) {
  switch (status) {
    case SolveStatus::Sat: return "SAT";
    case SolveStatus::Unsat: return "UNSAT";
    case SolveStatus::Indeterminate: return "INDETERMINATE";
  }
  return "?";
}

namespace {

using Clock = std::chrono::steady_clock;

double since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

class Search {
 public:
  Search(const Graph& g, const DefectVector& d, std::uint64_t budget)
      : g_(g), n_(g.order()), k_(d.classes()), budget_(budget) {
    bound_.resize(static_cast<std::size_t>(k_));
    star_.resize(static_cast<std::size_t>(k_));
    group_.resize(static_cast<std::size_t>(k_));
    for (int c = 0; c < k_; ++c) {
      bound_[c] = d[c].bound;
      star_[c] = d[c].star;
      group_[c] = c;
      for (int e = 0; e < c; ++e)
        if (d[e] == d[c]) {
          group_[c] = group_[e];
          break;
        }
    }
    color_.assign(static_cast<std::size_t>(n_), -1);
    count_.assign(static_cast<std::size_t>(n_) * k_, 0);
    mono_.assign(static_cast<std::size_t>(k_), 0);
    used_.assign(static_cast<std::size_t>(k_), 0);
  }

  void assign(int v, int c) {
    color_[v] = c;
    ++used_[c];
    for (int w : g_.neighbors(v)) {
      ++count_[w * k_ + c];
      if (color_[w] == c) ++mono_[c];
    }
  }

  void unassign(int v) {
    int c = color_[v];
    for (int w : g_.neighbors(v)) {
      --count_[w * k_ + c];
      if (color_[w] == c) --mono_[c];
    }
    --used_[c];
    color_[v] = -1;
  }

  SolveStatus run(int already_colored) {
    bool sat = descend(already_colored);
    if (sat) return SolveStatus::Sat;
    return aborted_ ? SolveStatus::Indeterminate : SolveStatus::Unsat;
  }

  Coloring coloring() const {
    Coloring out(std::vector<int>(static_cast<std::size_t>(n_)));
    for (int v = 0; v < n_; ++v) out[v] = color_[v] + 1;
    return out;
  }

  std::uint64_t nodes() const { return nodes_; }

 private:
  bool feasible(int v, int c) const {
    const int same = count_[v * k_ + c];
    if (same > bound_[c]) return false;
    if (star_[c] && mono_[c] + same > 1) return false;
    if (same > 0)
      for (int w : g_.neighbors(v))
        if (color_[w] == c && count_[w * k_ + c] + 1 > bound_[c]) return false;
    return true;
  }

  // Unused classes with identical (bound, star) are interchangeable; only the
  // lowest of them is offered.
  bool offered(int c) const {
    if (used_[c] > 0) return true;
    for (int e = 0; e < c; ++e)
      if (group_[e] == group_[c] && used_[e] == 0) return false;
    return true;
  }

  int options(int v, std::vector<int>* out) const {
    int count = 0;
    for (int c = 0; c < k_; ++c)
      if (offered(c) && feasible(v, c)) {
        ++count;
        if (out) out->push_back(c);
      }
    return count;
  }

  bool descend(int colored) {
    if (colored == n_) return true;
    if (budget_ && nodes_ >= budget_) {
      aborted_ = true;
      return false;
    }
    ++nodes_;

    int pick = -1;
    int pick_options = 0;
    for (int v = 0; v < n_; ++v) {
      if (color_[v] >= 0) continue;
      int opts = options(v, nullptr);
      if (opts == 0) return false;
      if (pick < 0 || opts < pick_options || (opts == pick_options && g_.degree(v) > g_.degree(pick))) {
        pick = v;
        pick_options = opts;
      }
    }

    std::vector<int> choices;
    options(pick, &choices);
    for (int c : choices) {
      assign(pick, c);
      if (descend(colored + 1)) return true;
      unassign(pick);
      if (aborted_) return false;
    }
    return false;
  }

  const Graph& g_;
  int n_;
  int k_;
  std::uint64_t budget_;
  std::vector<int> bound_;
  std::vector<char> star_;
  std::vector<int> group_;
  std::vector<int> color_;
  std::vector<int> count_;
  std::vector<int> mono_;
  std::vector<int> used_;
  std::uint64_t nodes_ = 0;
  bool aborted_ = false;
};

std::uint64_t effective_budget(const Graph& g, const SolveOptions& options) {
  if (options.node_budget) return *options.node_budget;
  return g.order() <= 30 ? 0 : SolveOptions::kDefaultNodeBudget;
}

}  // namespace

SolveResult solve(const Graph& g, const DefectVector& d, const SolveOptions& options) {
  return solve_with_precoloring(g, Precoloring(g.order()), d, options);
}

SolveResult solve_with_precoloring(const Graph& g, const Precoloring& pre, const DefectVector& d,
                                   const SolveOptions& options) {
  const auto start = Clock::now();
  const int n = g.order();
  if (static_cast<int>(pre.classes.size()) != n)
    throw std::invalid_argument("precoloring size does not match the graph");

  std::vector<int> fixed;
  for (int v = 0; v < n; ++v) {
    int c = pre.classes[v];
    if (c < 0 || c > d.classes())
      throw std::invalid_argument("precolored vertex " + std::to_string(v) + " has class " + std::to_string(c) +
                                  " outside 1.." + std::to_string(d.classes()));
    if (c > 0) fixed.push_back(v);
  }

  SolveResult result;
  if (!fixed.empty()) {
    auto sub = induced_subgraph(g, fixed);
    Coloring partial(std::vector<int>(fixed.size()));
    for (std::size_t i = 0; i < fixed.size(); ++i) partial[static_cast<int>(i)] = pre.classes[fixed[i]];
    auto report = verify_coloring(sub.graph, partial, d);
    if (!report.valid) {
      Violation w = *report.first_violation;
      if (w.vertex) w.vertex = sub.to_parent[*w.vertex];
      if (w.edge) w.edge = Edge(sub.to_parent[w.edge->u], sub.to_parent[w.edge->v]);
      w.message = "precoloring already violates the target: " + w.message;
      result.status = SolveStatus::Unsat;
      result.witness = std::move(w);
      result.stats.seconds = since(start);
      return result;
    }
  }

  Search search(g, d, effective_budget(g, options));
  for (int v : fixed) search.assign(v, pre.classes[v] - 1);
  result.status = search.run(static_cast<int>(fixed.size()));
  result.stats.nodes = search.nodes();
  if (result.status == SolveStatus::Sat) {
    result.coloring = search.coloring();
    if (!verify_coloring(g, *result.coloring, d).valid)
      throw std::logic_error("solver produced a coloring that fails verification");
  }
  result.stats.seconds = since(start);
  return result;
}

SolveResult enumerate_oracle(const Graph& g, const DefectVector& d, std::uint64_t bound) {
  const auto start = Clock::now();
  const int n = g.order();
  const int k = d.classes();
  std::uint64_t total = 1;
  for (int i = 0; i < n; ++i) {
    if (total > bound / static_cast<std::uint64_t>(k))
      throw std::invalid_argument("enumeration size " + std::to_string(k) + "^" + std::to_string(n) +
                                  " exceeds bound " + std::to_string(bound));
    total *= static_cast<std::uint64_t>(k);
  }

  const auto edges = g.edges();
  std::vector<int> assign(static_cast<std::size_t>(n), 0);
  std::vector<int> degree(static_cast<std::size_t>(n));
  std::vector<int> mono(static_cast<std::size_t>(k));
  SolveResult result;
  for (std::uint64_t step = 0; step < total; ++step) {
    ++result.stats.nodes;
    std::fill(degree.begin(), degree.end(), 0);
    std::fill(mono.begin(), mono.end(), 0);
    for (const Edge& e : edges)
      if (assign[e.u] == assign[e.v]) {
        ++degree[e.u];
        ++degree[e.v];
        ++mono[assign[e.u]];
      }
    bool ok = true;
    for (int v = 0; v < n && ok; ++v) ok = degree[v] <= d[assign[v]].bound;
    for (int c = 0; c < k && ok; ++c) ok = !d[c].star || mono[c] <= 1;
    if (ok) {
      Coloring c(std::vector<int>(static_cast<std::size_t>(n)));
      for (int v = 0; v < n; ++v) c[v] = assign[v] + 1;
      result.status = SolveStatus::Sat;
      result.coloring = std::move(c);
      result.stats.seconds = since(start);
      return result;
    }
    for (int v = 0; v < n; ++v) {
      if (++assign[v] < k) break;
      assign[v] = 0;
    }
  }
  result.status = SolveStatus::Unsat;
  result.stats.seconds = since(start);
  return result;
}

}  // namespace torcol

#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "torcol/coloring.hpp"
#include "torcol/graph.hpp"

namespace torcol {

enum class SolveStatus { Sat, Unsat, Indeterminate };

const char* to_string(SolveStatus status);

struct SolveStats {
  std::uint64_t nodes = 0;
  double seconds = 0.0;
};

struct SolveResult {
  SolveStatus status = SolveStatus::Indeterminate;
  std::optional<Coloring> coloring;  // set iff Sat
  SolveStats stats;
  /// Set when a precoloring already violates the target.
  std::optional<Violation> witness;
};

/// Partial assignment vertex -> class (1-based); 0 means free.
struct Precoloring {
  std::vector<int> classes;

  Precoloring() = default;
  explicit Precoloring(int n) : classes(static_cast<std::size_t>(n), 0) {}
  void set(int v, int cls) { classes[v] = cls; }
};

struct SolveOptions {
  /// Search nodes before giving up with Indeterminate. nullopt picks the
  /// default: unlimited up to 30 vertices, kDefaultNodeBudget above.
  std::optional<std::uint64_t> node_budget;

  static constexpr std::uint64_t kDefaultNodeBudget = 200'000'000;
};

/// Exact backtracking for (d_1,...,d_k)-colorability with starred classes.
/// Sat results always pass verify_coloring; Unsat is a complete refutation.
SolveResult solve(const Graph& g, const DefectVector& d, const SolveOptions& options = {});

/// As solve, but precolored vertices keep their class. An inconsistent
/// precoloring returns Unsat immediately with the violation as witness.
SolveResult solve_with_precoloring(const Graph& g, const Precoloring& pre, const DefectVector& d,
                                   const SolveOptions& options = {});

/// Exhaustive enumeration of all k^n assignments. Throws std::invalid_argument
/// when k^n exceeds `bound`; never samples.
SolveResult enumerate_oracle(const Graph& g, const DefectVector& d, std::uint64_t bound = 100'000'000);

}  // namespace torcol

#pragma once

#include <span>
#include <vector>

#include "torcol/embedding.hpp"
#include "torcol/graph.hpp"
#include "torcol/homology.hpp"

namespace torcol {

/// Result of cutting a torus embedding along a non-contractible cycle and
/// contracting each copy of the cycle to a single vertex.
struct CutResult {
  Graph graph;
  int u = 0;  // contracted copy on the side holding the smaller neighbor list
  int v = 0;
  /// Vertex of the original graph for each vertex of `graph` (-1 for u and v).
  std::vector<int> to_original;
  /// Vertex of `graph` for each original vertex (-1 for cycle vertices).
  std::vector<int> from_original;
};

/// Non-cycle vertices keep their relative order and come first; u and v are
/// the last two vertices. At each cycle vertex the darts strictly between the
/// forward and backward cycle darts (counterclockwise) go to the left copy,
/// the rest to the right copy. Throws std::invalid_argument when the cycle is
/// contractible or the embedding is not on the torus.
CutResult cut_and_contract(const RotationSystem& rot, const CycleCert& cycle);

/// Breadth-first shortest path from u to v, exploring neighbors in ascending
/// order. Throws std::invalid_argument when v is unreachable or u == v.
std::vector<int> shortest_path(const Graph& g, int u, int v);

struct ContractResult {
  Graph graph;
  int merged = 0;
  /// New index of each original vertex (path vertices all map to `merged`).
  std::vector<int> from_original;
};

/// Merges all vertices of the path into one vertex placed last; loops vanish
/// and parallel edges collapse. Throws std::invalid_argument if `path` is not
/// a path of g.
ContractResult contract_path(const Graph& g, std::span<const int> path);

/// Sound and complete planarity test.
bool planarity_check(const Graph& g);

}  // namespace torcol

#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "torcol/graph.hpp"

namespace torcol {

/// Witness mapping: vertex v of the first graph maps to map[v] in the second.
using Isomorphism = std::vector<int>;

/// True when `map` is a bijection preserving adjacency and non-adjacency.
bool is_isomorphism(const Graph& g1, const Graph& g2, std::span<const int> map);

/// Colour refinement on the disjoint union followed by individualization
/// backtracking. Meant for graphs up to a few dozen vertices; larger inputs
/// work but may take exponential time on highly symmetric non-isomorphic pairs.
/// Every returned witness has passed is_isomorphism.
std::optional<Isomorphism> find_isomorphism(const Graph& g1, const Graph& g2);

inline bool are_isomorphic(const Graph& g1, const Graph& g2) {
  return find_isomorphism(g1, g2).has_value();
}

}  // namespace torcol

#pragma once

#include <compare>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace torcol {

/// Undirected edge with normalized endpoints (u < v).
struct Edge {
  int u = 0;
  int v = 0;

  Edge() = default;
  Edge(int a, int b) : u(a < b ? a : b), v(a < b ? b : a) {}

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Simple undirected graph on vertices 0..n-1.
///
/// Adjacency lists are kept sorted and duplicate-free, so membership tests are
/// binary searches and iteration order is always ascending. Instances are
/// immutable once built; every structural operation returns a new graph.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n) : adj_(n) {}

  /// Builds from an edge list. Duplicates collapse; loops and out-of-range
  /// endpoints throw std::invalid_argument naming the offending pair.
  Graph(int n, std::span<const std::pair<int, int>> edges);
  Graph(int n, std::span<const Edge> edges);

  int order() const { return static_cast<int>(adj_.size()); }
  int size() const { return edge_count_; }

  std::span<const int> neighbors(int v) const { return adj_[v]; }
  int degree(int v) const { return static_cast<int>(adj_[v].size()); }
  bool has_edge(int u, int v) const;

  int max_degree() const;
  int min_degree() const;

  /// All edges in lexicographic order.
  std::vector<Edge> edges() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  void add_edges(std::span<const Edge> edges);

  std::vector<std::vector<int>> adj_;
  int edge_count_ = 0;
};

Graph build_graph(int n, std::span<const std::pair<int, int>> edges);

Graph complete_graph(int n);
Graph cycle_graph(int n);
Graph path_graph(int n);

/// Disjoint union of g1 and g2 (g2 shifted by g1.order()) plus every cross edge.
Graph join(const Graph& g1, const Graph& g2);

struct InducedSubgraph {
  Graph graph;
  /// to_parent[i] is the vertex of the parent graph that became vertex i.
  std::vector<int> to_parent;
};

/// Subgraph induced on `vertices`; vertices keep ascending order.
InducedSubgraph induced_subgraph(const Graph& g, std::span<const int> vertices);

/// Length of a shortest cycle, or nullopt for forests.
std::optional<int> girth(const Graph& g);

struct Degeneracy {
  int value = 0;
  /// Maximal induced subgraph with minimum degree at least 6 (empty when value < 6).
  std::vector<int> core;
};

Degeneracy degeneracy(const Graph& g);

/// Vertices reachable from each vertex, labelled by component index.
std::vector<int> components(const Graph& g, int* count = nullptr);
bool is_connected(const Graph& g);

/// Applies the relabelling v -> perm[v].
Graph relabel(const Graph& g, std::span<const int> perm);

}  // namespace torcol

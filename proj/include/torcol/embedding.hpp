#pragma once

#include <map>
#include <span>
#include <vector>

#include "torcol/graph.hpp"

namespace torcol {

/// Directed half of an edge.
struct Dart {
  int tail = 0;
  int head = 0;

  friend bool operator==(const Dart&, const Dart&) = default;
};

/// Orientable embedding given by the cyclic (counterclockwise) order of
/// neighbors around every vertex.
///
/// Darts are numbered contiguously per vertex in rotation order, so the
/// successor of a dart around its tail is a constant-time lookup. Each edge
/// owns exactly two darts, paired by reverse().
class RotationSystem {
 public:
  RotationSystem() = default;

  /// Validates that rotation[v] is a permutation of g.neighbors(v).
  /// Throws std::invalid_argument on a missing or duplicated dart.
  RotationSystem(Graph g, std::vector<std::vector<int>> rotation);

  /// Derives the graph from the rotation lists; each edge must be listed
  /// at both of its endpoints.
  static RotationSystem from_rotation(std::vector<std::vector<int>> rotation);

  const Graph& graph() const { return graph_; }
  int order() const { return graph_.order(); }
  std::span<const int> rotation(int v) const { return rotation_[v]; }
  const std::vector<std::vector<int>>& rotations() const { return rotation_; }

  int dart_count() const { return static_cast<int>(dart_.size()); }
  Dart dart(int id) const { return dart_[id]; }
  /// Dart id of tail->head, or -1 when the edge is absent.
  int dart_id(int tail, int head) const;
  /// Next dart counterclockwise around the same tail.
  int next_around(int id) const;
  int reverse(int id) const { return reverse_[id]; }
  /// Index of the dart's edge in graph().edges().
  int edge_of(int id) const { return edge_[id]; }

  friend bool operator==(const RotationSystem& a, const RotationSystem& b) {
    return a.graph_ == b.graph_ && a.rotation_ == b.rotation_;
  }

 private:
  Graph graph_;
  std::vector<std::vector<int>> rotation_;
  std::vector<int> offset_;        // first dart id of each vertex
  std::vector<int> by_neighbor_;   // dart id indexed like the sorted adjacency
  std::vector<Dart> dart_;
  std::vector<int> reverse_;
  std::vector<int> edge_;
};

/// Boundary walk of one face: darts in traversal order.
struct Face {
  std::vector<int> darts;
  std::vector<int> vertices;  // tail of each dart
  int degree() const { return static_cast<int>(darts.size()); }
};

/// Face tracing: after dart u->v comes the successor of v->u around v.
/// Every dart lands in exactly one face.
std::vector<Face> trace_faces(const RotationSystem& rot);

/// 2 - (|V| - |E| + |F|) for a connected embedding.
int euler_genus(const RotationSystem& rot);
int euler_genus(const RotationSystem& rot, const std::vector<Face>& faces);

/// Face degree -> number of faces.
std::map<int, int> face_degree_histogram(const std::vector<Face>& faces);

/// Removes v and its darts; the faces around v merge into one.
RotationSystem delete_vertex(const RotationSystem& rot, int v);

}  // namespace torcol

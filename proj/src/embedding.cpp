#include "torcol/embedding.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace torcol {

RotationSystem::RotationSystem(Graph g, std::vector<std::vector<int>> rotation)
    : graph_(std::move(g)), rotation_(std::move(rotation)) {
  const int n = graph_.order();
  if (static_cast<int>(rotation_.size()) != n)
    throw std::invalid_argument("rotation lists " + std::to_string(rotation_.size()) + " vertices, graph has " +
                                std::to_string(n));
  offset_.assign(static_cast<std::size_t>(n) + 1, 0);
  for (int v = 0; v < n; ++v) {
    std::vector<int> sorted = rotation_[v];
    std::sort(sorted.begin(), sorted.end());
    auto expect = graph_.neighbors(v);
    if (!std::equal(sorted.begin(), sorted.end(), expect.begin(), expect.end())) {
      for (std::size_t i = 1; i < sorted.size(); ++i)
        if (sorted[i] == sorted[i - 1])
          throw std::invalid_argument("duplicate dart " + std::to_string(v) + "->" + std::to_string(sorted[i]));
      throw std::invalid_argument("rotation at vertex " + std::to_string(v) + " does not match its neighbors");
    }
    offset_[v + 1] = offset_[v] + static_cast<int>(sorted.size());
  }

  const int darts = offset_[n];
  dart_.resize(static_cast<std::size_t>(darts));
  by_neighbor_.resize(static_cast<std::size_t>(darts));
  for (int v = 0; v < n; ++v) {
    auto adj = graph_.neighbors(v);
    for (int p = 0; p < static_cast<int>(rotation_[v].size()); ++p) {
      int w = rotation_[v][p];
      int id = offset_[v] + p;
      dart_[id] = {v, w};
      auto idx = std::lower_bound(adj.begin(), adj.end(), w) - adj.begin();
      by_neighbor_[offset_[v] + static_cast<int>(idx)] = id;
    }
  }
  reverse_.resize(static_cast<std::size_t>(darts));
  edge_.resize(static_cast<std::size_t>(darts));
  for (int id = 0; id < darts; ++id) reverse_[id] = dart_id(dart_[id].head, dart_[id].tail);
  int next_edge = 0;
  for (int u = 0; u < n; ++u)
    for (int w : graph_.neighbors(u))
      if (u < w) {
        edge_[dart_id(u, w)] = next_edge;
        edge_[dart_id(w, u)] = next_edge;
        ++next_edge;
      }
}

RotationSystem RotationSystem::from_rotation(std::vector<std::vector<int>> rotation) {
  const int n = static_cast<int>(rotation.size());
  std::vector<Edge> edges;
  for (int v = 0; v < n; ++v)
    for (int w : rotation[v]) {
      if (w < 0 || w >= n)
        throw std::invalid_argument("rotation neighbor out of range at vertex " + std::to_string(v));
      if (w == v) throw std::invalid_argument("self-loop in rotation at vertex " + std::to_string(v));
      edges.emplace_back(v, w);
    }
  Graph g(n, edges);
  for (int v = 0; v < n; ++v)
    for (int w : rotation[v])
      if (std::find(rotation[w].begin(), rotation[w].end(), v) == rotation[w].end())
        throw std::invalid_argument("dart " + std::to_string(v) + "->" + std::to_string(w) +
                                    " has no reverse dart");
  return RotationSystem(std::move(g), std::move(rotation));
}

int RotationSystem::dart_id(int tail, int head) const {
  if (tail < 0 || tail >= order()) return -1;
  auto adj = graph_.neighbors(tail);
  auto it = std::lower_bound(adj.begin(), adj.end(), head);
  if (it == adj.end() || *it != head) return -1;
  return by_neighbor_[offset_[tail] + static_cast<int>(it - adj.begin())];
}

int RotationSystem::next_around(int id) const {
  int v = dart_[id].tail;
  int next = id + 1;
  return next == offset_[v + 1] ? offset_[v] : next;
}

std::vector<Face> trace_faces(const RotationSystem& rot) {
  std::vector<char> seen(static_cast<std::size_t>(rot.dart_count()), 0);
  std::vector<Face> faces;
  for (int start = 0; start < rot.dart_count(); ++start) {
    if (seen[start]) continue;
    Face face;
    int d = start;
    do {
      seen[d] = 1;
      face.darts.push_back(d);
      face.vertices.push_back(rot.dart(d).tail);
      d = rot.next_around(rot.reverse(d));
    } while (d != start);
    faces.push_back(std::move(face));
  }
  return faces;
}

int euler_genus(const RotationSystem& rot, const std::vector<Face>& faces) {
  const int v = rot.order();
  const int e = rot.graph().size();
  // An edgeless single vertex is the sphere with one face.
  const int f = e == 0 ? v : static_cast<int>(faces.size());
  return 2 - (v - e + f);
}

int euler_genus(const RotationSystem& rot) { return euler_genus(rot, trace_faces(rot)); }

std::map<int, int> face_degree_histogram(const std::vector<Face>& faces) {
  std::map<int, int> hist;
  for (const auto& f : faces) ++hist[f.degree()];
  return hist;
}

RotationSystem delete_vertex(const RotationSystem& rot, int v) {
  const int n = rot.order();
  if (v < 0 || v >= n) throw std::invalid_argument("delete_vertex: vertex out of range");
  auto shift = [v](int x) { return x > v ? x - 1 : x; };
  std::vector<std::vector<int>> rotation;
  for (int x = 0; x < n; ++x) {
    if (x == v) continue;
    std::vector<int> list;
    for (int y : rot.rotation(x))
      if (y != v) list.push_back(shift(y));
    rotation.push_back(std::move(list));
  }
  return RotationSystem::from_rotation(std::move(rotation));
}

}  // namespace torcol

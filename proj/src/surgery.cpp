#include "torcol/surgery.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>
#include <string>

namespace torcol {

CutResult cut_and_contract(const RotationSystem& rot, const CycleCert& cycle) {
  if (is_contractible(rot, cycle)) throw std::invalid_argument("cut_and_contract needs a non-contractible cycle");
  const Graph& g = rot.graph();
  const int n = g.order();
  const int l = cycle.length();

  std::vector<char> on_cycle(static_cast<std::size_t>(n), 0);
  for (int c : cycle.vertices) on_cycle[c] = 1;

  CutResult out;
  out.from_original.assign(static_cast<std::size_t>(n), -1);
  for (int x = 0; x < n; ++x)
    if (!on_cycle[x]) {
      out.from_original[x] = static_cast<int>(out.to_original.size());
      out.to_original.push_back(x);
    }
  const int base = static_cast<int>(out.to_original.size());

  // side[x]: 1 if x has a dart from the left copy, 2 from the right, 3 both.
  std::vector<int> left, right;
  std::vector<std::pair<int, int>> chords;  // (side at tail, side at head) for cycle-to-cycle edges
  std::vector<int> side_of_dart(static_cast<std::size_t>(rot.dart_count()), 0);
  for (int i = 0; i < l; ++i) {
    int c = cycle.vertices[i];
    int prev = cycle.vertices[(i + l - 1) % l];
    int next = cycle.vertices[(i + 1) % l];
    int forward = rot.dart_id(c, next);
    int backward = rot.dart_id(c, prev);
    int d = rot.next_around(forward);
    int side = 1;
    while (d != forward) {
      if (d == backward) {
        side = 2;
      } else {
        side_of_dart[d] = side;
        int w = rot.dart(d).head;
        if (!on_cycle[w]) (side == 1 ? left : right).push_back(w);
      }
      d = rot.next_around(d);
    }
  }
  for (int d = 0; d < rot.dart_count(); ++d) {
    Dart dt = rot.dart(d);
    if (dt.tail < dt.head && on_cycle[dt.tail] && on_cycle[dt.head] && side_of_dart[d] != 0)
      chords.emplace_back(side_of_dart[d], side_of_dart[rot.reverse(d)]);
  }

  std::sort(left.begin(), left.end());
  left.erase(std::unique(left.begin(), left.end()), left.end());
  std::sort(right.begin(), right.end());
  right.erase(std::unique(right.begin(), right.end()), right.end());
  const bool left_is_u = !(right < left);
  out.u = base;
  out.v = base + 1;
  const int left_vertex = left_is_u ? out.u : out.v;
  const int right_vertex = left_is_u ? out.v : out.u;

  std::vector<Edge> edges;
  for (const Edge& e : g.edges())
    if (!on_cycle[e.u] && !on_cycle[e.v]) edges.emplace_back(out.from_original[e.u], out.from_original[e.v]);
  for (int w : left) edges.emplace_back(out.from_original[w], left_vertex);
  for (int w : right) edges.emplace_back(out.from_original[w], right_vertex);
  for (auto [a, b] : chords)
    if (a != b) edges.emplace_back(left_vertex, right_vertex);

  out.graph = Graph(base + 2, edges);
  out.to_original.push_back(-1);
  out.to_original.push_back(-1);
  return out;
}

std::vector<int> shortest_path(const Graph& g, int u, int v) {
  const int n = g.order();
  if (u < 0 || u >= n || v < 0 || v >= n) throw std::invalid_argument("shortest_path: vertex out of range");
  if (u == v) throw std::invalid_argument("shortest_path: endpoints coincide");
  std::vector<int> parent(static_cast<std::size_t>(n), -2);
  parent[u] = -1;
  std::deque<int> queue{u};
  while (!queue.empty() && parent[v] == -2) {
    int x = queue.front();
    queue.pop_front();
    for (int y : g.neighbors(x))
      if (parent[y] == -2) {
        parent[y] = x;
        queue.push_back(y);
      }
  }
  if (parent[v] == -2)
    throw std::invalid_argument("shortest_path: " + std::to_string(v) + " unreachable from " + std::to_string(u));
  std::vector<int> path;
  for (int x = v; x != -1; x = parent[x]) path.push_back(x);
  std::reverse(path.begin(), path.end());
  return path;
}

ContractResult contract_path(const Graph& g, std::span<const int> path) {
  const int n = g.order();
  if (path.empty()) throw std::invalid_argument("contract_path: empty path");
  std::vector<char> in_path(static_cast<std::size_t>(n), 0);
  for (std::size_t i = 0; i < path.size(); ++i) {
    int x = path[i];
    if (x < 0 || x >= n) throw std::invalid_argument("contract_path: vertex out of range");
    if (in_path[x]) throw std::invalid_argument("contract_path: vertex " + std::to_string(x) + " repeats");
    in_path[x] = 1;
    if (i > 0 && !g.has_edge(path[i - 1], x))
      throw std::invalid_argument("contract_path: " + std::to_string(path[i - 1]) + "-" + std::to_string(x) +
                                  " is not an edge");
  }
  ContractResult out;
  out.from_original.assign(static_cast<std::size_t>(n), -1);
  int next = 0;
  for (int x = 0; x < n; ++x)
    if (!in_path[x]) out.from_original[x] = next++;
  out.merged = next;
  for (int x : path) out.from_original[x] = out.merged;
  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) {
    int a = out.from_original[e.u];
    int b = out.from_original[e.v];
    if (a != b) edges.emplace_back(a, b);
  }
  out.graph = Graph(next + 1, edges);
  return out;
}

}  // namespace torcol

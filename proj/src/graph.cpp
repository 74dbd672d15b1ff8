#include "torcol/graph.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <stdexcept>
#include <string>

namespace torcol {

namespace {

std::string pair_text(int u, int v) {
  return "(" + std::to_string(u) + "," + std::to_string(v) + ")";
}

}  // namespace

Graph::Graph(int n, std::span<const std::pair<int, int>> edges) : Graph(n) {
  std::vector<Edge> list;
  list.reserve(edges.size());
  for (auto [a, b] : edges) {
    if (a < 0 || b < 0 || a >= n || b >= n)
      throw std::invalid_argument("edge endpoint out of range: " + pair_text(a, b));
    if (a == b) throw std::invalid_argument("self-loop: " + pair_text(a, b));
    list.emplace_back(a, b);
  }
  add_edges(list);
}

Graph::Graph(int n, std::span<const Edge> edges) : Graph(n) {
  for (const Edge& e : edges) {
    if (e.u < 0 || e.v >= n)
      throw std::invalid_argument("edge endpoint out of range: " + pair_text(e.u, e.v));
    if (e.u == e.v) throw std::invalid_argument("self-loop: " + pair_text(e.u, e.v));
  }
  add_edges(edges);
}

void Graph::add_edges(std::span<const Edge> edges) {
  for (const Edge& e : edges) {
    adj_[e.u].push_back(e.v);
    adj_[e.v].push_back(e.u);
  }
  long twice = 0;
  for (auto& list : adj_) {
    std::sort(list.begin(), list.end());
    list.erase(std::unique(list.begin(), list.end()), list.end());
    twice += static_cast<long>(list.size());
  }
  edge_count_ = static_cast<int>(twice / 2);
}

bool Graph::has_edge(int u, int v) const {
  if (u < 0 || u >= order()) return false;
  const auto& list = adj_[u];
  return std::binary_search(list.begin(), list.end(), v);
}

int Graph::max_degree() const {
  int best = 0;
  for (int v = 0; v < order(); ++v) best = std::max(best, degree(v));
  return best;
}

int Graph::min_degree() const {
  if (order() == 0) return 0;
  int best = std::numeric_limits<int>::max();
  for (int v = 0; v < order(); ++v) best = std::min(best, degree(v));
  return best;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(static_cast<std::size_t>(edge_count_));
  for (int u = 0; u < order(); ++u)
    for (int v : neighbors(u))
      if (u < v) out.emplace_back(u, v);
  return out;
}

Graph build_graph(int n, std::span<const std::pair<int, int>> edges) {
  if (n < 0) throw std::invalid_argument("negative vertex count");
  return Graph(n, edges);
}

Graph complete_graph(int n) {
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  return Graph(n, edges);
}

Graph cycle_graph(int n) {
  if (n < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
  std::vector<Edge> edges;
  for (int v = 0; v < n; ++v) edges.emplace_back(v, (v + 1) % n);
  return Graph(n, edges);
}

Graph path_graph(int n) {
  std::vector<Edge> edges;
  for (int v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
  return Graph(n, edges);
}

Graph join(const Graph& g1, const Graph& g2) {
  const int n1 = g1.order();
  const int n2 = g2.order();
  std::vector<Edge> edges = g1.edges();
  for (const Edge& e : g2.edges()) edges.emplace_back(e.u + n1, e.v + n1);
  for (int a = 0; a < n1; ++a)
    for (int b = 0; b < n2; ++b) edges.emplace_back(a, n1 + b);
  return Graph(n1 + n2, edges);
}

InducedSubgraph induced_subgraph(const Graph& g, std::span<const int> vertices) {
  std::vector<int> keep(vertices.begin(), vertices.end());
  std::sort(keep.begin(), keep.end());
  keep.erase(std::unique(keep.begin(), keep.end()), keep.end());
  std::vector<int> index(static_cast<std::size_t>(g.order()), -1);
  for (std::size_t i = 0; i < keep.size(); ++i) {
    int v = keep[i];
    if (v < 0 || v >= g.order())
      throw std::invalid_argument("vertex out of range: " + std::to_string(v));
    index[v] = static_cast<int>(i);
  }
  std::vector<Edge> edges;
  for (int v : keep)
    for (int w : g.neighbors(v))
      if (v < w && index[w] >= 0)
        edges.emplace_back(index[v], index[w]);
  return {Graph(static_cast<int>(keep.size()), edges), keep};
}

std::optional<int> girth(const Graph& g) {
  const int n = g.order();
  int best = std::numeric_limits<int>::max();
  std::vector<int> dist(static_cast<std::size_t>(n));
  std::vector<int> parent(static_cast<std::size_t>(n));
  for (int root = 0; root < n; ++root) {
    std::fill(dist.begin(), dist.end(), -1);
    dist[root] = 0;
    parent[root] = -1;
    std::deque<int> queue{root};
    while (!queue.empty()) {
      int x = queue.front();
      queue.pop_front();
      int dx = dist[x];
      if (2 * dx + 1 >= best) break;
      for (int y : g.neighbors(x)) {
        auto& dy = dist[y];
        if (dy < 0) {
          dy = dx + 1;
          parent[y] = x;
          queue.push_back(y);
        } else if (parent[x] != y) {
          best = std::min(best, dx + dy + 1);
        }
      }
    }
  }
  if (best == std::numeric_limits<int>::max()) return std::nullopt;
  return best;
}

Degeneracy degeneracy(const Graph& g) {
  const int n = g.order();
  std::vector<int> deg(static_cast<std::size_t>(n));
  std::vector<char> removed(static_cast<std::size_t>(n), 0);
  for (int v = 0; v < n; ++v) deg[v] = g.degree(v);

  Degeneracy result;
  for (int step = 0; step < n; ++step) {
    int pick = -1;
    for (int v = 0; v < n; ++v) {
      if (removed[v]) continue;
      if (pick < 0 || deg[v] < deg[pick]) pick = v;
    }
    result.value = std::max(result.value, deg[pick]);
    removed[pick] = 1;
    for (int w : g.neighbors(pick))
      if (!removed[w]) --deg[w];
  }

  if (result.value >= 6) {
    // 6-core: strip vertices of degree < 6 until none remain.
    std::fill(removed.begin(), removed.end(), 0);
    for (int v = 0; v < n; ++v) deg[v] = g.degree(v);
    std::deque<int> queue;
    for (int v = 0; v < n; ++v)
      if (deg[v] < 6) {
        removed[v] = 1;
        queue.push_back(v);
      }
    while (!queue.empty()) {
      int v = queue.front();
      queue.pop_front();
      for (int w : g.neighbors(v)) {
        if (removed[w]) continue;
        if (--deg[w] < 6) {
          removed[w] = 1;
          queue.push_back(w);
        }
      }
    }
    for (int v = 0; v < n; ++v)
      if (!removed[v]) result.core.push_back(v);
  }
  return result;
}

std::vector<int> components(const Graph& g, int* count) {
  std::vector<int> label(static_cast<std::size_t>(g.order()), -1);
  int next = 0;
  for (int s = 0; s < g.order(); ++s) {
    if (label[s] >= 0) continue;
    label[s] = next;
    std::vector<int> stack{s};
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      for (int y : g.neighbors(x))
        if (label[y] < 0) {
          label[y] = next;
          stack.push_back(y);
        }
    }
    ++next;
  }
  if (count) *count = next;
  return label;
}

bool is_connected(const Graph& g) {
  int count = 0;
  components(g, &count);
  return count <= 1;
}

Graph relabel(const Graph& g, std::span<const int> perm) {
  if (static_cast<int>(perm.size()) != g.order())
    throw std::invalid_argument("relabel: permutation size mismatch");
  std::vector<Edge> edges;
  for (const Edge& e : g.edges())
    edges.emplace_back(perm[e.u], perm[e.v]);
  return Graph(g.order(), edges);
}

}  // namespace torcol

#include "torcol/homology.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <stdexcept>

namespace torcol {

std::string HomologySignature::to_string() const {
  std::string out;
  for (int i = 0; i < length_; ++i) out += bit(i) ? '1' : '0';
  return out;
}

HomologySignature EdgeSignatures::of_walk(const RotationSystem& rot, std::span<const int> closed_walk) const {
  HomologySignature sum(genus);
  const std::size_t l = closed_walk.size();
  for (std::size_t i = 0; i < l; ++i) {
    int d = rot.dart_id(closed_walk[i], closed_walk[(i + 1) % l]);
    if (d < 0)
      throw std::invalid_argument("walk uses a non-edge " + std::to_string(closed_walk[i]) + "-" +
                                  std::to_string(closed_walk[(i + 1) % l]));
    sum ^= per_edge[rot.edge_of(d)];
  }
  return sum;
}

EdgeSignatures edge_signatures(const RotationSystem& rot) {
  const Graph& g = rot.graph();
  if (!is_connected(g)) throw std::invalid_argument("edge_signatures needs a connected graph");
  const auto faces = trace_faces(rot);
  EdgeSignatures out;
  out.genus = euler_genus(rot, faces);
  if (out.genus > 64) throw std::invalid_argument("Euler genus above 64 is not supported");

  const int m = g.size();
  std::vector<int> face_of(static_cast<std::size_t>(rot.dart_count()));
  for (int f = 0; f < static_cast<int>(faces.size()); ++f)
    for (int d : faces[f].darts) face_of[d] = f;

  // 0 unassigned, 1 tree, 2 cotree, 3 leftover
  std::vector<int> kind(static_cast<std::size_t>(m), 0);
  if (g.order() > 0) {
    std::vector<char> seen(static_cast<std::size_t>(g.order()), 0);
    std::deque<int> queue{0};
    seen[0] = 1;
    while (!queue.empty()) {
      int x = queue.front();
      queue.pop_front();
      for (int y : g.neighbors(x))
        if (!seen[y]) {
          seen[y] = 1;
          kind[rot.edge_of(rot.dart_id(x, y))] = 1;
          queue.push_back(y);
        }
    }
  }

  const int nf = static_cast<int>(faces.size());
  std::vector<int> parent_edge(static_cast<std::size_t>(nf), -1);
  std::vector<int> order;
  if (nf > 0) {
    std::vector<char> seen(static_cast<std::size_t>(nf), 0);
    std::deque<int> queue{0};
    seen[0] = 1;
    while (!queue.empty()) {
      int f = queue.front();
      queue.pop_front();
      order.push_back(f);
      for (int d : faces[f].darts) {
        int e = rot.edge_of(d);
        if (kind[e] != 0) continue;
        int h = face_of[rot.reverse(d)];
        if (seen[h]) continue;
        seen[h] = 1;
        kind[e] = 2;
        parent_edge[h] = e;
        queue.push_back(h);
      }
    }
  }

  out.per_edge.assign(static_cast<std::size_t>(m), HomologySignature(out.genus));
  for (int e = 0; e < m; ++e) {
    if (kind[e] == 0) {
      kind[e] = 3;
      out.leftover_edges.push_back(e);
    } else if (kind[e] == 1) {
      out.tree_edges.push_back(e);
    } else {
      out.cotree_edges.push_back(e);
    }
  }
  if (static_cast<int>(out.leftover_edges.size()) != out.genus)
    throw std::logic_error("tree-cotree leftover count differs from Euler genus");
  for (int i = 0; i < out.genus; ++i)
    out.per_edge[out.leftover_edges[i]] = HomologySignature(out.genus, std::uint64_t{1} << i);

  // Leaves of the dual tree first: each face fixes its parent cotree edge.
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    int f = *it;
    int pe = parent_edge[f];
    if (pe < 0) continue;
    HomologySignature sum(out.genus);
    for (int d : faces[f].darts) {
      int e = rot.edge_of(d);
      if (e != pe) sum ^= out.per_edge[e];
    }
    out.per_edge[pe] = sum;
  }
  return out;
}

CycleCert make_cycle_cert(const RotationSystem& rot, const EdgeSignatures& sig, std::vector<int> vertices) {
  const int l = static_cast<int>(vertices.size());
  if (l < 3) throw std::invalid_argument("a cycle needs at least 3 vertices");
  std::vector<int> sorted = vertices;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw std::invalid_argument("cycle repeats a vertex");
  for (int v : vertices)
    if (v < 0 || v >= rot.order()) throw std::invalid_argument("cycle vertex out of range");
  CycleCert cert;
  cert.signature = sig.of_walk(rot, vertices);
  cert.vertices = std::move(vertices);
  return cert;
}

bool is_contractible(const RotationSystem& rot, const CycleCert& cycle) {
  auto sig = edge_signatures(rot);
  if (sig.genus != 2)
    throw std::invalid_argument("contractibility is only decided on the torus (Euler genus 2), got " +
                                std::to_string(sig.genus));
  return make_cycle_cert(rot, sig, cycle.vertices).signature.is_zero();
}

std::vector<int> canonical_cycle(std::vector<int> cycle) {
  if (cycle.empty()) return cycle;
  auto low = std::min_element(cycle.begin(), cycle.end());
  std::rotate(cycle.begin(), low, cycle.end());
  if (cycle.size() > 2 && cycle[1] > cycle.back()) std::reverse(cycle.begin() + 1, cycle.end());
  return cycle;
}

CycleCert shortest_noncontractible_cycle(const RotationSystem& rot) {
  const auto sig = edge_signatures(rot);
  if (sig.genus != 2)
    throw std::invalid_argument("shortest non-contractible cycle needs Euler genus 2, got " +
                                std::to_string(sig.genus));
  const Graph& g = rot.graph();
  const int n = g.order();

  int best_len = std::numeric_limits<int>::max();
  std::vector<int> best;
  std::vector<int> dist(static_cast<std::size_t>(n));
  std::vector<int> parent(static_cast<std::size_t>(n));
  std::vector<HomologySignature> path_sig(static_cast<std::size_t>(n));
  auto edge_sig = [&](int a, int b) -> const HomologySignature& {
    return sig.per_edge[rot.edge_of(rot.dart_id(a, b))];
  };

  for (int root = 0; root < n; ++root) {
    std::fill(dist.begin(), dist.end(), -1);
    std::vector<int> visit;
    dist[root] = 0;
    parent[root] = -1;
    path_sig[root] = HomologySignature(sig.genus);
    std::deque<int> queue{root};
    while (!queue.empty()) {
      int x = queue.front();
      queue.pop_front();
      if (2 * dist[x] + 1 > best_len) break;
      visit.push_back(x);
      for (int y : g.neighbors(x))
        if (dist[y] < 0) {
          dist[y] = dist[x] + 1;
          parent[y] = x;
          path_sig[y] = path_sig[x] ^ edge_sig(x, y);
          queue.push_back(y);
        }
    }

    for (int a : visit)
      for (int b : g.neighbors(a)) {
        if (dist[b] < 0) continue;
        if (parent[a] == b || parent[b] == a) continue;
        if (dist[a] + dist[b] + 1 > best_len) continue;
        if ((path_sig[a] ^ path_sig[b] ^ edge_sig(a, b)).is_zero()) continue;

        // Trim the shared stem down to the lowest common ancestor.
        std::vector<int> up_a{a}, up_b{b};
        int x = a, y = b;
        while (dist[x] > dist[y]) up_a.push_back(x = parent[x]);
        while (dist[y] > dist[x]) up_b.push_back(y = parent[y]);
        while (x != y) {
          up_a.push_back(x = parent[x]);
          up_b.push_back(y = parent[y]);
        }
        up_b.pop_back();  // LCA already ends up_a
        std::vector<int> cycle(up_a.rbegin(), up_a.rend());
        cycle.insert(cycle.end(), up_b.begin(), up_b.end());
        cycle = canonical_cycle(std::move(cycle));
        int len = static_cast<int>(cycle.size());
        if (len < best_len || (len == best_len && cycle < best)) {
          best_len = len;
          best = std::move(cycle);
        }
      }
  }
  if (best.empty()) throw std::logic_error("no non-contractible cycle found on a torus embedding");

  CycleCert cert = make_cycle_cert(rot, sig, best);
  if (cert.signature.is_zero()) throw std::logic_error("trimmed cycle lost its homology class");

  std::vector<char> on(static_cast<std::size_t>(n), 0);
  for (int v : cert.vertices) on[v] = 1;
  for (int v = 0; v < n; ++v) {
    int hits = 0;
    for (int w : g.neighbors(v)) hits += on[w];
    if (on[v] && hits != 2) throw std::logic_error("shortest non-contractible cycle has a chord");
    if (hits > 3) throw std::logic_error("vertex sees more than three vertices of the shortest cycle");
  }
  return cert;
}

}  // namespace torcol

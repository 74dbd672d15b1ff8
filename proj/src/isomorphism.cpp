#include "torcol/isomorphism.hpp"

#include <algorithm>
#include <map>

namespace torcol {

bool is_isomorphism(const Graph& g1, const Graph& g2, std::span<const int> map) {
  const int n = g1.order();
  if (g2.order() != n || g1.size() != g2.size() || static_cast<int>(map.size()) != n) return false;
  std::vector<char> hit(static_cast<std::size_t>(n), 0);
  for (int v = 0; v < n; ++v) {
    int w = map[v];
    if (w < 0 || w >= n || hit[w]) return false;
    hit[w] = 1;
  }
  // Equal edge counts plus injectivity make edge preservation sufficient.
  for (const Edge& e : g1.edges())
    if (!g2.has_edge(map[e.u], map[e.v])) return false;
  return true;
}

namespace {

// Vertices 0..n-1 belong to the first graph, n..2n-1 to the second.
class Matcher {
 public:
  Matcher(const Graph& g1, const Graph& g2) : g1_(g1), g2_(g2), n_(g1.order()) {}

  std::optional<Isomorphism> run() {
    std::vector<int> color(static_cast<std::size_t>(2 * n_));
    for (int v = 0; v < n_; ++v) {
      color[v] = g1_.degree(v);
      color[n_ + v] = g2_.degree(v);
    }
    int classes = 0;
    if (!refine(color, classes)) return std::nullopt;
    return search(color, classes);
  }

 private:
  std::span<const int> neighbors(int x) const {
    return x < n_ ? g1_.neighbors(x) : g2_.neighbors(x - n_);
  }
  int shift(int x) const { return x < n_ ? 0 : n_; }

  // Relabels colours canonically; fails as soon as the two halves disagree.
  bool refine(std::vector<int>& color, int& classes) const {
    int previous = -1;
    std::vector<std::pair<std::vector<int>, int>> keyed(static_cast<std::size_t>(2 * n_));
    while (true) {
      std::map<std::vector<int>, int> ids;
      for (int x = 0; x < 2 * n_; ++x) {
        std::vector<int> key;
        key.reserve(neighbors(x).size() + 1);
        key.push_back(color[x]);
        std::vector<int> around;
        for (int y : neighbors(x)) around.push_back(color[y + shift(x)]);
        std::sort(around.begin(), around.end());
        key.insert(key.end(), around.begin(), around.end());
        ids.emplace(key, 0);
        keyed[x].first = std::move(key);
      }
      int next = 0;
      for (auto& [key, id] : ids) id = next++;
      std::vector<int> count(static_cast<std::size_t>(next), 0);
      for (int x = 0; x < 2 * n_; ++x) {
        color[x] = ids[keyed[x].first];
        count[color[x]] += x < n_ ? 1 : -1;
      }
      for (int c : count)
        if (c != 0) return false;
      classes = next;
      if (next == previous) return true;
      previous = next;
    }
  }

  std::optional<Isomorphism> search(const std::vector<int>& color, int classes) const {
    std::vector<int> size(static_cast<std::size_t>(classes), 0);
    for (int v = 0; v < n_; ++v) ++size[color[v]];
    int target = -1;
    for (int c = 0; c < classes; ++c)
      if (size[c] > 1 && (target < 0 || size[c] < size[target])) target = c;

    if (target < 0) {
      Isomorphism map(static_cast<std::size_t>(n_));
      std::vector<int> owner(static_cast<std::size_t>(classes), -1);
      for (int w = 0; w < n_; ++w) owner[color[n_ + w]] = w;
      for (int v = 0; v < n_; ++v) map[v] = owner[color[v]];
      if (is_isomorphism(g1_, g2_, map)) return map;
      return std::nullopt;
    }

    int pick = -1;
    for (int v = 0; v < n_ && pick < 0; ++v)
      if (color[v] == target) pick = v;
    for (int w = 0; w < n_; ++w) {
      if (color[n_ + w] != target) continue;
      std::vector<int> next = color;
      next[pick] = classes;
      next[n_ + w] = classes;
      int next_classes = 0;
      if (!refine(next, next_classes)) continue;
      if (auto found = search(next, next_classes)) return found;
    }
    return std::nullopt;
  }

  const Graph& g1_;
  const Graph& g2_;
  int n_;
};

}  // namespace

std::optional<Isomorphism> find_isomorphism(const Graph& g1, const Graph& g2) {
  if (g1.order() != g2.order() || g1.size() != g2.size()) return std::nullopt;
  if (g1.order() == 0) return Isomorphism{};
  return Matcher(g1, g2).run();
}

}  // namespace torcol

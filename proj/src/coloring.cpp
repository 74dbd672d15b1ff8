#include "torcol/coloring.hpp"

#include <algorithm>
#include <charconv>
#include <stdexcept>

namespace torcol {

DefectVector::DefectVector(std::vector<DefectEntry> entries) : entries_(std::move(entries)) {
  if (entries_.empty()) throw std::invalid_argument("defect vector needs at least one class");
  for (const auto& e : entries_) {
    if (e.bound < 0) throw std::invalid_argument("negative defect bound");
    if (e.star && e.bound != 1) throw std::invalid_argument("starred defect must be 1");
  }
}

DefectVector::DefectVector(std::initializer_list<int> bounds) {
  std::vector<DefectEntry> entries;
  for (int b : bounds) entries.push_back({b, false});
  *this = DefectVector(std::move(entries));
}

DefectVector DefectVector::proper(int k) {
  return DefectVector(std::vector<DefectEntry>(static_cast<std::size_t>(k), DefectEntry{}));
}

DefectVector DefectVector::parse(std::string_view text) {
  std::vector<DefectEntry> entries;
  std::size_t i = 0;
  auto is_sep = [](char ch) { return ch == ',' || ch == ' ' || ch == '\t'; };
  while (i < text.size()) {
    while (i < text.size() && is_sep(text[i])) ++i;
    if (i >= text.size()) break;
    std::size_t j = i;
    while (j < text.size() && !is_sep(text[j])) ++j;
    std::string_view token = text.substr(i, j - i);
    bool star = false;
    if (!token.empty() && token.back() == '*') {
      star = true;
      token.remove_suffix(1);
    }
    int value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (token.empty() || ec != std::errc() || ptr != token.data() + token.size())
      throw std::invalid_argument("malformed defect entry: '" + std::string(text.substr(i, j - i)) + "'");
    entries.push_back({value, star});
    i = j;
  }
  return DefectVector(std::move(entries));
}

std::string DefectVector::to_string(char separator) const {
  std::string out;
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (i) out += separator;
    out += std::to_string(entries_[i].bound);
    if (entries_[i].star) out += '*';
  }
  return out;
}

bool DefectVector::weaker_or_equal(const DefectVector& other) const {
  if (other.classes() != classes()) return false;
  for (int i = 0; i < classes(); ++i) {
    const auto& a = entries_[i];
    const auto& b = other[i];
    if (b.bound < a.bound) return false;
    if (b.star && !a.star) return false;
  }
  return true;
}

int VerificationReport::total_mono() const {
  int total = 0;
  for (const auto& c : per_class) total += c.mono_count;
  return total;
}

std::vector<Edge> VerificationReport::mono_edges() const {
  std::vector<Edge> out;
  for (const auto& c : per_class) out.insert(out.end(), c.mono_edges.begin(), c.mono_edges.end());
  std::sort(out.begin(), out.end());
  return out;
}

VerificationReport verify_coloring(const Graph& g, const Coloring& c, const DefectVector& d) {
  const int n = g.order();
  const int k = d.classes();
  if (c.size() != n)
    throw std::invalid_argument("coloring covers " + std::to_string(c.size()) + " vertices, graph has " +
                                std::to_string(n));
  for (int v = 0; v < n; ++v)
    if (c[v] < 1 || c[v] > k)
      throw std::invalid_argument("vertex " + std::to_string(v) + " has class " + std::to_string(c[v]) +
                                  " outside 1.." + std::to_string(k));

  VerificationReport report;
  report.per_class.resize(static_cast<std::size_t>(k));
  std::vector<int> induced(static_cast<std::size_t>(n), 0);
  for (int u = 0; u < n; ++u)
    for (int v : g.neighbors(u)) {
      if (c[u] != c[v]) continue;
      ++induced[u];
      if (u < v) {
        auto& cls = report.per_class[c[u] - 1];
        ++cls.mono_count;
        cls.mono_edges.emplace_back(u, v);
      }
    }
  for (int v = 0; v < n; ++v) {
    auto& cls = report.per_class[c[v] - 1];
    cls.max_degree = std::max(cls.max_degree, induced[v]);
  }

  for (int i = 0; i < k && !report.first_violation; ++i) {
    const auto& cls = report.per_class[i];
    const auto& entry = d[i];
    if (cls.max_degree > entry.bound) {
      for (int v = 0; v < n; ++v)
        if (c[v] == i + 1 && induced[v] > entry.bound) {
          report.first_violation = Violation{i + 1, v, std::nullopt,
                                             "class " + std::to_string(i + 1) + ": vertex " + std::to_string(v) +
                                                 " has induced degree " + std::to_string(induced[v]) + " > " +
                                                 std::to_string(entry.bound)};
          break;
        }
    } else if (entry.star && cls.mono_count > 1) {
      const Edge& e = cls.mono_edges[1];
      report.first_violation =
          Violation{i + 1, std::nullopt, e,
                    "class " + std::to_string(i + 1) + ": starred class has " + std::to_string(cls.mono_count) +
                        " monochromatic edges; second is (" + std::to_string(e.u) + "," + std::to_string(e.v) + ")"};
    }
  }
  report.valid = !report.first_violation.has_value();
  return report;
}

std::vector<Edge> monochromatic_edges(const Graph& g, const Coloring& c) {
  std::vector<Edge> out;
  for (const Edge& e : g.edges())
    if (c[e.u] == c[e.v]) out.push_back(e);
  return out;
}

}  // namespace torcol

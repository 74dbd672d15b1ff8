#include "torcol/generators.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <stdexcept>

namespace torcol {

namespace {

int mod(int a, int m) {
  int r = a % m;
  return r < 0 ? r + m : r;
}

int parse_int(std::string_view text, std::string_view token) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (text.empty() || ec != std::errc() || ptr != text.data() + text.size())
    throw std::invalid_argument("malformed number in token '" + std::string(token) + "'");
  return value;
}

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    std::size_t pos = text.find(sep, start);
    parts.push_back(text.substr(start, pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

// 1-based (row, column) with wrap-around; column seam applies the shift.
struct GridWalker {
  int m, n, k;

  int index(int i, int j) const { return mod(i - 1, m) * n + (j - 1); }

  // Six neighbors in canonical counterclockwise order: E, NE, N, W, SW, S.
  std::array<int, 6> around(int i, int j) const {
    std::array<int, 6> out{};
    out[0] = j < n ? index(i, j + 1) : index(i + k - 1, 1);
    out[1] = j < n ? index(i - 1, j + 1) : index(i + k - 2, 1);
    out[2] = index(i - 1, j);
    out[3] = j > 1 ? index(i, j - 1) : index(i - k + 1, n);
    out[4] = j > 1 ? index(i + 1, j - 1) : index(i - k + 2, n);
    out[5] = index(i + 1, j);
    return out;
  }
};

std::string grid_label(const GridSpec& s, int v) {
  return "(" + std::to_string(v / s.cols + 1) + "," + std::to_string(v % s.cols + 1) + ")";
}

}  // namespace

// ---------------------------------------------------------------------------

void CirculantSpec::validate() const {
  if (n < 1) throw std::invalid_argument("circulant order must be positive");
  std::vector<int> seen;
  for (int x : offsets) {
    if (x < 1 || x > n / 2)
      throw std::invalid_argument("circulant offset " + std::to_string(x) + " outside 1.." + std::to_string(n / 2));
    if (std::find(seen.begin(), seen.end(), x) != seen.end())
      throw std::invalid_argument("repeated circulant offset " + std::to_string(x));
    seen.push_back(x);
  }
}

bool CirculantSpec::has_half_offset() const {
  return n % 2 == 0 && std::find(offsets.begin(), offsets.end(), n / 2) != offsets.end();
}

std::string CirculantSpec::token() const {
  std::string out = "circ:" + std::to_string(n) + ":";
  for (std::size_t i = 0; i < offsets.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(offsets[i]);
  }
  return out;
}

Graph gen_circulant(const CirculantSpec& spec) {
  spec.validate();
  std::vector<Edge> edges;
  for (int i = 0; i < spec.n; ++i)
    for (int x : spec.offsets) edges.emplace_back(i, (i + x) % spec.n);
  return Graph(spec.n, edges);
}

bool GridSpec::valid() const {
  if (rows < 1 || cols < 1 || shift < 1 || shift > rows) return false;
  GridWalker w{rows, cols, shift};
  for (int i = 1; i <= rows; ++i)
    for (int j = 1; j <= cols; ++j) {
      auto nb = w.around(i, j);
      int self = w.index(i, j);
      for (int a = 0; a < 6; ++a) {
        if (nb[a] == self) return false;
        for (int b = a + 1; b < 6; ++b)
          if (nb[a] == nb[b]) return false;
      }
    }
  return true;
}

int GridSpec::vertex(int i, int j) const { return (i - 1) * cols + (j - 1); }

std::string GridSpec::token() const {
  return "grid:" + std::to_string(rows) + "x" + std::to_string(cols) + "," + std::to_string(shift);
}

RotationSystem gen_grid(const GridSpec& spec) {
  if (spec.rows < 1 || spec.cols < 1)
    throw std::invalid_argument("grid needs at least one row and one column");
  if (spec.shift < 1 || spec.shift > spec.rows)
    throw std::invalid_argument("grid shift must satisfy 1 <= k <= m");
  GridWalker w{spec.rows, spec.cols, spec.shift};
  const int n = spec.rows * spec.cols;
  std::vector<std::vector<int>> rotation(static_cast<std::size_t>(n));
  for (int i = 1; i <= spec.rows; ++i)
    for (int j = 1; j <= spec.cols; ++j) {
      int self = w.index(i, j);
      auto nb = w.around(i, j);
      for (int a = 0; a < 6; ++a) {
        if (nb[a] == self)
          throw std::invalid_argument(spec.token() + " is not simple: loop at " + grid_label(spec, self));
        for (int b = 0; b < a; ++b)
          if (nb[a] == nb[b])
            throw std::invalid_argument(spec.token() + " is not simple: " + grid_label(spec, self) + " and " +
                                        grid_label(spec, nb[a]) + " are joined twice");
      }
      rotation[self].assign(nb.begin(), nb.end());
    }
  return RotationSystem::from_rotation(std::move(rotation));
}

Graph gen_six_regular(const SixRegularSpec& spec) {
  if (const auto* g = std::get_if<GridSpec>(&spec)) return gen_grid(*g).graph();
  return gen_circulant(std::get<CirculantSpec>(spec));
}

std::string spec_token(const SixRegularSpec& spec) {
  return std::visit([](const auto& s) { return s.token(); }, spec);
}

// ---------------------------------------------------------------------------

Graph hajos_h7() {
  // Copy A = {a1,a2,a3,a4} minus a1a2, copy B = {b1,b2,b3,b4} minus b1b2,
  // a1 identified with b1, new edge a2b2.
  const int a1 = 0, a2 = 1, a3 = 2, a4 = 3, b2 = 4, b3 = 5, b4 = 6;
  std::vector<Edge> edges = {{a1, a3}, {a1, a4}, {a2, a3}, {a2, a4}, {a3, a4},
                             {a1, b3}, {a1, b4}, {b2, b3}, {b2, b4}, {b3, b4},
                             {a2, b2}};
  return Graph(7, edges);
}

EmbeddedGraph gen_named(const NamedGraph& name) {
  switch (name.kind) {
    case NamedKind::K7: {
      auto rot = gen_grid({7, 1, 4});
      Graph g = rot.graph();
      return {std::move(g), std::move(rot)};
    }
    case NamedKind::T11: {
      auto rot = gen_grid({11, 1, 4});
      Graph g = rot.graph();
      return {std::move(g), std::move(rot)};
    }
    case NamedKind::K6: {
      auto rot = delete_vertex(gen_grid({7, 1, 4}), 6);
      Graph g = rot.graph();
      return {std::move(g), std::move(rot)};
    }
    case NamedKind::H7:
      return {hajos_h7(), std::nullopt};
    case NamedKind::C3vC5:
      return {join(cycle_graph(3), cycle_graph(5)), std::nullopt};
    case NamedKind::K2vH7:
      return {join(complete_graph(2), hajos_h7()), std::nullopt};
    case NamedKind::Cycle:
      return {cycle_graph(name.n), std::nullopt};
    case NamedKind::Complete:
      if (name.n < 1) throw std::invalid_argument("complete graph needs n >= 1");
      return {complete_graph(name.n), std::nullopt};
  }
  throw std::invalid_argument("unknown named graph");
}

FamilyToken parse_family_token(std::string_view token) {
  if (token == "k6") return NamedGraph{NamedKind::K6};
  if (token == "k7") return NamedGraph{NamedKind::K7};
  if (token == "h7") return NamedGraph{NamedKind::H7};
  if (token == "t11") return NamedGraph{NamedKind::T11};
  if (token == "c3vc5") return NamedGraph{NamedKind::C3vC5};
  if (token == "k2vh7") return NamedGraph{NamedKind::K2vH7};
  if (token.starts_with("grid:")) {
    auto body = token.substr(5);
    auto x = body.find('x');
    auto comma = body.find(',');
    if (x == std::string_view::npos || comma == std::string_view::npos || comma < x)
      throw std::invalid_argument("grid token must look like grid:<m>x<n>,<k>");
    GridSpec spec{parse_int(body.substr(0, x), token), parse_int(body.substr(x + 1, comma - x - 1), token),
                  parse_int(body.substr(comma + 1), token)};
    if (spec.rows < 1 || spec.cols < 1 || spec.shift < 1 || spec.shift > spec.rows)
      throw std::invalid_argument("grid parameters out of range in '" + std::string(token) + "'");
    return spec;
  }
  if (token.starts_with("circ:")) {
    auto parts = split(token.substr(5), ':');
    if (parts.size() != 2) throw std::invalid_argument("circulant token must look like circ:<n>:<s1,s2,...>");
    CirculantSpec spec;
    spec.n = parse_int(parts[0], token);
    for (auto piece : split(parts[1], ',')) spec.offsets.push_back(parse_int(piece, token));
    spec.validate();
    return spec;
  }
  if (token.size() > 1 && (token[0] == 'c' || token[0] == 'k')) {
    int n = parse_int(token.substr(1), token);
    if (token[0] == 'c') {
      if (n < 3) throw std::invalid_argument("cycle token needs n >= 3");
      return NamedGraph{NamedKind::Cycle, n};
    }
    if (n < 1) throw std::invalid_argument("complete token needs n >= 1");
    return NamedGraph{NamedKind::Complete, n};
  }
  throw std::invalid_argument("unknown family token '" + std::string(token) + "'");
}

EmbeddedGraph generate(const FamilyToken& token) {
  if (const auto* named = std::get_if<NamedGraph>(&token)) return gen_named(*named);
  if (const auto* grid = std::get_if<GridSpec>(&token)) {
    auto rot = gen_grid(*grid);
    Graph g = rot.graph();
    return {std::move(g), std::move(rot)};
  }
  const auto& circ = std::get<CirculantSpec>(token);
  // Circulants of the form G_n[a,b,a+b] coincide with a one-column grid only
  // when a = 1; embed those through G[n x 1, k].
  auto offs = normalize_offsets(circ.n, circ.offsets);
  if (offs.size() == 3 && !circ.has_half_offset() && offs[0] == 1 && offs[2] == offs[1] + 1) {
    GridSpec grid{circ.n, 1, offs[2] + 1};
    if (grid.valid()) {
      auto rot = gen_grid(grid);
      if (rot.graph() == gen_circulant(circ)) {
        Graph g = rot.graph();
        return {std::move(g), std::move(rot)};
      }
    }
  }
  return {gen_circulant(circ), std::nullopt};
}

std::vector<int> normalize_offsets(int n, std::vector<int> offsets) {
  for (int& x : offsets) {
    x = mod(x, n);
    x = std::min(x, n - x);
  }
  std::sort(offsets.begin(), offsets.end());
  return offsets;
}

// ---------------------------------------------------------------------------

std::vector<GridSpec> small_exception_grids() {
  return {{3, 3, 2}, {3, 3, 3}, {5, 3, 2}, {5, 3, 3}, {5, 5, 3}, {5, 5, 4}};
}

const std::vector<std::pair<int, int>>& sporadic_pairs() {
  static const std::vector<std::pair<int, int>> pairs = {
      {3, 13}, {3, 17}, {3, 18}, {3, 25}, {4, 17},  {6, 17},  {6, 25},  {6, 33},
      {7, 19}, {7, 25}, {7, 26}, {9, 25}, {10, 25}, {10, 26}, {10, 37}, {14, 33}};
  return pairs;
}

std::vector<YehZhuException> yehzhu_exceptions() {
  std::vector<YehZhuException> out;
  for (const auto& g : small_exception_grids())
    out.push_back({1, ExceptionKind::SmallGrid, g, std::nullopt, "G[" + std::to_string(g.rows) + "x" +
                                                                     std::to_string(g.cols) + "," +
                                                                     std::to_string(g.shift) + "]"});
  out.push_back({2, ExceptionKind::OddTwoColumnGrid, std::nullopt, std::nullopt, "G[m x 2,1], m odd"});
  out.push_back({3, ExceptionKind::UnitReducible, std::nullopt, std::nullopt,
                 "G_n[1,r,r+1], n in {2r+2, 2r+3, 3r+1, 3r+2}, n not divisible by 4"});
  out.push_back({4, ExceptionKind::Circulant123, std::nullopt, std::nullopt, "G_n[1,2,3], n not divisible by 4"});
  for (auto [r, n] : sporadic_pairs())
    out.push_back({5, ExceptionKind::SporadicPair, std::nullopt, CirculantSpec{n, {1, r, r + 1}},
                   "G_" + std::to_string(n) + "[1," + std::to_string(r) + "," + std::to_string(r + 1) + "]"});
  return out;
}

}  // namespace torcol

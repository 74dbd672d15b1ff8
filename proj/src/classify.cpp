#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

#include "torcol/generators.hpp"
#include "torcol/isomorphism.hpp"
#include "torcol/solver.hpp"

namespace torcol {

namespace {

int mod(long long a, int m) { return static_cast<int>(((a % m) + m) % m); }

bool is_123(const std::vector<int>& offs) { return offs == std::vector<int>{1, 2, 3}; }

/// r when offs = {1, r, r+1} (sorted, normalized), else 0.
int one_r_r1(const std::vector<int>& offs) {
  if (offs.size() != 3 || offs[0] != 1 || offs[2] != offs[1] + 1) return 0;
  return offs[1];
}

bool item3_order(int r, int n) {
  return n % 4 != 0 && (n == 2 * r + 2 || n == 2 * r + 3 || n == 3 * r + 1 || n == 3 * r + 2);
}

bool is_sporadic(int r, int n) {
  const auto& pairs = sporadic_pairs();
  return std::find(pairs.begin(), pairs.end(), std::pair{r, n}) != pairs.end();
}

/// One offset is ±a±b of the other two, so the circulant triangulates the torus.
bool has_triangle_relation(int n, const std::vector<int>& s) {
  for (int i = 0; i < 3; ++i) {
    int a = s[(i + 1) % 3], b = s[(i + 2) % 3], c = s[i];
    for (int x : {a + b, a - b})
      if (mod(x - c, n) == 0 || mod(x + c, n) == 0) return true;
  }
  return false;
}

void require_six_regular(const SixRegularSpec& spec) {
  if (const auto* grid = std::get_if<GridSpec>(&spec)) {
    if (grid->rows < 1 || grid->cols < 1 || grid->shift < 1 || grid->shift > grid->rows)
      throw std::invalid_argument(grid->token() + ": shift must lie in 1..rows");
    if (grid->cols == 2 && grid->shift == 1 && grid->rows % 2 == 1)
      throw std::invalid_argument(grid->token() + " is 5-regular after merging doubled edges, not simple 6-regular");
    if (!grid->valid()) throw std::invalid_argument(grid->token() + " is not a simple 6-regular graph");
    return;
  }
  const auto& circ = std::get<CirculantSpec>(spec);
  circ.validate();
  if (circ.offsets.size() != 3 || circ.has_half_offset())
    throw std::invalid_argument(circ.token() + " is not 6-regular");
  if (!has_triangle_relation(circ.n, normalize_offsets(circ.n, circ.offsets)))
    throw std::invalid_argument(circ.token() + " is not a toroidal triangulation (no offset is a sum or difference of the others)");
}

/// Multiplication by a unit p maps G_n[S] onto G_n[pS].
std::vector<int> multiply_map(int n, int p) {
  std::vector<int> out(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) out[v] = mod(static_cast<long long>(v) * p, n);
  return out;
}

std::vector<int> compose(const std::vector<int>& first, const std::vector<int>& then) {
  std::vector<int> out(first.size());
  for (std::size_t v = 0; v < first.size(); ++v) out[v] = then[first[v]];
  return out;
}

}  // namespace

std::optional<CirculantView> circulant_view(const SixRegularSpec& spec) {
  if (const auto* circ = std::get_if<CirculantSpec>(&spec)) {
    CirculantView view{{circ->n, normalize_offsets(circ->n, circ->offsets)}, {}};
    view.map.resize(static_cast<std::size_t>(circ->n));
    std::iota(view.map.begin(), view.map.end(), 0);
    return view;
  }
  const auto& grid = std::get<GridSpec>(spec);
  if (!grid.valid()) return std::nullopt;
  // The grid is the Cayley graph of Z^2 / <(n, -(k-1)), (0, m)> with east = x,
  // south = y. A homomorphism x -> alpha, y -> beta onto Z_N needs m*beta = 0
  // and n*alpha = (k-1)*beta, i.e. beta = t*n and alpha = t*(k-1) + s*m.
  const int m = grid.rows, n = grid.cols, big = m * n;
  const Graph g = gen_grid(grid).graph();
  for (int t = 0; t < m; ++t)
    for (int s = 0; s < n; ++s) {
      const int beta = mod(static_cast<long long>(t) * n, big);
      const int alpha = mod(static_cast<long long>(t) * (grid.shift - 1) + static_cast<long long>(s) * m, big);
      if (std::gcd(std::gcd(alpha, beta), big) != 1) continue;
      CirculantSpec circ{big, normalize_offsets(big, {alpha, beta, alpha - beta})};
      if (circ.offsets[0] == 0 || std::adjacent_find(circ.offsets.begin(), circ.offsets.end()) != circ.offsets.end() ||
          circ.has_half_offset())
        continue;
      std::vector<int> map(static_cast<std::size_t>(big));
      for (int i = 1; i <= m; ++i)
        for (int j = 1; j <= n; ++j)
          map[grid.vertex(i, j)] = mod(static_cast<long long>(alpha) * (j - 1) + static_cast<long long>(beta) * (i - 1), big);
      if (!is_isomorphism(g, gen_circulant(circ), map))
        throw std::logic_error("cyclic-group map of " + grid.token() + " is not an isomorphism");
      return CirculantView{std::move(circ), std::move(map)};
    }
  return std::nullopt;
}

Classification classify_6regular(const SixRegularSpec& spec) {
  require_six_regular(spec);
  Classification out;
  const Graph g = gen_six_regular(spec);
  const int order = g.order();

  auto set_canonical = [&](int case_id, int reduced, CirculantSpec canon, std::vector<int> map, std::string note) {
    out.exception = true;
    out.case_id = case_id;
    out.reduced_case = reduced;
    out.canonical = std::move(canon);
    out.to_canonical = std::move(map);
    out.note = std::move(note);
  };

  const auto* grid = std::get_if<GridSpec>(&spec);
  const auto smalls = small_exception_grids();
  if (grid && std::find(smalls.begin(), smalls.end(), *grid) != smalls.end()) {
    out.exception = true;
    out.case_id = 1;
    out.note = "small grid exception " + grid->token();
  } else if (auto view = circulant_view(spec)) {
    const int n = view->spec.n;
    const auto& s = view->spec.offsets;
    const int r = one_r_r1(s);
    auto unit_to = [&](const std::vector<int>& target) -> int {
      for (int p = 1; p < n; ++p)
        if (std::gcd(p, n) == 1) {
          std::vector<int> ps;
          for (int x : s) ps.push_back(static_cast<int>(static_cast<long long>(x) * p % n));
          if (normalize_offsets(n, ps) == target) return p;
        }
      return 0;
    };

    if (is_123(s) && n % 4 != 0) {
      set_canonical(4, 0, view->spec, view->map, "G_n[1,2,3] with n not divisible by 4");
    } else if (r > 0 && item3_order(r, n)) {
      int p = unit_to({1, 2, 3});
      if (p == 0) throw std::logic_error("no unit reduces " + view->spec.token() + " to G_n[1,2,3]");
      set_canonical(3, 4, CirculantSpec{n, {1, 2, 3}}, compose(view->map, multiply_map(n, p)),
                    "G_n[1,r,r+1] reduced to G_n[1,2,3] by unit " + std::to_string(p));
    } else if (r > 0 && is_sporadic(r, n)) {
      set_canonical(5, 0, view->spec, view->map, "sporadic pair (" + std::to_string(r) + "," + std::to_string(n) + ")");
    } else if (int p = n % 4 != 0 ? unit_to({1, 2, 3}) : 0; p != 0) {
      set_canonical(4, 0, CirculantSpec{n, {1, 2, 3}}, compose(view->map, multiply_map(n, p)),
                    "isomorphic to G_n[1,2,3] by unit " + std::to_string(p));
    } else {
      for (auto [pr, pn] : sporadic_pairs()) {
        if (pn != n) continue;
        if (int p = unit_to({1, pr, pr + 1}); p != 0) {
          set_canonical(5, 0, CirculantSpec{n, {1, pr, pr + 1}}, compose(view->map, multiply_map(n, p)),
                        "isomorphic to sporadic pair (" + std::to_string(pr) + "," + std::to_string(n) + ") by unit " +
                            std::to_string(p));
          break;
        }
      }
    }
  }

  if (!out.exception) out.note = "4-colorable";

  if (order <= 30) {
    auto result = solve(g, DefectVector::proper(4));
    const bool colorable = result.status == SolveStatus::Sat;
    if (colorable && out.exception)
      throw std::logic_error(spec_token(spec) + " is listed as an exception but has a proper 4-coloring");
    if (!colorable && !out.exception) {
      // Arithmetic missed it; look for an isomorphic listed exception.
      for (const auto& small : smalls)
        if (small.rows * small.cols == order)
          if (auto iso = find_isomorphism(g, gen_grid(small).graph())) {
            out.exception = true;
            out.case_id = 1;
            out.note = "isomorphic to small grid exception " + small.token();
            break;
          }
      if (!out.exception && order % 4 != 0) {
        CirculantSpec c123{order, {1, 2, 3}};
        if (auto iso = find_isomorphism(g, gen_circulant(c123)))
          set_canonical(4, 0, c123, *iso, "isomorphic to G_n[1,2,3]");
      }
      for (auto [pr, pn] : sporadic_pairs()) {
        if (out.exception) break;
        if (pn != order) continue;
        CirculantSpec c{pn, {1, pr, pr + 1}};
        if (auto iso = find_isomorphism(g, gen_circulant(c)))
          set_canonical(5, 0, c, *iso, "isomorphic to sporadic pair (" + std::to_string(pr) + "," + std::to_string(pn) + ")");
      }
      if (!out.exception)
        throw std::logic_error(spec_token(spec) + " has no proper 4-coloring but matches no listed exception");
    }
    out.cross_checked = true;
  }

  if (out.canonical && !is_isomorphism(g, gen_circulant(*out.canonical), out.to_canonical))
    throw std::logic_error("classification map for " + spec_token(spec) + " is not an isomorphism");
  return out;
}

}  // namespace torcol

#include "torcol/constructions.hpp"

#include <algorithm>
#include <numeric>

#include "torcol/homology.hpp"
#include "torcol/isomorphism.hpp"
#include "torcol/patterns.hpp"
#include "torcol/solver.hpp"
#include "torcol/surgery.hpp"

namespace torcol {

namespace {

void require_torus(const RotationSystem& rot) {
  if (!is_connected(rot.graph())) throw std::invalid_argument("embedding is not connected");
  int eg = euler_genus(rot);
  if (eg != 2) throw std::invalid_argument("embedding has Euler genus " + std::to_string(eg) + ", expected 2 (torus)");
}

Coloring solve_or_throw(const Graph& g, const DefectVector& d, const std::string& what) {
  auto result = solve(g, d);
  if (result.status == SolveStatus::Indeterminate)
    throw Indeterminate(what + ": search budget exhausted for (" + d.to_string() + ")");
  if (result.status == SolveStatus::Unsat)
    throw std::invalid_argument(what + " is not (" + d.to_string() + ")-colorable");
  return *result.coloring;
}

struct Surgery {
  CycleCert cycle;
  CutResult cut;
};

Surgery cut_along_shortest(const RotationSystem& rot) {
  require_torus(rot);
  Surgery s{shortest_noncontractible_cycle(rot), {}};
  s.cut = cut_and_contract(rot, s.cycle);
  if (!planarity_check(s.cut.graph)) throw std::logic_error("cut-and-contract produced a non-planar graph");
  return s;
}

/// Non-cycle vertices take their class in the planar graph; cycle vertices
/// are filled in by the caller.
Coloring pull_back(const Surgery& s, const Coloring& planar, int n) {
  Coloring out(std::vector<int>(static_cast<std::size_t>(n), 0));
  for (int x = 0; x < n; ++x)
    if (s.cut.from_original[x] >= 0) out[x] = planar[s.cut.from_original[x]];
  return out;
}

}  // namespace

Certificate make_certificate(const Graph& g, Coloring c, DefectVector claimed, std::string provenance) {
  auto report = verify_coloring(g, c, claimed);
  if (!report.valid)
    throw std::logic_error(provenance + " produced an invalid coloring: " + report.first_violation->message);
  Certificate cert{std::move(c), std::move(claimed), std::move(provenance), report.mono_edges()};
  return cert;
}

std::vector<int> color_cycle_56(int length) {
  if (length < 3) throw std::invalid_argument("cycle length must be at least 3, got " + std::to_string(length));
  std::vector<int> out(static_cast<std::size_t>(length));
  for (int i = 0; i < length; ++i) out[i] = i % 2 == 0 ? 5 : 6;
  if (length % 2 == 1) out[length - 1] = 6;
  return out;
}

Certificate color_600001(const RotationSystem& rot) {
  const Graph& g = rot.graph();
  auto s = cut_along_shortest(rot);
  Coloring c = pull_back(s, solve_or_throw(s.cut.graph, DefectVector::proper(4), "cut graph"), g.order());
  auto cycle_colors = color_cycle_56(s.cycle.length());
  for (int i = 0; i < s.cycle.length(); ++i) c[s.cycle.vertices[i]] = cycle_colors[i];
  return make_certificate(g, std::move(c), DefectVector::parse("0,0,0,0,0,1*"), "600001:cut-and-contract");
}

Certificate color_00002(const RotationSystem& rot) {
  const Graph& g = rot.graph();
  auto s = cut_along_shortest(rot);
  Coloring c = pull_back(s, solve_or_throw(s.cut.graph, DefectVector::proper(4), "cut graph"), g.order());
  for (int x : s.cycle.vertices) c[x] = 5;
  auto cert = make_certificate(g, std::move(c), DefectVector{0, 0, 0, 0, 2}, "00002:cut-and-contract");
  auto report = verify_coloring(g, cert.coloring, cert.claimed);
  if (report.per_class[4].mono_count != s.cycle.length())
    throw std::logic_error("class 5 does not induce exactly the shortest non-contractible cycle");
  return cert;
}

Certificate color_0004(const RotationSystem& rot) {
  const Graph& g = rot.graph();
  auto s = cut_along_shortest(rot);
  auto path = shortest_path(s.cut.graph, s.cut.u, s.cut.v);
  auto contracted = contract_path(s.cut.graph, path);
  if (!planarity_check(contracted.graph)) throw std::logic_error("path contraction produced a non-planar graph");
  Coloring planar = solve_or_throw(contracted.graph, DefectVector::proper(4), "contracted graph");

  // Rename classes so the contracted vertex gets class 4.
  const int star = planar[contracted.merged];
  std::vector<int> rename{0, 1, 2, 3, 4};
  std::swap(rename[star], rename[4]);
  Coloring c(std::vector<int>(static_cast<std::size_t>(g.order()), 4));
  for (int x = 0; x < g.order(); ++x) {
    int h = s.cut.from_original[x];
    if (h >= 0) c[x] = rename[planar[contracted.from_original[h]]];
  }
  auto cert = make_certificate(g, std::move(c), DefectVector{0, 0, 0, 4}, "0004:cut-contract-path");
  return cert;
}

Coloring color_01_paths_cycles(const Graph& h) {
  const int n = h.order();
  if (n > 0 && h.max_degree() > 2)
    throw std::invalid_argument("paths-and-cycles coloring needs maximum degree at most 2, got " +
                                std::to_string(h.max_degree()));
  Coloring c(std::vector<int>(static_cast<std::size_t>(n), 0));
  auto walk = [&](int start) {
    int prev = -1, x = start, step = 0;
    while (x >= 0 && c[x] == 0) {
      c[x] = step % 2 == 0 ? 1 : 2;
      int next = -1;
      for (int y : h.neighbors(x))
        if (y != prev && c[y] == 0) {
          next = y;
          break;
        }
      // Closing an odd cycle: the last vertex must not join two class-1 ends.
      if (next < 0 && c[x] == 1)
        for (int y : h.neighbors(x))
          if (y != prev && c[y] == 1) c[x] = 2;
      prev = x;
      x = next;
      ++step;
    }
  };
  for (int v = 0; v < n; ++v)
    if (c[v] == 0 && h.degree(v) <= 1) walk(v);
  for (int v = 0; v < n; ++v)
    if (c[v] == 0) walk(v);
  if (!verify_coloring(h, c, DefectVector{0, 1}).valid) throw std::logic_error("paths-and-cycles coloring failed");
  return c;
}

Certificate color_0122(const Graph& g) {
  Coloring base = solve_or_throw(g, DefectVector{2, 2, 2}, "graph");
  std::vector<int> first;
  for (int v = 0; v < g.order(); ++v)
    if (base[v] == 1) first.push_back(v);
  auto sub = induced_subgraph(g, first);
  Coloring split = color_01_paths_cycles(sub.graph);
  Coloring c(std::vector<int>(static_cast<std::size_t>(g.order())));
  for (int v = 0; v < g.order(); ++v) c[v] = base[v] + 1;  // classes 2,3 -> 3,4
  for (int i = 0; i < sub.graph.order(); ++i) c[sub.to_parent[i]] = split[i];
  return make_certificate(g, std::move(c), DefectVector{0, 1, 2, 2}, "0122:split-222");
}

Certificate color_6regular(const SixRegularSpec& spec) {
  const Classification cls = classify_6regular(spec);
  const Graph g = gen_six_regular(spec);
  const int n = g.order();

  if (n == 7)
    return make_certificate(g, solve_or_throw(g, DefectVector{0, 0, 0, 3}, "K7"), DefectVector{0, 0, 0, 3}, "6reg:K7");
  if (n == 11 && are_isomorphic(g, gen_circulant({11, {1, 2, 3}})))
    return make_certificate(g, solve_or_throw(g, DefectVector{0, 0, 0, 2}, "T11"), DefectVector{0, 0, 0, 2},
                            "6reg:T11");
  if (!cls.exception)
    return make_certificate(g, solve_or_throw(g, DefectVector::proper(4), spec_token(spec)), DefectVector::proper(4),
                            "6reg:proper4");
  if (!cls.canonical)
    return make_certificate(g, solve_or_throw(g, DefectVector{0, 0, 0, 1}, spec_token(spec)), DefectVector{0, 0, 0, 1},
                            "6reg:small-exception");

  const CirculantSpec& canon = *cls.canonical;
  Pattern pattern;
  std::string provenance;
  if (canon.offsets == std::vector<int>{1, 2, 3}) {
    pattern = pattern_circ123(canon.n);
    provenance = "6reg:circ123-pattern";
  } else {
    auto tp = pattern_exception(canon.offsets[1], canon.n);
    pattern = tp.pattern;
    provenance = "6reg:sporadic-pattern";
  }
  Coloring on_canon = pattern.coloring();
  Coloring c(std::vector<int>(static_cast<std::size_t>(n)));
  for (int v = 0; v < n; ++v) c[v] = on_canon[cls.to_canonical[v]];
  return make_certificate(g, std::move(c), DefectVector{0, 0, 0, 1}, provenance);
}

std::optional<GridMatch> recognize_grid(const Graph& g) {
  const int n = g.order();
  if (n == 0 || g.min_degree() != 6 || g.max_degree() != 6) return std::nullopt;
  for (int rows = 1; rows <= n; ++rows) {
    if (n % rows != 0) continue;
    for (int shift = 1; shift <= rows; ++shift) {
      GridSpec spec{rows, n / rows, shift};
      if (!spec.valid()) continue;
      if (auto iso = find_isomorphism(g, gen_grid(spec).graph())) return GridMatch{spec, std::move(*iso)};
    }
  }
  return std::nullopt;
}

Certificate color_0003_high_min_degree(const Graph& g) {
  const auto deg = degeneracy(g);
  if (deg.value < 6)
    throw std::invalid_argument("graph is " + std::to_string(deg.value) + "-degenerate; a 6-core is required");
  auto core = induced_subgraph(g, deg.core);
  auto match = recognize_grid(core.graph);
  if (!match) throw std::invalid_argument("6-core is not a recognized 6-regular toroidal triangulation");

  Certificate core_cert = color_6regular(match->spec);
  const int k = core_cert.claimed.classes();
  std::vector<int> color(static_cast<std::size_t>(g.order()), 0);
  for (int i = 0; i < core.graph.order(); ++i) color[core.to_parent[i]] = core_cert.coloring[match->map[i]];

  // Each component outside the core sits inside one face; extend with proper
  // colors around the already-colored attachment vertices.
  std::vector<int> rest;
  for (int v = 0; v < g.order(); ++v)
    if (color[v] == 0) rest.push_back(v);
  auto outside = induced_subgraph(g, rest);
  int count = 0;
  auto comp = components(outside.graph, &count);
  for (int id = 0; id < count; ++id) {
    std::vector<int> members;
    for (int i = 0; i < outside.graph.order(); ++i)
      if (comp[i] == id) members.push_back(outside.to_parent[i]);
    std::vector<int> attach;
    for (int x : members)
      for (int y : g.neighbors(x))
        if (color[y] != 0 && std::find(members.begin(), members.end(), y) == members.end()) attach.push_back(y);
    std::sort(attach.begin(), attach.end());
    attach.erase(std::unique(attach.begin(), attach.end()), attach.end());

    std::vector<int> local = members;
    local.insert(local.end(), attach.begin(), attach.end());
    std::vector<int> index(static_cast<std::size_t>(g.order()), -1);
    for (int i = 0; i < static_cast<int>(local.size()); ++i) index[local[i]] = i;
    std::vector<Edge> edges;
    for (int x : members)
      for (int y : g.neighbors(x))
        if (index[y] >= 0) edges.emplace_back(index[x], index[y]);
    Graph piece(static_cast<int>(local.size()), edges);
    Precoloring pre(piece.order());
    for (int y : attach) pre.set(index[y], color[y]);
    auto result = solve_with_precoloring(piece, pre, DefectVector::proper(std::max(k, 4)));
    if (result.status == SolveStatus::Indeterminate) throw Indeterminate("extension search budget exhausted");
    if (result.status == SolveStatus::Unsat)
      throw std::invalid_argument("vertices outside the 6-core admit no proper extension of the core coloring");
    for (int i = 0; i < static_cast<int>(members.size()); ++i) color[members[i]] = (*result.coloring)[i];
  }
  return make_certificate(g, Coloring(std::move(color)), core_cert.claimed, "0003core:" + core_cert.provenance);
}

}  // namespace torcol

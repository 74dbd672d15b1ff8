#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "torcol/embedding.hpp"
#include "torcol/graph.hpp"

namespace torcol {

/// Circulant G_n[S]: i ~ j whenever i - j = ±x (mod n) for some x in S.
struct CirculantSpec {
  int n = 0;
  std::vector<int> offsets;

  /// Throws std::invalid_argument unless offsets are distinct and in 1..n/2.
  void validate() const;
  /// An offset equal to n/2 contributes one neighbor instead of two.
  bool has_half_offset() const;
  /// "circ:13:1,2,3"
  std::string token() const;

  friend bool operator==(const CirculantSpec&, const CirculantSpec&) = default;
};

/// Right-diagonal shifted grid G[m x n, k]: m rows, n columns, shift k.
/// Vertex (i, j), 1-based, has index (i-1)*n + (j-1).
struct GridSpec {
  int rows = 0;
  int cols = 0;
  int shift = 1;

  /// True when the grid is a simple 6-regular graph (no loops, no doubled edges).
  bool valid() const;
  int vertex(int i, int j) const;
  /// "grid:5x5,1"
  std::string token() const;

  friend bool operator==(const GridSpec&, const GridSpec&) = default;
};

using SixRegularSpec = std::variant<GridSpec, CirculantSpec>;

Graph gen_circulant(const CirculantSpec& spec);

/// Grid with its canonical rotation (E, NE, N, W, SW, S at every vertex).
/// Throws std::invalid_argument naming the collapsed pair if the grid is not
/// simple 6-regular.
RotationSystem gen_grid(const GridSpec& spec);

Graph gen_six_regular(const SixRegularSpec& spec);
std::string spec_token(const SixRegularSpec& spec);

enum class NamedKind { K6, K7, H7, T11, C3vC5, K2vH7, Cycle, Complete };

struct NamedGraph {
  NamedKind kind = NamedKind::K7;
  int n = 0;  // only for Cycle / Complete
};

struct EmbeddedGraph {
  Graph graph;
  std::optional<RotationSystem> rotation;
};

EmbeddedGraph gen_named(const NamedGraph& name);

/// Hajós join of two K4 copies: a1 = 0 (shared with b1), a2..a4 = 1..3, b2..b4 = 4..6.
Graph hajos_h7();

/// Parsed generator token: k6, k7, h7, t11, c3vc5, k2vh7, c<n>, k<n>,
/// grid:<m>x<n>,<k>, circ:<n>:<s1,s2,...>
using FamilyToken = std::variant<NamedGraph, GridSpec, CirculantSpec>;

/// Throws std::invalid_argument on an unknown or malformed token.
FamilyToken parse_family_token(std::string_view token);
EmbeddedGraph generate(const FamilyToken& token);

// ---------------------------------------------------------------------------
// 6-regular toroidal graphs that are not 4-colorable.

enum class ExceptionKind {
  SmallGrid,         // item 1: one of six explicit grids
  OddTwoColumnGrid,  // item 2: G[m x 2, 1], m odd
  UnitReducible,     // item 3: G_n[1,r,r+1], n in {2r+2, 2r+3, 3r+1, 3r+2}, 4 does not divide n
  Circulant123,      // item 4: G_n[1,2,3], 4 does not divide n
  SporadicPair,      // item 5: G_n[1,r,r+1] for sixteen listed (r, n)
};

struct YehZhuException {
  int case_id = 0;
  ExceptionKind kind = ExceptionKind::SmallGrid;
  std::optional<GridSpec> grid;          // SmallGrid
  std::optional<CirculantSpec> circulant;  // SporadicPair
  std::string description;
};

std::vector<YehZhuException> yehzhu_exceptions();

/// The sixteen (r, n) pairs of item 5, in the order they are listed.
const std::vector<std::pair<int, int>>& sporadic_pairs();

/// Offsets reduced to 1..n/2 and sorted.
std::vector<int> normalize_offsets(int n, std::vector<int> offsets);

struct Classification {
  bool exception = false;
  int case_id = 0;       // 1..5 when exception
  int reduced_case = 0;  // case the graph was reduced to (4 for item 3), 0 if none
  /// Circulant form used by the coloring patterns: G_n[1,2,3] or G_n[1,r,r+1].
  std::optional<CirculantSpec> canonical;
  /// Isomorphism from the input graph onto gen_circulant(*canonical).
  std::vector<int> to_canonical;
  bool cross_checked = false;
  std::string note;
};

/// Item-by-item arithmetic first, then (orders <= 30) exact 4-colorability as
/// a cross-check. Throws std::invalid_argument for specs that are not simple
/// 6-regular triangulations, std::logic_error if the cross-check disagrees
/// and no listed exception explains it.
Classification classify_6regular(const SixRegularSpec& spec);

/// Cyclic-group view of a grid, if the grid's translation group is cyclic:
/// an equivalent circulant and the vertex map onto it.
struct CirculantView {
  CirculantSpec spec;
  std::vector<int> map;
};
std::optional<CirculantView> circulant_view(const SixRegularSpec& spec);

/// The six explicit grids of item 1.
std::vector<GridSpec> small_exception_grids();

}  // namespace torcol

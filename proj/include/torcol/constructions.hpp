#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "torcol/coloring.hpp"
#include "torcol/embedding.hpp"
#include "torcol/generators.hpp"
#include "torcol/graph.hpp"

namespace torcol {

/// A coloring together with the defect vector it is claimed to satisfy.
/// Every operation below runs verify_coloring before returning one.
struct Certificate {
  Coloring coloring;
  DefectVector claimed;
  std::string provenance;
  std::vector<Edge> mono_edges;
};

/// Thrown when an exact search inside a pipeline hits its node budget.
class Indeterminate : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Verifies and packages; throws std::logic_error when the coloring fails.
Certificate make_certificate(const Graph& g, Coloring c, DefectVector claimed, std::string provenance);

/// Colors of C_l (vertex i gets entry i) using 5 and 6 alternately; for odd l
/// the last vertex is 6, giving one monochromatic edge in class 6.
std::vector<int> color_cycle_56(int length);

/// The constructions below need a connected torus embedding (Euler genus 2)
/// and throw std::invalid_argument otherwise.
Certificate color_600001(const RotationSystem& rot);
Certificate color_00002(const RotationSystem& rot);
Certificate color_0004(const RotationSystem& rot);

/// (0,1)-coloring of a graph with maximum degree at most 2: class 1 is
/// independent, class 2 a matching. Throws std::invalid_argument otherwise.
Coloring color_01_paths_cycles(const Graph& h);

/// (2,2,2) by exact search, then class 1 is split into an independent class
/// and a matching.
Certificate color_0122(const Graph& g);

/// K7 -> (0,0,0,3), T11 -> (0,0,0,2), 4-colorable -> (0,0,0,0), listed
/// exceptions -> (0,0,0,1) by search (small grids) or patterns (circulants).
Certificate color_6regular(const SixRegularSpec& spec);

/// Graphs whose 6-core is a 6-regular toroidal triangulation: the core is
/// identified with a grid by isomorphism and colored by color_6regular; the
/// rest is filled in with proper colors 1..4 around the precolored core.
/// The claimed vector is the core's ((0,0,0,3) for K7, (0,0,0,2) for T11).
Certificate color_0003_high_min_degree(const Graph& g);

/// Grid spec isomorphic to a 6-regular graph, with the vertex map onto it.
struct GridMatch {
  GridSpec spec;
  std::vector<int> map;
};
std::optional<GridMatch> recognize_grid(const Graph& g);

}  // namespace torcol

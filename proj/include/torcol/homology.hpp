#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "torcol/embedding.hpp"

namespace torcol {

/// Z2 homology class of a closed walk, one bit per leftover edge of a
/// tree-cotree decomposition (two bits on the torus).
class HomologySignature {
 public:
  HomologySignature() = default;
  explicit HomologySignature(int length, std::uint64_t bits = 0) : length_(length), bits_(bits) {}

  int length() const { return length_; }
  std::uint64_t bits() const { return bits_; }
  bool bit(int i) const { return (bits_ >> i) & 1U; }
  bool is_zero() const { return bits_ == 0; }

  HomologySignature& operator^=(const HomologySignature& o) {
    bits_ ^= o.bits_;
    return *this;
  }
  friend HomologySignature operator^(HomologySignature a, const HomologySignature& b) { return a ^= b; }
  friend bool operator==(const HomologySignature&, const HomologySignature&) = default;

  /// Bit 0 first, e.g. "10".
  std::string to_string() const;

 private:
  int length_ = 0;
  std::uint64_t bits_ = 0;
};

/// Per-edge signatures from a tree-cotree decomposition: spanning-tree edges
/// are zero, each leftover edge carries its own unit bit, and cotree edges are
/// solved so every facial walk sums to zero.
struct EdgeSignatures {
  int genus = 0;
  std::vector<HomologySignature> per_edge;  // indexed like graph().edges()
  std::vector<int> tree_edges;
  std::vector<int> cotree_edges;
  std::vector<int> leftover_edges;

  /// Sum over the closed walk v0 v1 ... v_{l-1} v0.
  HomologySignature of_walk(const RotationSystem& rot, std::span<const int> closed_walk) const;
};

/// Throws std::invalid_argument on disconnected graphs or genus above 64.
EdgeSignatures edge_signatures(const RotationSystem& rot);

/// A simple cycle v0 v1 ... v_{l-1} (v_{l-1} adjacent to v0) and its signature.
struct CycleCert {
  std::vector<int> vertices;
  HomologySignature signature;

  int length() const { return static_cast<int>(vertices.size()); }
};

/// Checks the vertex sequence is a simple cycle of the graph and attaches its signature.
CycleCert make_cycle_cert(const RotationSystem& rot, const EdgeSignatures& sig, std::vector<int> vertices);

/// Torus only: a simple cycle is contractible iff its Z2 signature vanishes.
/// Throws std::invalid_argument when the embedding's Euler genus is not 2.
bool is_contractible(const RotationSystem& rot, const CycleCert& cycle);

/// Rotates/reflects a cycle to start at its smallest vertex, continuing toward
/// the smaller of its two neighbors.
std::vector<int> canonical_cycle(std::vector<int> cycle);

/// Shortest cycle with nonzero signature; ties broken by the canonical vertex
/// sequence. Requires Euler genus 2. The result is checked to be induced with
/// every vertex seeing at most three of its vertices (std::logic_error otherwise).
CycleCert shortest_noncontractible_cycle(const RotationSystem& rot);

}  // namespace torcol

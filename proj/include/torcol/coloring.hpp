#pragma once

#include <initializer_list>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "torcol/graph.hpp"

namespace torcol {

/// Bound on the maximum degree a color class may induce. A starred entry
/// (always with bound 1) further limits the class to a single induced edge.
struct DefectEntry {
  int bound = 0;
  bool star = false;

  friend bool operator==(const DefectEntry&, const DefectEntry&) = default;
};

class DefectVector {
 public:
  DefectVector() = default;
  explicit DefectVector(std::vector<DefectEntry> entries);
  /// Plain (unstarred) bounds.
  DefectVector(std::initializer_list<int> bounds);

  /// Parses "0,0,0,1*" (commas or whitespace). Throws std::invalid_argument.
  static DefectVector parse(std::string_view text);
  /// k classes with bound 0.
  static DefectVector proper(int k);

  int classes() const { return static_cast<int>(entries_.size()); }
  const DefectEntry& operator[](int i) const { return entries_[i]; }
  const std::vector<DefectEntry>& entries() const { return entries_; }

  /// "0,0,0,1*"
  std::string to_string(char separator = ',') const;

  /// True when every class of `other` is at least as permissive as ours.
  bool weaker_or_equal(const DefectVector& other) const;

  friend bool operator==(const DefectVector&, const DefectVector&) = default;

 private:
  std::vector<DefectEntry> entries_;
};

/// Total assignment vertex -> class index in 1..k.
struct Coloring {
  std::vector<int> classes;

  Coloring() = default;
  explicit Coloring(std::vector<int> c) : classes(std::move(c)) {}

  int size() const { return static_cast<int>(classes.size()); }
  int operator[](int v) const { return classes[v]; }
  int& operator[](int v) { return classes[v]; }

  friend bool operator==(const Coloring&, const Coloring&) = default;
};

struct ClassReport {
  int max_degree = 0;
  int mono_count = 0;
  std::vector<Edge> mono_edges;
};

struct Violation {
  int color_class = 0;  // 1-based
  /// Vertex whose induced degree exceeds the bound (degree violations).
  std::optional<int> vertex;
  /// Second monochromatic edge of a starred class (star violations).
  std::optional<Edge> edge;
  std::string message;
};

struct VerificationReport {
  bool valid = false;
  std::vector<ClassReport> per_class;  // index 0 is class 1
  std::optional<Violation> first_violation;

  int total_mono() const;
  std::vector<Edge> mono_edges() const;
};

/// The single judge for every coloring claim. Throws std::invalid_argument on
/// a partial coloring or a class index outside 1..k.
VerificationReport verify_coloring(const Graph& g, const Coloring& c, const DefectVector& d);

/// Monochromatic edges of `c` in lexicographic order.
std::vector<Edge> monochromatic_edges(const Graph& g, const Coloring& c);

}  // namespace torcol

#pragma once

#include <functional>
#include <string>
#include <vector>

#include "torcol/embedding.hpp"

namespace torcol {

struct CorpusEntry {
  std::string name;
  RotationSystem rot;
};

/// Every simple grid G[m x n, k] with m*n <= max_order, then K7 and T11.
std::vector<CorpusEntry> toroidal_corpus(int max_order = 49);

struct FactResult {
  std::string name;
  bool pass = false;
  std::string detail;
  double seconds = 0.0;
};

/// Machine-checked torus entries of the defect-list table, with the
/// non-colorability facts that make them tight. `progress` sees each result
/// as soon as it is computed.
std::vector<FactResult> table1_facts(const std::function<void(const FactResult&)>& progress = {});

}  // namespace torcol

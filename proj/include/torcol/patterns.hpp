#pragma once

#include <string>

#include "torcol/coloring.hpp"

namespace torcol {

/// Periodic coloring word over {a,b,c,d}; letter i colors circulant vertex i.
struct Pattern {
  std::string letters;

  int order() const { return static_cast<int>(letters.size()); }
  /// a -> 1, b -> 2, c -> 3, d -> 4.
  Coloring coloring() const;
};

/// Coloring of G_n[1,2,3]. Throws std::invalid_argument for n < 8 and n = 11
/// (K7 and T11 are handled separately).
Pattern pattern_circ123(int n);

struct TransportedPattern {
  Pattern pattern;
  int source_r = 0;  // r of the listed pair the letters come from
  int unit = 1;      // G_n[1,source_r,source_r+1] times unit gives G_n[1,r,r+1]
};

/// Coloring of G_n[1,r,r+1] for the sixteen sporadic pairs: nine listed words
/// and seven transports through a unit multiplier. Throws std::invalid_argument
/// for any other pair.
TransportedPattern pattern_exception(int r, int n);

/// If p is a coloring of G_n[S], the result colors G_n[unit * S]:
/// vertex y takes the letter of unit^{-1} * y.
Pattern transport_pattern(const Pattern& p, int unit);

}  // namespace torcol

#include "torcol/patterns.hpp"

#include <numeric>
#include <stdexcept>

#include "torcol/generators.hpp"

namespace torcol {

namespace {

std::string repeat(const std::string& word, int times) {
  std::string out;
  for (int i = 0; i < times; ++i) out += word;
  return out;
}

int inverse_mod(int a, int n) {
  for (int x = 1; x < n; ++x)
    if (static_cast<long long>(a) * x % n == 1) return x;
  throw std::invalid_argument(std::to_string(a) + " is not a unit modulo " + std::to_string(n));
}

struct Listed {
  int r;
  int n;
  std::string letters;
};

const std::vector<Listed>& listed_patterns() {
  static const std::vector<Listed> table = {
      {3, 13, "abacdcdbabcdd"},
      {6, 17, repeat("abcd", 4) + "d"},
      {3, 18, repeat("ababdcdcd", 2)},
      {7, 19, "dabcdadbcddbcdadbca"},
      {6, 25, repeat("abcd", 6) + "d"},
      {10, 25, repeat("abcd", 6) + "d"},
      {10, 26, repeat(repeat("abcd", 3) + "d", 2)},
      {6, 33, repeat("abcd", 8) + "d"},
      {10, 37, repeat("abcd", 9) + "d"},
  };
  return table;
}

struct Transport {
  int r;
  int n;
  int source_r;
  int unit;
};

const std::vector<Transport>& transports() {
  static const std::vector<Transport> table = {
      {3, 17, 6, 3}, {4, 17, 6, 5}, {3, 25, 6, 4}, {7, 25, 6, 7}, {9, 25, 10, 9}, {7, 26, 10, 7}, {14, 33, 6, 14},
  };
  return table;
}

}  // namespace

Coloring Pattern::coloring() const {
  Coloring out(std::vector<int>(letters.size()));
  for (std::size_t i = 0; i < letters.size(); ++i) {
    char ch = letters[i];
    if (ch < 'a' || ch > 'd') throw std::invalid_argument(std::string("pattern letter '") + ch + "' is not in a..d");
    out[static_cast<int>(i)] = ch - 'a' + 1;
  }
  return out;
}

Pattern pattern_circ123(int n) {
  if (n == 7) throw std::invalid_argument("G_7[1,2,3] is K7; use its (0,0,0,3) coloring");
  if (n == 11) throw std::invalid_argument("G_11[1,2,3] is T11; use its (0,0,0,2) coloring");
  if (n < 8) throw std::invalid_argument("pattern for G_n[1,2,3] needs n >= 8, got " + std::to_string(n));
  switch (n % 4) {
    case 0: return {repeat("abcd", n / 4)};
    case 1: return {repeat("abcd", (n - 5) / 4) + "abcdd"};
    case 2: return {repeat("abcd", (n - 10) / 4) + repeat("abcdd", 2)};
    default: return {repeat("abcd", (n - 15) / 4) + repeat("abcdd", 3)};
  }
}

Pattern transport_pattern(const Pattern& p, int unit) {
  const int n = p.order();
  const int inv = inverse_mod(((unit % n) + n) % n, n);
  Pattern out{std::string(static_cast<std::size_t>(n), 'a')};
  for (int y = 0; y < n; ++y) out.letters[y] = p.letters[static_cast<long long>(inv) * y % n];
  return out;
}

TransportedPattern pattern_exception(int r, int n) {
  for (const auto& row : listed_patterns())
    if (row.r == r && row.n == n) return {{row.letters}, r, 1};
  for (const auto& row : transports()) {
    if (row.r != r || row.n != n) continue;
    std::vector<int> scaled;
    for (int x : {1, row.source_r, row.source_r + 1}) scaled.push_back(x * row.unit);
    if (normalize_offsets(n, scaled) != std::vector<int>{1, r, r + 1})
      throw std::logic_error("unit " + std::to_string(row.unit) + " does not carry G_" + std::to_string(n) + "[1," +
                             std::to_string(row.source_r) + "," + std::to_string(row.source_r + 1) + "] to r = " +
                             std::to_string(r));
    for (const auto& src : listed_patterns())
      if (src.r == row.source_r && src.n == n) return {transport_pattern({src.letters}, row.unit), row.source_r, row.unit};
  }
  throw std::invalid_argument("no pattern for G_" + std::to_string(n) + "[1," + std::to_string(r) + "," +
                              std::to_string(r + 1) + "]");
}

}  // namespace torcol

#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "torcol/coloring.hpp"
#include "torcol/constructions.hpp"
#include "torcol/embedding.hpp"
#include "torcol/graph.hpp"

namespace torcol {

/// Malformed input text; the message carries the line number.
class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// All formats are 1-indexed and line oriented; '#' starts a comment line.
//
//   p edge <n> <m>        p rot <n> <m>            defects 0 0 0 1*
//   e <u> <v>             r <v> <u1> ... <ud>      provenance <tag>
//                                                  color <v> <class>
//                                                  mono <count> <u1> <v1> ...

std::string write_graph(const Graph& g);
Graph read_graph(std::string_view text);

/// Neighbors in counterclockwise order.
std::string write_rotation(const RotationSystem& rot);
RotationSystem read_rotation(std::string_view text);

struct CertificateFile {
  DefectVector defects;
  std::string provenance;
  Coloring coloring;
  std::vector<Edge> mono_edges;

  friend bool operator==(const CertificateFile&, const CertificateFile&) = default;
};

std::string write_certificate(const Certificate& cert);
std::string write_certificate(const CertificateFile& cert);
CertificateFile read_certificate(std::string_view text);

/// Graph from either an edge file or a rotation file (chosen by the header).
Graph read_any_graph(std::string_view text);
bool is_rotation_text(std::string_view text);

std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, std::string_view text);

}  // namespace torcol

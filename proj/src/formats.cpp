#include "torcol/formats.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <optional>
#include <sstream>

namespace torcol {

namespace {

struct Line {
  int number;
  std::vector<std::string_view> words;
};

std::vector<Line> tokenize(std::string_view text) {
  std::vector<Line> out;
  int number = 0;
  while (!text.empty()) {
    auto end = text.find('\n');
    std::string_view line = text.substr(0, end);
    text = end == std::string_view::npos ? std::string_view{} : text.substr(end + 1);
    ++number;
    Line parsed{number, {}};
    std::size_t i = 0;
    while (i < line.size()) {
      while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
      std::size_t j = i;
      while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
      if (j > i) parsed.words.push_back(line.substr(i, j - i));
      i = j;
    }
    if (parsed.words.empty() || parsed.words[0].front() == '#') continue;
    out.push_back(std::move(parsed));
  }
  return out;
}

[[noreturn]] void fail(int line, const std::string& what) {
  throw FormatError("line " + std::to_string(line) + ": " + what);
}

int to_int(const Line& line, std::size_t i) {
  if (i >= line.words.size()) fail(line.number, "missing field");
  std::string_view w = line.words[i];
  int value = 0;
  auto [ptr, ec] = std::from_chars(w.data(), w.data() + w.size(), value);
  if (ec != std::errc{} || ptr != w.data() + w.size()) fail(line.number, "expected an integer, got '" + std::string(w) + "'");
  return value;
}

int to_vertex(const Line& line, std::size_t i, int n) {
  int v = to_int(line, i);
  if (v < 1 || v > n) fail(line.number, "vertex " + std::to_string(v) + " outside 1.." + std::to_string(n));
  return v - 1;
}

std::pair<int, int> header(const std::vector<Line>& lines, std::string_view kind) {
  if (lines.empty()) throw FormatError("empty input");
  const Line& h = lines.front();
  if (h.words.size() != 4 || h.words[0] != "p" || h.words[1] != kind)
    fail(h.number, "expected header 'p " + std::string(kind) + " <n> <m>'");
  int n = to_int(h, 2), m = to_int(h, 3);
  if (n < 0 || m < 0) fail(h.number, "negative count");
  return {n, m};
}

}  // namespace

std::string write_graph(const Graph& g) {
  std::ostringstream out;
  out << "p edge " << g.order() << ' ' << g.size() << '\n';
  for (const Edge& e : g.edges()) out << "e " << e.u + 1 << ' ' << e.v + 1 << '\n';
  return out.str();
}

Graph read_graph(std::string_view text) {
  auto lines = tokenize(text);
  auto [n, m] = header(lines, "edge");
  std::vector<Edge> edges;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const Line& line = lines[i];
    if (line.words[0] != "e" || line.words.size() != 3) fail(line.number, "expected 'e <u> <v>'");
    int u = to_vertex(line, 1, n), v = to_vertex(line, 2, n);
    if (u == v) fail(line.number, "self-loop at " + std::to_string(u + 1));
    edges.emplace_back(u, v);
  }
  if (static_cast<int>(edges.size()) != m)
    throw FormatError("header announces " + std::to_string(m) + " edges, found " + std::to_string(edges.size()));
  Graph g(n, edges);
  if (g.size() != m) throw FormatError("duplicate edges in edge list");
  return g;
}

std::string write_rotation(const RotationSystem& rot) {
  std::ostringstream out;
  out << "p rot " << rot.order() << ' ' << rot.graph().size() << '\n';
  for (int v = 0; v < rot.order(); ++v) {
    out << "r " << v + 1;
    for (int w : rot.rotation(v)) out << ' ' << w + 1;
    out << '\n';
  }
  return out.str();
}

RotationSystem read_rotation(std::string_view text) {
  auto lines = tokenize(text);
  auto [n, m] = header(lines, "rot");
  std::vector<std::vector<int>> rotation(static_cast<std::size_t>(n));
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const Line& line = lines[i];
    if (line.words[0] != "r" || line.words.size() < 2) fail(line.number, "expected 'r <v> <u1> ... <ud>'");
    int v = to_vertex(line, 1, n);
    if (seen[v]) fail(line.number, "vertex " + std::to_string(v + 1) + " listed twice");
    seen[v] = 1;
    for (std::size_t j = 2; j < line.words.size(); ++j) rotation[v].push_back(to_vertex(line, j, n));
  }
  for (int v = 0; v < n; ++v)
    if (!seen[v]) throw FormatError("no rotation line for vertex " + std::to_string(v + 1));
  try {
    auto rot = RotationSystem::from_rotation(std::move(rotation));
    if (rot.graph().size() != m)
      throw FormatError("header announces " + std::to_string(m) + " edges, rotation has " +
                        std::to_string(rot.graph().size()));
    return rot;
  } catch (const std::invalid_argument& e) {
    throw FormatError(std::string("inconsistent rotation: ") + e.what());
  }
}

std::string write_certificate(const CertificateFile& cert) {
  std::ostringstream out;
  out << "defects " << cert.defects.to_string(' ') << '\n';
  if (!cert.provenance.empty()) out << "provenance " << cert.provenance << '\n';
  for (int v = 0; v < cert.coloring.size(); ++v) out << "color " << v + 1 << ' ' << cert.coloring[v] << '\n';
  out << "mono " << cert.mono_edges.size();
  for (const Edge& e : cert.mono_edges) out << ' ' << e.u + 1 << ' ' << e.v + 1;
  out << '\n';
  return out.str();
}

std::string write_certificate(const Certificate& cert) {
  return write_certificate(CertificateFile{cert.claimed, cert.provenance, cert.coloring, cert.mono_edges});
}

CertificateFile read_certificate(std::string_view text) {
  auto lines = tokenize(text);
  if (lines.empty()) throw FormatError("empty certificate");
  CertificateFile out;
  const Line& h = lines.front();
  if (h.words[0] != "defects" || h.words.size() < 2) fail(h.number, "expected 'defects d1 ... dk'");
  std::string spec;
  for (std::size_t i = 1; i < h.words.size(); ++i) spec += std::string(h.words[i]) + ",";
  spec.pop_back();
  try {
    out.defects = DefectVector::parse(spec);
  } catch (const std::invalid_argument& e) {
    fail(h.number, e.what());
  }
  std::vector<std::optional<int>> classes;
  bool mono_seen = false;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const Line& line = lines[i];
    if (mono_seen) fail(line.number, "content after the mono line");
    if (line.words[0] == "provenance") {
      if (line.words.size() != 2) fail(line.number, "expected 'provenance <tag>'");
      out.provenance = std::string(line.words[1]);
    } else if (line.words[0] == "color") {
      if (line.words.size() != 3) fail(line.number, "expected 'color <v> <class>'");
      int v = to_int(line, 1);
      if (v < 1) fail(line.number, "vertex must be positive");
      if (static_cast<int>(classes.size()) < v) classes.resize(static_cast<std::size_t>(v));
      if (classes[v - 1]) fail(line.number, "vertex " + std::to_string(v) + " colored twice");
      classes[v - 1] = to_int(line, 2);
    } else if (line.words[0] == "mono") {
      mono_seen = true;
      int count = to_int(line, 1);
      if (count < 0 || line.words.size() != 2 + 2 * static_cast<std::size_t>(count))
        fail(line.number, "mono count does not match the listed endpoints");
      for (int j = 0; j < count; ++j) {
        int u = to_int(line, 2 + 2 * j), v = to_int(line, 3 + 2 * j);
        if (u < 1 || v < 1 || u == v) fail(line.number, "bad monochromatic edge");
        out.mono_edges.emplace_back(u - 1, v - 1);
      }
    } else {
      fail(line.number, "unknown record '" + std::string(line.words[0]) + "'");
    }
  }
  out.coloring.classes.reserve(classes.size());
  for (std::size_t v = 0; v < classes.size(); ++v) {
    if (!classes[v]) throw FormatError("vertex " + std::to_string(v + 1) + " has no color");
    out.coloring.classes.push_back(*classes[v]);
  }
  return out;
}

bool is_rotation_text(std::string_view text) {
  auto lines = tokenize(text);
  return !lines.empty() && lines.front().words.size() >= 2 && lines.front().words[0] == "p" &&
         lines.front().words[1] == "rot";
}

Graph read_any_graph(std::string_view text) {
  if (is_rotation_text(text)) return read_rotation(text).graph();
  return read_graph(text);
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FormatError("cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_text_file(const std::filesystem::path& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw FormatError("cannot write " + path.string());
  out << text;
}

}  // namespace torcol

#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <filesystem>
#include <numeric>
#include <optional>
#include <random>
#include <sstream>

#include "torcol/coloring.hpp"
#include "torcol/constructions.hpp"
#include "torcol/embedding.hpp"
#include "torcol/facts.hpp"
#include "torcol/formats.hpp"
#include "torcol/generators.hpp"
#include "torcol/homology.hpp"
#include "torcol/isomorphism.hpp"
#include "torcol/solver.hpp"

namespace torcol {

namespace {

enum Exit { kOk = 0, kNo = 1, kUsage = 2, kIndeterminate = 3 };

/// A graph given either as a file (edge or rotation format) or a family token.
struct Input {
  Graph graph;
  std::optional<RotationSystem> rot;
  std::optional<FamilyToken> token;
};

Input load_input(const std::string& source) {
  Input in;
  if (std::filesystem::exists(source)) {
    std::string text = read_text_file(source);
    if (is_rotation_text(text)) {
      in.rot = read_rotation(text);
      in.graph = in.rot->graph();
    } else {
      in.graph = read_graph(text);
    }
    return in;
  }
  in.token = parse_family_token(source);
  auto eg = generate(*in.token);
  in.graph = std::move(eg.graph);
  in.rot = std::move(eg.rotation);
  return in;
}

const RotationSystem& need_rotation(const Input& in, const std::string& what) {
  if (!in.rot) throw std::invalid_argument(what + " needs a rotation system (p rot file or embedded family)");
  return *in.rot;
}

void print_report(std::ostream& os, const Graph& g, const Coloring& c, const DefectVector& d) {
  auto report = verify_coloring(g, c, d);
  os << "valid " << (report.valid ? "true" : "false") << '\n';
  os << "defects " << d.to_string() << '\n';
  for (int i = 0; i < static_cast<int>(report.per_class.size()); ++i)
    os << "class " << i + 1 << " max-degree " << report.per_class[i].max_degree << " mono "
       << report.per_class[i].mono_count << '\n';
  os << "mono " << report.total_mono();
  for (const Edge& e : report.mono_edges()) os << ' ' << e.u + 1 << '-' << e.v + 1;
  os << '\n';
  if (report.first_violation) {
    const auto& v = *report.first_violation;
    os << "violation class " << v.color_class;
    if (v.vertex) os << " vertex " << *v.vertex + 1;
    if (v.edge) os << " edge " << v.edge->u + 1 << '-' << v.edge->v + 1;
    os << '\n';
  }
}

/// The certificate goes to --output when given (report on stdout), otherwise
/// the certificate is printed and the report goes to stderr.
void emit_certificate(const std::string& output, const std::string& text, std::ostream& out, std::ostream& err,
                      const std::function<void(std::ostream&)>& report) {
  if (!output.empty()) {
    write_text_file(output, text);
    out << "certificate " << output << '\n';
    report(out);
  } else {
    out << text;
    report(err);
  }
}

RotationSystem relabel_rotation(const RotationSystem& rot, const std::vector<int>& perm) {
  std::vector<std::vector<int>> lists(static_cast<std::size_t>(rot.order()));
  for (int v = 0; v < rot.order(); ++v)
    for (int w : rot.rotation(v)) lists[perm[v]].push_back(perm[w]);
  return RotationSystem::from_rotation(std::move(lists));
}

std::optional<SixRegularSpec> six_regular_spec(const Input& in) {
  if (!in.token) return std::nullopt;
  if (const auto* g = std::get_if<GridSpec>(&*in.token)) return SixRegularSpec{*g};
  if (const auto* c = std::get_if<CirculantSpec>(&*in.token)) return SixRegularSpec{*c};
  const auto& named = std::get<NamedGraph>(*in.token);
  if (named.kind == NamedKind::K7) return SixRegularSpec{GridSpec{7, 1, 4}};
  if (named.kind == NamedKind::T11) return SixRegularSpec{GridSpec{11, 1, 4}};
  return std::nullopt;
}

Certificate color_six_regular_input(const Input& in) {
  if (auto spec = six_regular_spec(in)) {
    Graph g = gen_six_regular(*spec);
    if (g == in.graph) return color_6regular(*spec);
  }
  auto match = recognize_grid(in.graph);
  if (!match) throw std::invalid_argument("input is not a recognized 6-regular toroidal graph");
  Certificate on_grid = color_6regular(match->spec);
  Coloring c(std::vector<int>(static_cast<std::size_t>(in.graph.order())));
  for (int v = 0; v < in.graph.order(); ++v) c[v] = on_grid.coloring[match->map[v]];
  return make_certificate(in.graph, std::move(c), on_grid.claimed, on_grid.provenance + "@" + match->spec.token());
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Defective colorings of toroidal graphs", "torcol"};
  app.require_subcommand(1);

  std::string output;
  std::uint64_t seed = 1;
  std::optional<std::uint64_t> budget;

  auto* gen = app.add_subcommand("gen", "Write a graph family as an edge file (and rotation file)");
  std::string gen_token;
  bool shuffle = false, print_rot = false;
  gen->add_option("token", gen_token, "k6 k7 h7 t11 c3vc5 k2vh7 c<n> k<n> grid:<m>x<n>,<k> circ:<n>:<s,...>")
      ->required();
  gen->add_option("--output", output, "Path prefix; writes <prefix>.g and <prefix>.rot");
  gen->add_flag("--shuffle", shuffle, "Relabel vertices with a seeded random permutation");
  gen->add_flag("--rot", print_rot, "Print the rotation file instead of the edge file");
  gen->add_option("--seed", seed, "Seed for --shuffle");

  auto* solve_cmd = app.add_subcommand("solve", "Decide (d1,...,dk)-colorability exactly");
  std::string solve_input, defects_text;
  solve_cmd->add_option("graph", solve_input, "Edge/rotation file or family token")->required();
  solve_cmd->add_option("--defects", defects_text, "e.g. 0,0,0,1*")->required();
  solve_cmd->add_option("--budget", budget, "Search node budget");
  solve_cmd->add_option("--output", output, "Certificate path");

  auto* verify_cmd = app.add_subcommand("verify", "Check a certificate against a graph");
  std::string verify_graph, verify_cert;
  verify_cmd->add_option("graph", verify_graph)->required();
  verify_cmd->add_option("certificate", verify_cert)->required();

  auto* color_cmd = app.add_subcommand("color", "Run a constructive coloring");
  std::string color_input, construction;
  color_cmd->add_option("input", color_input, "Rotation/edge file or family token")->required();
  color_cmd->add_option("--construction", construction)
      ->required()
      ->check(CLI::IsMember({"600001", "00002", "0004", "0122", "6reg", "0003core"}));
  color_cmd->add_option("--output", output, "Certificate path");

  auto* info_cmd = app.add_subcommand("embed-info", "Faces, Euler genus and face degrees of an embedding");
  std::string info_input;
  bool kv = false;
  info_cmd->add_option("rotation", info_input)->required();
  info_cmd->add_flag("--kv", kv, "Print key=value lines");

  auto* sncc_cmd = app.add_subcommand("sncc", "Shortest non-contractible cycle of a torus embedding");
  std::string sncc_input;
  sncc_cmd->add_option("rotation", sncc_input)->required();

  auto* iso_cmd = app.add_subcommand("iso", "Isomorphism test with witness");
  std::string iso_a, iso_b;
  iso_cmd->add_option("first", iso_a)->required();
  iso_cmd->add_option("second", iso_b)->required();

  auto* table_cmd = app.add_subcommand("table1", "Machine-checked torus row of the defect-list table");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsage;
  }

  try {
    if (gen->parsed()) {
      auto token = parse_family_token(gen_token);
      auto eg = generate(token);
      if (shuffle) {
        std::vector<int> perm(static_cast<std::size_t>(eg.graph.order()));
        std::iota(perm.begin(), perm.end(), 0);
        std::mt19937_64 rng(seed);
        std::shuffle(perm.begin(), perm.end(), rng);
        eg.graph = relabel(eg.graph, perm);
        if (eg.rotation) eg.rotation = relabel_rotation(*eg.rotation, perm);
      }
      if (print_rot && !eg.rotation) throw std::invalid_argument(gen_token + " has no canonical embedding");
      if (output.empty()) {
        out << (print_rot ? write_rotation(*eg.rotation) : write_graph(eg.graph));
        return kOk;
      }
      write_text_file(output + ".g", write_graph(eg.graph));
      out << "graph " << output << ".g\n";
      if (eg.rotation) {
        write_text_file(output + ".rot", write_rotation(*eg.rotation));
        out << "rotation " << output << ".rot\n";
      }
      out << "vertices " << eg.graph.order() << "\nedges " << eg.graph.size() << '\n';
      return kOk;
    }

    if (solve_cmd->parsed()) {
      DefectVector d = DefectVector::parse(defects_text);
      Input in = load_input(solve_input);
      SolveOptions options;
      options.node_budget = budget;
      auto result = solve(in.graph, d, options);
      auto stats = [&](std::ostream& os) {
        os << "status " << to_string(result.status) << "\nnodes " << result.stats.nodes << "\nseconds "
           << result.stats.seconds << '\n';
      };
      if (result.status == SolveStatus::Sat) {
        auto cert = make_certificate(in.graph, *result.coloring, d, "solve");
        emit_certificate(output, write_certificate(cert), out, err, [&](std::ostream& os) {
          stats(os);
          os << "mono " << cert.mono_edges.size() << '\n';
        });
        return kOk;
      }
      stats(out);
      return result.status == SolveStatus::Unsat ? kNo : kIndeterminate;
    }

    if (verify_cmd->parsed()) {
      Input in = load_input(verify_graph);
      CertificateFile cert = read_certificate(read_text_file(verify_cert));
      if (cert.coloring.size() != in.graph.order())
        throw std::invalid_argument("certificate colors " + std::to_string(cert.coloring.size()) +
                                    " vertices, graph has " + std::to_string(in.graph.order()));
      auto report = verify_coloring(in.graph, cert.coloring, cert.defects);
      print_report(out, in.graph, cert.coloring, cert.defects);
      return report.valid ? kOk : kNo;
    }

    if (color_cmd->parsed()) {
      Input in = load_input(color_input);
      Certificate cert;
      if (construction == "600001") cert = color_600001(need_rotation(in, construction));
      else if (construction == "00002") cert = color_00002(need_rotation(in, construction));
      else if (construction == "0004") cert = color_0004(need_rotation(in, construction));
      else if (construction == "0122") cert = color_0122(in.graph);
      else if (construction == "6reg") cert = color_six_regular_input(in);
      else cert = color_0003_high_min_degree(in.graph);
      emit_certificate(output, write_certificate(cert), out, err, [&](std::ostream& os) {
        os << "construction " << construction << "\nprovenance " << cert.provenance << '\n';
        print_report(os, in.graph, cert.coloring, cert.claimed);
      });
      return kOk;
    }

    if (info_cmd->parsed()) {
      Input in = load_input(info_input);
      const auto& rot = need_rotation(in, "embed-info");
      auto faces = trace_faces(rot);
      const char sep = kv ? '=' : ' ';
      out << "vertices" << sep << rot.order() << '\n';
      out << "edges" << sep << rot.graph().size() << '\n';
      out << "faces" << sep << faces.size() << '\n';
      out << "genus" << sep << euler_genus(rot, faces) << '\n';
      for (auto [degree, count] : face_degree_histogram(faces))
        out << "face-degree-" << degree << sep << count << '\n';
      return kOk;
    }

    if (sncc_cmd->parsed()) {
      Input in = load_input(sncc_input);
      const auto& rot = need_rotation(in, "sncc");
      auto cycle = shortest_noncontractible_cycle(rot);
      const Graph& g = rot.graph();
      std::vector<char> on(static_cast<std::size_t>(g.order()), 0);
      for (int v : cycle.vertices) on[v] = 1;
      int most = 0;
      for (int v = 0; v < g.order(); ++v) {
        int hits = 0;
        for (int w : g.neighbors(v)) hits += on[w];
        most = std::max(most, hits);
      }
      out << "length " << cycle.length() << "\ncycle";
      for (int v : cycle.vertices) out << ' ' << v + 1;
      out << "\nsignature " << cycle.signature.to_string() << "\ninduced true\nmax-neighbors-on-cycle " << most
          << '\n';
      return kOk;
    }

    if (iso_cmd->parsed()) {
      Input a = load_input(iso_a), b = load_input(iso_b);
      auto iso = find_isomorphism(a.graph, b.graph);
      out << "isomorphic " << (iso ? "true" : "false") << '\n';
      if (iso) {
        out << "map";
        for (int v : *iso) out << ' ' << v + 1;
        out << '\n';
      }
      return iso ? kOk : kNo;
    }

    if (table_cmd->parsed()) {
      bool all = true;
      table1_facts([&](const FactResult& r) {
        all = all && r.pass;
        out << (r.pass ? "PASS " : "FAIL ") << r.name << ' ' << r.detail << '\n' << std::flush;
      });
      return all ? kOk : kNo;
    }
  } catch (const Indeterminate& e) {
    err << "indeterminate: " << e.what() << '\n';
    return kIndeterminate;
  } catch (const std::logic_error& e) {
    // std::invalid_argument derives from logic_error; both are reported as input errors.
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::runtime_error& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace torcol

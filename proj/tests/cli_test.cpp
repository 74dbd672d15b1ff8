#include <gtest/gtest.h>

#include <filesystem>
#include <random>
#include <sstream>

#include "cli.hpp"
#include "oracles.hpp"
#include "torcol/formats.hpp"
#include "torcol/generators.hpp"

using namespace torcol;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() / ("torcol_cli_" + std::to_string(::getpid()) + "_" +
                                        ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }
  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  fs::path dir_;
};

bool has_line(const std::string& text, const std::string& line) {
  std::istringstream in(text);
  for (std::string l; std::getline(in, l);)
    if (l == line) return true;
  return false;
}

}  // namespace

TEST(Formats, GraphRoundTrip) {
  std::mt19937_64 rng(6);
  for (int t = 0; t < 20; ++t) {
    Graph g = oracle::random_graph(1 + t, 0.3, rng);
    std::string text = write_graph(g);
    Graph back = read_graph(text);
    EXPECT_EQ(back, g);
    EXPECT_EQ(write_graph(back), text);
  }
}

TEST(Formats, GraphParsing) {
  Graph g = read_graph("# triangle\np edge 3 3\ne 1 2\n\ne 2 3\ne 1 3\n");
  EXPECT_EQ(g, complete_graph(3));
  EXPECT_THROW(read_graph("p edge 3 2\ne 1 2\n"), FormatError);
  EXPECT_THROW(read_graph("p edge 3 1\ne 1 4\n"), FormatError);
  EXPECT_THROW(read_graph("p edge 3 2\ne 1 2\ne 2 1\n"), FormatError);
  EXPECT_THROW(read_graph("p edge 3 1\ne 2 2\n"), FormatError);
  EXPECT_THROW(read_graph("e 1 2\n"), FormatError);
  EXPECT_THROW(read_graph("p edge 3 1\ne 1 x\n"), FormatError);
}

TEST(Formats, RotationRoundTrip) {
  for (const char* token : {"k7", "t11", "k6", "grid:4x5,3"}) {
    auto rot = *generate(parse_family_token(token)).rotation;
    std::string text = write_rotation(rot);
    auto back = read_rotation(text);
    EXPECT_EQ(back, rot);
    EXPECT_EQ(write_rotation(back), text);
  }
  EXPECT_THROW(read_rotation("p rot 2 1\nr 1 2\nr 2\n"), FormatError);
  EXPECT_THROW(read_rotation("p rot 2 1\nr 1 2\n"), FormatError);
  EXPECT_THROW(read_rotation("p rot 2 2\nr 1 2\nr 2 1\n"), FormatError);
}

TEST(Formats, CertificateRoundTrip) {
  CertificateFile cert{DefectVector::parse("0,0,0,1*"), "solve", Coloring({1, 2, 3, 4, 4}), {Edge(3, 4)}};
  std::string text = write_certificate(cert);
  EXPECT_EQ(text, "defects 0 0 0 1*\nprovenance solve\ncolor 1 1\ncolor 2 2\ncolor 3 3\ncolor 4 4\ncolor 5 4\nmono 1 4 5\n");
  auto back = read_certificate(text);
  EXPECT_EQ(back, cert);
  EXPECT_EQ(write_certificate(back), text);
  EXPECT_THROW(read_certificate("defects 0 2*\n"), FormatError);
  EXPECT_THROW(read_certificate("defects 0 0\ncolor 2 1\nmono 0\n"), FormatError);
  EXPECT_THROW(read_certificate("defects 0 0\ncolor 1 1\nmono 2 1 2\n"), FormatError);
}

TEST_F(CliTest, GenCirculant) {
  auto r = run({"gen", "circ:13:1,2,3"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(read_graph(r.out).size(), 39);
}

TEST_F(CliTest, GenWritesFiles) {
  auto r = run({"gen", "grid:5x5,1", "--output", path("g55")});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(fs::exists(path("g55.g")));
  auto rot = read_rotation(read_text_file(path("g55.rot")));
  EXPECT_EQ(euler_genus(rot), 2);
  auto t = run({"gen", "t11", "--output", path("t11")});
  ASSERT_EQ(t.code, 0);
  EXPECT_TRUE(has_line(t.out, "vertices 11"));
  EXPECT_TRUE(has_line(t.out, "edges 33"));
  EXPECT_TRUE(fs::exists(path("t11.rot")));
}

TEST_F(CliTest, GenErrors) {
  EXPECT_EQ(run({"gen", "nonsense"}).code, 2);
  EXPECT_EQ(run({"gen", "grid:5x2,1"}).code, 2);
  EXPECT_EQ(run({"gen", "h7", "--rot"}).code, 2);
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
}

TEST_F(CliTest, GenShuffleIsSeededAndIsomorphic) {
  auto a = run({"gen", "t11", "--shuffle", "--seed", "7"});
  auto b = run({"gen", "t11", "--shuffle", "--seed", "7"});
  auto c = run({"gen", "t11"});
  EXPECT_EQ(a.out, b.out);
  EXPECT_NE(a.out, c.out);
  write_text_file(path("a.g"), a.out);
  write_text_file(path("c.g"), c.out);
  EXPECT_EQ(run({"iso", path("a.g"), path("c.g")}).code, 0);
  auto rot = run({"gen", "t11", "--shuffle", "--seed", "7", "--rot"});
  EXPECT_EQ(euler_genus(read_rotation(rot.out)), 2);
}

TEST_F(CliTest, SolveExitCodes) {
  run({"gen", "k7", "--output", path("k7")});
  run({"gen", "t11", "--output", path("t11")});
  run({"gen", "c5", "--output", path("c5")});
  EXPECT_EQ(run({"solve", path("k7.g"), "--defects", "0,0,0,2"}).code, 1);
  auto t11 = run({"solve", path("t11.g"), "--defects", "0,0,0,2"});
  EXPECT_EQ(t11.code, 0);
  EXPECT_EQ(read_certificate(t11.out).coloring.size(), 11);
  auto c5 = run({"solve", path("c5.g"), "--defects", "0,1*", "--output", path("c5.cert")});
  EXPECT_EQ(c5.code, 0);
  EXPECT_TRUE(has_line(c5.out, "mono 1"));
  EXPECT_EQ(read_certificate(read_text_file(path("c5.cert"))).mono_edges.size(), 1u);
  EXPECT_EQ(run({"solve", path("c5.g"), "--defects", "0,2*"}).code, 2);
  EXPECT_EQ(run({"solve", path("missing.g"), "--defects", "0,1"}).code, 2);
  EXPECT_EQ(run({"solve", "grid:5x5,3", "--defects", "0,0,0,0", "--budget", "2"}).code, 3);
}

TEST_F(CliTest, VerifyExitCodes) {
  run({"gen", "c5", "--output", path("c5")});
  run({"solve", path("c5.g"), "--defects", "0,1*", "--output", path("ok.cert")});
  EXPECT_EQ(run({"verify", path("c5.g"), path("ok.cert")}).code, 0);

  auto cert = read_certificate(read_text_file(path("ok.cert")));
  auto tampered = cert;
  for (int v = 0; v < 5; ++v) tampered.coloring[v] = 2;
  write_text_file(path("bad.cert"), write_certificate(tampered));
  auto bad = run({"verify", path("c5.g"), path("bad.cert")});
  EXPECT_EQ(bad.code, 1);
  EXPECT_TRUE(has_line(bad.out, "valid false"));

  auto range = cert;
  range.coloring[0] = 3;
  write_text_file(path("range.cert"), write_certificate(range));
  EXPECT_EQ(run({"verify", path("c5.g"), path("range.cert")}).code, 2);

  run({"gen", "c7", "--output", path("c7")});
  EXPECT_EQ(run({"verify", path("c7.g"), path("ok.cert")}).code, 2);
}

TEST_F(CliTest, ColorConstructions) {
  run({"gen", "k7", "--output", path("k7")});
  auto k7 = run({"color", path("k7.rot"), "--construction", "00002"});
  ASSERT_EQ(k7.code, 0) << k7.err;
  EXPECT_EQ(read_certificate(k7.out).defects.to_string(), "0,0,0,0,2");

  run({"gen", "grid:6x6,1", "--output", path("grid6")});
  auto g6 = run({"color", path("grid6.rot"), "--construction", "0004", "--output", path("g6.cert")});
  ASSERT_EQ(g6.code, 0) << g6.err;
  EXPECT_TRUE(has_line(g6.out, "provenance 0004:cut-contract-path"));
  EXPECT_EQ(run({"verify", path("grid6.g"), path("g6.cert")}).code, 0);

  run({"gen", "grid:4x4,1", "--output", path("grid44")});
  auto g44 = run({"color", path("grid44.rot"), "--construction", "600001"});
  ASSERT_EQ(g44.code, 0);
  EXPECT_LE(read_certificate(g44.out).mono_edges.size(), 1u);

  EXPECT_EQ(run({"color", path("grid44.g"), "--construction", "600001"}).code, 2);
  EXPECT_EQ(run({"color", path("grid44.rot"), "--construction", "bogus"}).code, 2);
  EXPECT_EQ(run({"color", "c3vc5", "--construction", "6reg"}).code, 2);
}

TEST_F(CliTest, ColorSixRegularFromShuffledFile) {
  run({"gen", "circ:21:1,2,3", "--shuffle", "--seed", "3", "--output", path("c21")});
  auto r = run({"color", path("c21.g"), "--construction", "6reg", "--output", path("c21.cert")});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(run({"verify", path("c21.g"), path("c21.cert")}).code, 0);
  auto cert = read_certificate(read_text_file(path("c21.cert")));
  EXPECT_EQ(cert.defects.to_string(), "0,0,0,1");
  EXPECT_LE(cert.mono_edges.size(), 3u);
}

TEST_F(CliTest, ColorOtherConstructions) {
  EXPECT_EQ(run({"color", "k7", "--construction", "0122"}).code, 0);
  EXPECT_EQ(run({"color", "t11", "--construction", "0003core"}).code, 0);
  EXPECT_EQ(run({"color", "c9", "--construction", "0003core"}).code, 2);
}

TEST_F(CliTest, EmbedInfo) {
  auto t11 = run({"embed-info", "t11"});
  EXPECT_EQ(t11.code, 0);
  EXPECT_TRUE(has_line(t11.out, "faces 22"));
  EXPECT_TRUE(has_line(t11.out, "genus 2"));
  EXPECT_TRUE(has_line(t11.out, "face-degree-3 22"));
  auto grid = run({"embed-info", "grid:3x3,1", "--kv"});
  EXPECT_TRUE(has_line(grid.out, "faces=18"));
  EXPECT_TRUE(has_line(grid.out, "genus=2"));
  write_text_file(path("k4.rot"), "p rot 4 6\nr 1 2 4 3\nr 2 3 4 1\nr 3 1 4 2\nr 4 1 2 3\n");
  auto k4 = run({"embed-info", path("k4.rot")});
  EXPECT_TRUE(has_line(k4.out, "genus 0"));
  EXPECT_TRUE(has_line(k4.out, "faces 4"));
  write_text_file(path("bad.rot"), "p rot 2 1\nr 1 2\nr 2\n");
  EXPECT_EQ(run({"embed-info", path("bad.rot")}).code, 2);
}

TEST_F(CliTest, Sncc) {
  EXPECT_TRUE(has_line(run({"sncc", "grid:3x7,1"}).out, "length 3"));
  EXPECT_TRUE(has_line(run({"sncc", "k7"}).out, "length 3"));
  EXPECT_TRUE(has_line(run({"sncc", "grid:8x8,1"}).out, "length 8"));
  write_text_file(path("k4.rot"), "p rot 4 6\nr 1 2 4 3\nr 2 3 4 1\nr 3 1 4 2\nr 4 1 2 3\n");
  EXPECT_EQ(run({"sncc", path("k4.rot")}).code, 2);
}

TEST_F(CliTest, Iso) {
  auto yes = run({"iso", "circ:13:1,5,6", "circ:13:1,2,3"});
  EXPECT_EQ(yes.code, 0);
  EXPECT_TRUE(has_line(yes.out, "isomorphic true"));
  EXPECT_EQ(run({"iso", "c5", "k5"}).code, 1);
}

TEST_F(CliTest, Help) { EXPECT_EQ(run({"--help"}).code, 0); }

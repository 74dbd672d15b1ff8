#include <gtest/gtest.h>

#include <numeric>
#include <random>

#include "oracles.hpp"
#include "torcol/embedding.hpp"
#include "torcol/generators.hpp"
#include "torcol/isomorphism.hpp"
#include "torcol/solver.hpp"

using namespace torcol;

TEST(Circulant, Examples) {
  EXPECT_EQ(gen_circulant({7, {1, 2, 3}}), complete_graph(7));
  EXPECT_TRUE(are_isomorphic(gen_circulant({11, {1, 2, 3}}), gen_named({NamedKind::T11}).graph));
  EXPECT_EQ(gen_circulant({9, {1}}), cycle_graph(9));
}

TEST(Circulant, DegreesAndHalfOffset) {
  Graph g = gen_circulant({10, {2, 5}});
  for (int v = 0; v < 10; ++v) EXPECT_EQ(g.degree(v), 3);
  EXPECT_TRUE((CirculantSpec{10, {2, 5}}).has_half_offset());
  EXPECT_THROW(gen_circulant({10, {6}}), std::invalid_argument);
  EXPECT_THROW(gen_circulant({10, {2, 2}}), std::invalid_argument);
  EXPECT_THROW(gen_circulant({10, {0}}), std::invalid_argument);
}

TEST(Circulant, RotationByOneIsAutomorphism) {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 30; ++t) {
    int n = 5 + t % 16;
    std::vector<int> offs;
    for (int x = 1; x <= n / 2; ++x)
      if (rng() % 3 == 0) offs.push_back(x);
    if (offs.empty()) offs.push_back(1);
    Graph g = gen_circulant({n, offs});
    std::vector<int> shift(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) shift[v] = (v + 1) % n;
    EXPECT_TRUE(is_isomorphism(g, g, shift));
  }
}

TEST(Grid, FiveByFive) {
  auto rot = gen_grid({5, 5, 1});
  EXPECT_EQ(rot.order(), 25);
  EXPECT_EQ(rot.graph().size(), 75);
  auto faces = trace_faces(rot);
  EXPECT_EQ(faces.size(), 50u);
  EXPECT_EQ(euler_genus(rot), 2);
}

TEST(Grid, SingleColumnIsCirculant) {
  EXPECT_TRUE(are_isomorphic(gen_grid({11, 1, 4}).graph(), gen_circulant({11, {1, 2, 3}})));
}

TEST(Grid, OddTwoColumnRejected) {
  for (int m : {3, 5, 7, 9}) {
    EXPECT_FALSE((GridSpec{m, 2, 1}).valid());
    try {
      gen_grid({m, 2, 1});
      FAIL() << m;
    } catch (const std::invalid_argument& e) {
      EXPECT_NE(std::string(e.what()).find("joined twice"), std::string::npos) << e.what();
    }
  }
}

TEST(Grid, NeighborsFollowCoordinateRule) {
  GridSpec spec{4, 5, 3};
  auto rot = gen_grid(spec);
  // Interior vertex (2,3): E (2,4), NE (1,4), N (1,3), W (2,2), SW (3,2), S (3,3).
  std::vector<int> expect{spec.vertex(2, 4), spec.vertex(1, 4), spec.vertex(1, 3),
                          spec.vertex(2, 2), spec.vertex(3, 2), spec.vertex(3, 3)};
  auto r = rot.rotation(spec.vertex(2, 3));
  EXPECT_EQ(std::vector<int>(r.begin(), r.end()), expect);
  // Seam at column n: E of (2,5) is (2+3-1, 1), NE is (2+3-2, 1).
  auto seam = rot.rotation(spec.vertex(2, 5));
  EXPECT_EQ(seam[0], spec.vertex(4, 1));
  EXPECT_EQ(seam[1], spec.vertex(3, 1));
}

TEST(Grid, AllSmallGridsAreTorusTriangulations) {
  int checked = 0;
  for (int m = 1; m <= 8; ++m)
    for (int n = 1; n <= 8; ++n)
      for (int k = 1; k <= m; ++k) {
        GridSpec spec{m, n, k};
        if (!spec.valid()) {
          EXPECT_THROW(gen_grid(spec), std::invalid_argument);
          continue;
        }
        auto rot = gen_grid(spec);
        auto faces = trace_faces(rot);
        EXPECT_EQ(euler_genus(rot, faces), 2) << spec.token();
        for (const auto& f : faces) EXPECT_EQ(f.degree(), 3) << spec.token();
        EXPECT_EQ(rot.graph().size(), 3 * m * n);
        ++checked;
      }
  EXPECT_GT(checked, 200);
}

TEST(Grid, SingleColumnMatchesCirculantFamily) {
  for (int m = 3; m <= 12; ++m)
    for (int i = 3; i <= m; ++i) {
      GridSpec spec{m, 1, i};
      if (!spec.valid()) continue;
      CirculantSpec circ{m, normalize_offsets(m, {1, i - 2, i - 1})};
      EXPECT_TRUE(are_isomorphic(gen_grid(spec).graph(), gen_circulant(circ))) << spec.token();
    }
}

TEST(Circulant, UnitMultiplierGivesIsomorphicGraph) {
  std::mt19937_64 rng(17);
  for (int t = 0; t < 50; ++t) {
    int n = 5 + static_cast<int>(rng() % 16);
    std::vector<int> s;
    for (int x = 1; x <= n / 2; ++x)
      if (rng() % 3 == 0) s.push_back(x);
    if (s.empty()) s.push_back(1 + static_cast<int>(rng() % (n / 2)));
    int p;
    do p = 1 + static_cast<int>(rng() % (n - 1));
    while (std::gcd(p, n) != 1);
    std::vector<int> ps;
    for (int x : s) ps.push_back(x * p);
    EXPECT_TRUE(are_isomorphic(gen_circulant({n, s}), gen_circulant({n, normalize_offsets(n, ps)})));
  }
}

TEST(Named, H7) {
  Graph h7 = gen_named({NamedKind::H7}).graph;
  EXPECT_EQ(h7.order(), 7);
  EXPECT_EQ(h7.size(), 11);
  EXPECT_EQ(enumerate_oracle(h7, DefectVector::proper(3)).status, SolveStatus::Unsat);
  auto four = enumerate_oracle(h7, DefectVector::proper(4));
  EXPECT_EQ(four.status, SolveStatus::Sat);
}

TEST(Named, JoinsAndT11) {
  auto k2h7 = gen_named({NamedKind::K2vH7});
  EXPECT_EQ(k2h7.graph.order(), 9);
  EXPECT_EQ(k2h7.graph.size(), 26);
  auto t11 = gen_named({NamedKind::T11});
  ASSERT_TRUE(t11.rotation);
  EXPECT_EQ(t11.graph.order(), 11);
  EXPECT_EQ(t11.graph.size(), 33);
  auto faces = trace_faces(*t11.rotation);
  EXPECT_EQ(faces.size(), 22u);
  for (const auto& f : faces) EXPECT_EQ(f.degree(), 3);
  auto k6 = gen_named({NamedKind::K6});
  EXPECT_EQ(k6.graph, complete_graph(6));
  ASSERT_TRUE(k6.rotation);
  EXPECT_EQ(euler_genus(*k6.rotation), 2);
  EXPECT_EQ(trace_faces(*k6.rotation).size(), 9u);
}

TEST(Tokens, ParseAll) {
  for (const char* t : {"k6", "k7", "h7", "t11", "c3vc5", "k2vh7", "c9", "k5", "grid:5x5,1", "circ:13:1,2,3"})
    EXPECT_NO_THROW(generate(parse_family_token(t))) << t;
  for (const char* t : {"", "k", "grid:5x5", "grid:0x5,1", "circ:13", "circ:13:1,,2", "foo", "c2", "grid:5x2,7"})
    EXPECT_THROW(generate(parse_family_token(t)), std::invalid_argument) << t;
  EXPECT_EQ(generate(parse_family_token("circ:13:1,2,3")).graph.size(), 39);
}

TEST(YehZhu, ListContents) {
  auto list = yehzhu_exceptions();
  bool has_grid = false, has_pair = false, has_family = false;
  int pairs = 0;
  for (const auto& e : list) {
    if (e.grid == GridSpec{5, 5, 3}) has_grid = true;
    if (e.circulant == CirculantSpec{33, {1, 14, 15}}) has_pair = true;
    if (e.kind == ExceptionKind::Circulant123) has_family = true;
    if (e.kind == ExceptionKind::SporadicPair) ++pairs;
  }
  EXPECT_TRUE(has_grid);
  EXPECT_TRUE(has_pair);
  EXPECT_TRUE(has_family);
  EXPECT_EQ(pairs, 16);
  EXPECT_EQ(small_exception_grids().size(), 6u);
}

TEST(Classify, Examples) {
  auto a = classify_6regular(CirculantSpec{13, {1, 5, 6}});
  EXPECT_TRUE(a.exception);
  EXPECT_EQ(a.case_id, 3);
  EXPECT_EQ(a.reduced_case, 4);
  ASSERT_TRUE(a.canonical);
  EXPECT_EQ(a.canonical->offsets, (std::vector<int>{1, 2, 3}));
  EXPECT_TRUE(a.cross_checked);

  auto b = classify_6regular(CirculantSpec{12, {1, 2, 3}});
  EXPECT_FALSE(b.exception);

  auto c = classify_6regular(GridSpec{3, 3, 2});
  EXPECT_TRUE(c.exception);
  EXPECT_EQ(c.case_id, 1);
}

TEST(Classify, RejectsNonSixRegular) {
  EXPECT_THROW(classify_6regular(GridSpec{5, 2, 1}), std::invalid_argument);
  EXPECT_THROW(classify_6regular(CirculantSpec{12, {1, 2, 6}}), std::invalid_argument);
  EXPECT_THROW(classify_6regular(CirculantSpec{12, {1, 2}}), std::invalid_argument);
  EXPECT_THROW(classify_6regular(CirculantSpec{20, {1, 3, 7}}), std::invalid_argument);
}

TEST(Classify, SporadicPairsAndTheirUnits) {
  for (auto [r, n] : sporadic_pairs()) {
    auto c = classify_6regular(CirculantSpec{n, {1, r, r + 1}});
    EXPECT_TRUE(c.exception) << r << "," << n;
    EXPECT_EQ(c.case_id, 5) << r << "," << n;
  }
  // Unit 2 carries {1,3,4} mod 17 to {2,6,8}, a non-literal form of the same graph.
  auto scaled = classify_6regular(CirculantSpec{17, {2, 6, 8}});
  EXPECT_EQ(scaled.case_id, 5);
}

TEST(Classify, EveryGridUpToThirtyAgreesWithExactSearch) {
  // classify_6regular cross-checks itself by exact search up to order 30 and
  // throws on disagreement; this sweeps the whole range.
  int exceptions = 0, total = 0;
  for (int m = 1; m <= 30; ++m)
    for (int n = 1; m * n <= 30; ++n)
      for (int k = 1; k <= m; ++k) {
        GridSpec spec{m, n, k};
        if (!spec.valid()) continue;
        auto c = classify_6regular(spec);
        EXPECT_TRUE(c.cross_checked);
        exceptions += c.exception;
        ++total;
      }
  EXPECT_GT(total, 100);
  EXPECT_GT(exceptions, 10);
}

TEST(CirculantView, MapsGridsOntoCirculants) {
  auto view = circulant_view(GridSpec{5, 5, 3});
  ASSERT_TRUE(view);
  EXPECT_TRUE(is_isomorphism(gen_grid({5, 5, 3}).graph(), gen_circulant(view->spec), view->map));
  // gcd(m, n, k-1) = 2: the translation group is not cyclic.
  EXPECT_FALSE(circulant_view(GridSpec{4, 4, 1}));
}

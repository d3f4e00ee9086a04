#include <gtest/gtest.h>

#include "hcpack/coloring.hpp"
#include "hcpack/formulas.hpp"
#include "hcpack/validators.hpp"
#include "oracles.hpp"

namespace hcpack {
namespace {

std::vector<Edge> bowtie() { return {{0, 1}, {1, 2}, {0, 2}, {0, 3}, {3, 4}, {0, 4}}; }

TEST(CheckResultTest, FailNeedsWitness) {
  EXPECT_THROW(CheckResult::fail("x", "no witness", {}), ContractViolation);
  EXPECT_EQ(CheckResult::skipped("x", "why").verdict, Verdict::kSkipped);
  ValidatorReport r;
  r.add(CheckResult::pass("a"));
  ASSERT_NE(r.find("a"), nullptr);
  EXPECT_EQ(r.find("b"), nullptr);
  EXPECT_EQ(to_string(Verdict::kSkipped), "skipped");
}

TEST(ClassifySmallTest, Thresholds) {
  const Graph g(4096, std::vector<Edge>{});
  const auto sc = classify_small(g, 4);
  EXPECT_EQ(sc.threshold, 0);
  EXPECT_TRUE(sc.vacuous());
  EXPECT_TRUE(sc.small_vertices.empty());

  const Graph c(6, oracle::cycle_graph(6));
  const auto none = classify_small(c, 4, 0.5);  // floor(ln 6 / 0.5) = 3 > 2
  EXPECT_EQ(none.threshold, 3);
  EXPECT_EQ(none.small_vertices.size(), 6u);
  const auto all_large = classify_small(c, 4, 1.0);  // threshold 1
  EXPECT_FALSE(all_large.vacuous());
  EXPECT_TRUE(all_large.small_vertices.empty());
}

TEST(SmallStructuresTest, VacuousIsSkipped) {
  const Graph g(4096, std::vector<Edge>{});
  EXPECT_EQ(find_small_structures(g, classify_small(g, 4)).verdict, Verdict::kSkipped);
}

TEST(SmallStructuresTest, TriangleFreeWithoutSmallPasses) {
  const Graph g(6, oracle::cycle_graph(6));
  EXPECT_EQ(find_small_structures(g, classify_small(g, 4, 1.0)).verdict, Verdict::kPass);
}

TEST(SmallStructuresTest, TwoTrianglesSharingAVertex) {
  const Graph g(5, bowtie());
  const auto r = find_small_structures(g, classify_small(g, 4, 1.0));
  ASSERT_EQ(r.verdict, Verdict::kFail);
  ASSERT_EQ(r.witness.size(), 6u);
  std::set<std::uint64_t> a(r.witness.begin(), r.witness.begin() + 3), b(r.witness.begin() + 3, r.witness.end());
  EXPECT_NE(a, b);
  EXPECT_TRUE(a.contains(0) && b.contains(0));
}

TEST(SmallStructuresTest, ShortPathBetweenSmallVertices) {
  // Two leaves on a path of length 4 are small for threshold 2.
  const Graph g(5, oracle::path_graph(5));
  const auto sc = classify_small(g, 4, std::log(5.0) / 2.5);
  ASSERT_EQ(sc.threshold, 2);
  ASSERT_EQ(sc.small_vertices, (std::vector<Vertex>{0, 4}));
  const auto r = find_small_structures(g, sc);
  ASSERT_EQ(r.verdict, Verdict::kFail);
  EXPECT_EQ(r.witness.size(), 5u);
}

TEST(SmallStructuresTest, ShortCycleThroughSmallVertex) {
  // C4 0-1-2-3 hung on a triangle 4-5-6; only vertex 0 has degree 2.
  std::vector<Edge> e{{0, 1}, {1, 2}, {2, 3}, {3, 0}, {1, 4}, {2, 5}, {3, 6}, {4, 5}, {5, 6}, {4, 6}};
  const Graph g(7, e);
  const auto sc = classify_small(g, 4, std::log(7.0) / 3.5);
  ASSERT_EQ(sc.threshold, 3);
  ASSERT_EQ(sc.small_vertices, (std::vector<Vertex>{0}));
  const auto r = find_small_structures(g, sc);
  ASSERT_EQ(r.verdict, Verdict::kFail);
  EXPECT_EQ(r.detail, "4-cycle through a small vertex");
  EXPECT_EQ(r.witness[0], 0u);
}

TEST(DegreeTailTest, RegularGraphPasses) {
  // 4-regular circulant; range [3, 3] contains no vertex.
  std::vector<Edge> e;
  for (Vertex i = 0; i < 50; ++i) {
    e.emplace_back(i, (i + 1) % 50);
    e.emplace_back(i, (i + 2) % 50);
  }
  const Graph g(50, e);
  const auto r = degree_tail_check(g, 4, 1.0, std::log(50.0) / 3.5);
  EXPECT_EQ(r.verdict, Verdict::kPass);
  EXPECT_EQ(degree_tail_check(g, 4, 1.0).verdict, Verdict::kSkipped);
}

TEST(DegreeTailTest, TooManyLowDegreeVertices) {
  const Graph g(50, oracle::cycle_graph(50));  // 50 vertices of degree 2
  const auto r = degree_tail_check(g, 3, 0.0, std::log(50.0) / 2.5);
  ASSERT_EQ(r.verdict, Verdict::kFail);
  EXPECT_EQ(r.witness.size(), 50u);
}

TEST(MaxDegreeTest, Cases) {
  EXPECT_EQ(max_degree_check(Graph(100, std::vector<Edge>{})).verdict, Verdict::kPass);
  std::vector<Edge> star;
  for (Vertex v = 1; v < 200; ++v) star.emplace_back(0, v);
  const auto r = max_degree_check(Graph(200, star));
  ASSERT_EQ(r.verdict, Verdict::kFail);
  EXPECT_EQ(r.witness, (std::vector<std::uint64_t>{0}));
}

TEST(ColorListTest, Cases) {
  // Vertex 0 has four edges in four colors; vertex 1..4 have one edge each.
  const Graph g(5, std::vector<Edge>{{0, 1}, {0, 2}, {0, 3}, {0, 4}});
  std::vector<std::uint32_t> cd(5 * 4, 0);
  for (int c = 0; c < 4; ++c) {
    cd[c] = 1;
    cd[(c + 1) * 4 + c] = 1;
  }
  EXPECT_EQ(color_list_check(g, cd, 4).verdict, Verdict::kPass);
  cd[0] = 2;
  cd[1] = 0;
  EXPECT_EQ(color_list_check(g, cd, 4).verdict, Verdict::kFail);  // degree 4, one color missing

  // Degree q-1 needs exactly one missing color.
  const Graph h(4, std::vector<Edge>{{0, 1}, {0, 2}, {0, 3}});
  std::vector<std::uint32_t> hd(4 * 4, 0);
  hd[0] = hd[1] = hd[2] = 1;
  hd[4 + 0] = hd[8 + 1] = hd[12 + 2] = 1;
  EXPECT_EQ(color_list_check(h, hd, 4).verdict, Verdict::kPass);
  hd[1] = 0;
  hd[0] = 2;
  const auto r = color_list_check(h, hd, 4);
  ASSERT_EQ(r.verdict, Verdict::kFail);
  EXPECT_EQ(r.witness, (std::vector<std::uint64_t>{0}));
  EXPECT_THROW(color_list_check(h, std::vector<std::uint32_t>(3, 0), 4), InvalidParameter);
}

TEST(StarDegreeTest, Tiers) {
  MergedColoring m;
  m.n = 4;
  m.sigma = 2;
  m.classes.resize(2);
  m.classes[0].star = oracle::cycle_graph(4);
  m.classes[1].star = {{0, 2}, {1, 3}, {0, 3}, {1, 2}};
  std::vector<std::uint32_t> sd(4 * 4, 1);
  const Graph g(4, std::vector<Edge>{});
  const auto sc = classify_small(g, 4);
  auto r = star_degree_check(m, sd, 4, sc, 1);
  ASSERT_EQ(r.size(), 2u);
  EXPECT_EQ(r[0].verdict, Verdict::kPass);
  EXPECT_EQ(r[1].verdict, Verdict::kPass);

  m.classes[1].star = {{0, 2}, {1, 3}, {0, 3}, {0, 1}};  // vertex 2 has merged star degree 1
  sd[2 * 4 + 3] = 0;
  r = star_degree_check(m, sd, 4, sc, 1);
  ASSERT_EQ(r[0].verdict, Verdict::kFail);
  EXPECT_EQ(r[0].witness, (std::vector<std::uint64_t>{1, 2}));
  ASSERT_EQ(r[1].verdict, Verdict::kFail);
  EXPECT_EQ(r[1].witness, (std::vector<std::uint64_t>{2, 3}));
}

TEST(FullSizeTest, Cases) {
  auto r = full_size_check(1000, 4, 1000.0, 1000, 1000, 0.9);
  EXPECT_EQ(r[0].verdict, Verdict::kPass);
  EXPECT_EQ(r[1].verdict, Verdict::kPass);
  r = full_size_check(4096, 4, 0.1, 4096, 0, 0.9);
  EXPECT_EQ(r[0].verdict, Verdict::kSkipped);
  EXPECT_EQ(r[1].verdict, Verdict::kFail);
}

TEST(PoolSizeTest, EmptyBoostersFail) {
  MergedColoring m;
  m.n = 64;
  m.sigma = 2;
  m.classes.resize(2);
  for (auto& cls : m.classes) cls.star = oracle::complete_graph(64);
  EXPECT_EQ(pool_size_check(m, 4).verdict, Verdict::kFail);
  for (auto& cls : m.classes) cls.boosters = oracle::cycle_graph(64);  // 64 >= 64 ln 64 / 32 = 8.3
  EXPECT_EQ(pool_size_check(m, 4).verdict, Verdict::kPass);
}

TEST(ExpansionTest, CompleteGraphExpands) {
  Rng rng(1);
  const Graph g(60, oracle::complete_graph(60));
  const auto r = expansion_sampler(g, ExpansionOptions{.alpha = 0.3, .samples = 200}, rng);
  EXPECT_EQ(r.verdict, Verdict::kPass) << r.detail;
}

TEST(ExpansionTest, FourCycleComponentFails) {
  Rng rng(1);
  auto e = oracle::complete_graph(40);
  for (Vertex i = 0; i < 4; ++i) e.emplace_back(40 + i, 40 + (i + 1) % 4);
  const Graph g(44, e);
  const auto r = expansion_sampler(g, ExpansionOptions{.alpha = 0.1, .samples = 100}, rng);
  ASSERT_EQ(r.verdict, Verdict::kFail);
  for (auto v : r.witness) EXPECT_GE(v, 40u);
}

TEST(ExpansionTest, LowDegreeSingletonFails) {
  Rng rng(1);
  auto e = oracle::complete_graph(30);
  e.emplace_back(0, 30);
  const Graph g(31, e);
  const auto r = expansion_sampler(g, ExpansionOptions{.alpha = 0.1}, rng);
  ASSERT_EQ(r.verdict, Verdict::kFail);
  EXPECT_EQ(r.witness, (std::vector<std::uint64_t>{30}));
}

TEST(ExpansionTest, VacuousAlphaIsSkipped) {
  Rng rng(1);
  const Graph g(4096, oracle::cycle_graph(4096));
  EXPECT_EQ(expansion_sampler(g, ExpansionOptions{.alpha = formulas::expansion_alpha(4)}, rng).verdict,
            Verdict::kSkipped);
}

TEST(ConnectivityTest, Cases) {
  EXPECT_EQ(connectivity_check(Graph(10, oracle::path_graph(10))).verdict, Verdict::kPass);
  auto e = oracle::cycle_graph(5);
  for (Vertex i = 0; i < 3; ++i) e.emplace_back(5 + i, 5 + (i + 1) % 3);
  const auto r = connectivity_check(Graph(8, e));
  ASSERT_EQ(r.verdict, Verdict::kFail);
  EXPECT_EQ(r.witness, (std::vector<std::uint64_t>{5, 6, 7}));
}

TEST(PostFreezeTest, Cases) {
  const Vertex n = 100;
  const auto edges = oracle::complete_graph(n);
  const Graph g(n, edges);
  std::vector<std::uint32_t> zero(n, 0);
  const FullSet everyone(std::vector<bool>(n, true), 0, 1);
  const auto sc = classify_small(g, 4);
  auto r = post_teps_degree_check(g, zero, edges, everyone, sc, 1000.0);
  ASSERT_EQ(r.size(), 2u);
  EXPECT_EQ(r[0].verdict, Verdict::kPass);
  EXPECT_EQ(r[1].verdict, Verdict::kPass);

  const FullSet nobody(std::vector<bool>(n, false), 0, 1);
  r = post_teps_degree_check(g, zero, edges, nobody, sc, 1000.0);
  EXPECT_EQ(r[0].verdict, Verdict::kFail);

  r = post_teps_degree_check(g, zero, edges, everyone, sc, 0.1);
  EXPECT_EQ(r[0].verdict, Verdict::kSkipped);
  EXPECT_EQ(r[1].verdict, Verdict::kSkipped);
}

TEST(HittingWindowTest, Cases) {
  EXPECT_EQ(hitting_window_check(4096, 4, 30000, 1.0).verdict, Verdict::kSkipped);
  const double omega = formulas::default_omega(10000);
  const auto lo = formulas::snapshot_time(10000, 4, omega);
  const auto hi = formulas::window_upper(10000, 4, omega);
  EXPECT_EQ(hitting_window_check(10000, 4, static_cast<std::uint64_t>(lo) + 1, omega).verdict, Verdict::kPass);
  EXPECT_EQ(hitting_window_check(10000, 4, static_cast<std::uint64_t>(hi) + 1, omega).verdict, Verdict::kFail);
  EXPECT_EQ(hitting_window_check(10000, 4, static_cast<std::uint64_t>(lo) - 1, omega).verdict, Verdict::kFail);
}

}  // namespace
}  // namespace hcpack

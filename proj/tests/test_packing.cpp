#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "pack2dom/enumeration.hpp"
#include "pack2dom/packing.hpp"

using namespace pack2dom;

TEST(Packing, Predicate) {
  const Graph g = named::star(3);
  const std::vector<Edge> two{{0, 1}, {0, 2}};
  const std::vector<Edge> three{{0, 1}, {0, 2}, {0, 3}};
  EXPECT_TRUE(is_2packing(g, two));
  EXPECT_FALSE(is_2packing(g, three));
  const std::vector<Edge> foreign{{1, 2}};
  EXPECT_THROW(is_2packing(g, foreign), GraphError);
  EXPECT_THROW(make_two_packing(g, three), GraphError);
}

TEST(Packing, KnownValues) {
  for (int n = 3; n <= 8; ++n) EXPECT_EQ(nu2_matching(named::complete(n)).nu2, n);
  EXPECT_EQ(nu2_matching(named::star(6)).nu2, 2);
  EXPECT_EQ(nu2_matching(named::path(7)).nu2, 6);
  EXPECT_EQ(nu2_matching(named::cycle(7)).nu2, 7);
  EXPECT_EQ(nu2_matching(named::petersen()).nu2, 10);
  EXPECT_EQ(nu2_matching(named::empty(5)).nu2, 0);
  EXPECT_EQ(nu2_matching(named::empty(0)).nu2, 0);
}

TEST(Packing, MethodsAreTagged) {
  EXPECT_EQ(nu2_matching(named::path(4)).method, PackingMethod::matching);
  EXPECT_EQ(nu2_bruteforce(named::path(4)).method, PackingMethod::oracle);
}

TEST(Packing, BruteforceRespectsBound) {
  SolverBounds tight;
  tight.oracle_edges = 5;
  EXPECT_THROW(nu2_bruteforce(named::complete(4), tight), BoundExceeded);
  EXPECT_THROW(enumerate_max_2packings(named::complete(4), tight), BoundExceeded);
  EXPECT_NO_THROW(nu2_bruteforce(named::path(6), tight));
}

TEST(PackingProperty, SolversAgreeWithOracleAndWitnessIsLexSmallest) {
  std::mt19937 rng(33);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 8);
    Graph g = oracle::random_graph(rng, n, 0.4);
    while (g.size() > 16) g = remove_edge(g, g.edges().back());
    const auto expected = oracle::all_max_2packings(g);
    ASSERT_FALSE(expected.empty());
    const PackingResult fast = nu2_matching(g);
    const PackingResult slow = nu2_bruteforce(g);
    EXPECT_EQ(fast.nu2, static_cast<int>(expected.front().size())) << to_graph6(g);
    EXPECT_EQ(slow.nu2, fast.nu2);
    EXPECT_EQ(nu2_number(g), fast.nu2);
    EXPECT_EQ(fast.witness.edges(), expected.front());
    EXPECT_EQ(slow.witness.edges(), expected.front());
    EXPECT_TRUE(is_2packing(g, fast.witness.edges()));

    const auto all = enumerate_max_2packings(g);
    ASSERT_EQ(all.size(), expected.size());
    for (std::size_t i = 0; i < all.size(); ++i) EXPECT_EQ(all[i].edges(), expected[i]);
  }
}

TEST(PackingProperty, MatchingSolverOnLargerGraphs) {
  // Beyond the exhaustive range: witness validity and the degree bound.
  std::mt19937 rng(35);
  for (int trial = 0; trial < 30; ++trial) {
    const Graph g = oracle::random_connected(rng, 30, 0.1);
    const PackingResult r = nu2_matching(g);
    EXPECT_TRUE(is_2packing(g, r.witness.edges()));
    EXPECT_EQ(r.witness.size(), r.nu2);
    EXPECT_LE(r.nu2, g.order());
    EXPECT_LE(r.nu2, g.size());
  }
}

TEST(Packing, MaxPackingsOfTriangleWithTail) {
  const Graph g = Graph::from_edges(4, {{0, 1}, {1, 2}, {0, 2}, {2, 3}});
  const auto all = enumerate_max_2packings(g);
  // Triangle, or either of the two paths through the tail.
  ASSERT_EQ(all.size(), 3u);
  for (const TwoPacking& p : all) EXPECT_EQ(p.size(), 3);
}

TEST(Bounds, Parse) {
  EXPECT_EQ(SolverBounds::parse("30").oracle_edges, 30);
  const SolverBounds b = SolverBounds::parse("oracle_vertices=22,exact_vertices=48");
  EXPECT_EQ(b.oracle_vertices, 22);
  EXPECT_EQ(b.exact_vertices, 48);
  EXPECT_EQ(b.oracle_edges, SolverBounds{}.oracle_edges);
  EXPECT_THROW(SolverBounds::parse("bogus=1"), std::invalid_argument);
  EXPECT_THROW(SolverBounds::parse("12x"), std::invalid_argument);
  EXPECT_THROW(SolverBounds::parse("oracle_edges"), std::invalid_argument);
}

#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "pack2dom/canonical.hpp"
#include "pack2dom/domination.hpp"
#include "pack2dom/family.hpp"
#include "pack2dom/packing.hpp"

using namespace pack2dom;

TEST(Family, SmallestMemberShape) {
  const FamilyMember m = generate_family(1, 1);
  EXPECT_EQ(m.graph.order(), 8);
  EXPECT_EQ(m.graph.size(), 7);
  EXPECT_EQ(m.params, (FamilyParams{1, 1, 5}));
  EXPECT_EQ(m.graph.degree(m.roles.v[2]), 4);
  EXPECT_EQ(m.roles.p.size(), 1u);
  EXPECT_EQ(m.roles.w.size(), 1u);
  EXPECT_EQ(to_string(m.params), "T(1,1,5)");
}

TEST(Family, RolesDescribeTheEdges) {
  const FamilyMember m = generate_family(3, 2);
  const Graph& g = m.graph;
  EXPECT_EQ(g.order(), m.params.order());
  EXPECT_TRUE(g.adjacent(m.roles.v[0], m.roles.v[1]));
  EXPECT_TRUE(g.adjacent(m.roles.v[3], m.roles.v[4]));
  for (std::size_t i = 0; i < m.roles.p.size(); ++i) {
    EXPECT_TRUE(g.adjacent(m.roles.v[2], m.roles.p[i]));
    EXPECT_TRUE(g.adjacent(m.roles.p[i], m.roles.q[i]));
    EXPECT_EQ(g.degree(m.roles.q[i]), 1);
  }
  for (Vertex w : m.roles.w) EXPECT_EQ(g.degree(w), 1);
}

TEST(Family, RejectsInvalidParameters) {
  EXPECT_THROW(generate_family(0, 1), std::invalid_argument);
  EXPECT_THROW(generate_family(1, 0), std::invalid_argument);
  EXPECT_THROW(family_invariants(FamilyParams{2, 2, 7}), std::invalid_argument);
}

TEST(Family, ClosedFormsMatchSolvers) {
  for (int s = 1; s <= 4; ++s) {
    for (int t = 1; t <= 4; ++t) {
      const FamilyMember m = generate_family(s, t);
      const FamilyInvariants f = family_invariants(m.params);
      EXPECT_EQ(f.gamma, s + 3);
      EXPECT_EQ(f.nu2, s + 4);
      EXPECT_EQ(gamma_exact(m.graph).gamma, f.gamma);
      EXPECT_EQ(nu2_matching(m.graph).nu2, f.nu2);
      if (m.graph.order() <= 10) {
        EXPECT_EQ(oracle::gamma(m.graph), f.gamma);
      }
    }
  }
}

TEST(Recognize, RoundTripsGeneratedMembers) {
  std::mt19937 rng(1);
  for (int s = 1; s <= 5; ++s) {
    for (int t = 1; t <= 5; ++t) {
      const FamilyMember m = generate_family(s, t);
      std::vector<Vertex> perm(static_cast<std::size_t>(m.graph.order()));
      std::iota(perm.begin(), perm.end(), 0);
      std::shuffle(perm.begin(), perm.end(), rng);
      const Recognition r = recognize(permute(m.graph, perm));
      ASSERT_TRUE(r.accepted());
      EXPECT_EQ(*r.params, m.params);
      EXPECT_EQ(r.roles->p.size(), static_cast<std::size_t>(s));
      EXPECT_EQ(r.roles->w.size(), static_cast<std::size_t>(t));
    }
  }
}

TEST(Recognize, RecoveredRolesRebuildAnIsomorphicMember) {
  const FamilyMember m = generate_family(2, 3);
  const Recognition r = recognize(m.graph);
  ASSERT_TRUE(r.accepted());
  EXPECT_EQ(to_string(*r.params), "T(2,3,6)");
  EXPECT_EQ(r.roles->v[2], m.roles.v[2]);
  EXPECT_TRUE(are_isomorphic(m.graph, generate_family(r.params->s, r.params->t).graph));
}

TEST(Recognize, RejectionReasons) {
  EXPECT_EQ(recognize(named::cycle(6)).reason, RejectReason::not_a_tree);
  EXPECT_EQ(recognize(named::empty(2)).reason, RejectReason::not_a_tree);
  EXPECT_EQ(recognize(named::path(6)).reason, RejectReason::no_center);
  // Spider with three 2-legs and no leaf.
  const Graph no_leaf = Graph::from_edges(7, {{0, 1}, {1, 2}, {0, 3}, {3, 4}, {0, 5}, {5, 6}});
  EXPECT_EQ(recognize(no_leaf).reason, RejectReason::no_leaf_leg);
  // Only two 2-legs.
  const Graph short_spider = Graph::from_edges(6, {{0, 1}, {1, 2}, {0, 3}, {3, 4}, {0, 5}});
  EXPECT_EQ(recognize(short_spider).reason, RejectReason::too_few_2_legs);
  // A 3-leg.
  const Graph long_leg =
      Graph::from_edges(9, {{0, 1}, {1, 2}, {0, 3}, {3, 4}, {0, 5}, {5, 6}, {6, 7}, {0, 8}});
  EXPECT_EQ(recognize(long_leg).reason, RejectReason::bad_leg);
  EXPECT_EQ(std::string(to_string(RejectReason::too_few_2_legs)), "too-few-2-legs");
}

TEST(Recognize, TwoBranchVerticesAreRejected) {
  // A double broom: two vertices of degree 3.
  const Graph g = Graph::from_edges(8, {{0, 1}, {0, 2}, {0, 3}, {3, 4}, {4, 5}, {4, 6}, {6, 7}});
  EXPECT_FALSE(recognize(g).accepted());
}

#include <gtest/gtest.h>

#include "crossdrop/corpus.hpp"
#include "crossdrop/cutsets.hpp"
#include "crossdrop/errors.hpp"
#include "crossdrop/polynomials.hpp"
#include "oracles.hpp"

using namespace crossdrop;

TEST(Pds, CycleIsOneSet) {
  const SignedGraph c5 = cycle_graph(5).abstract();
  const PdsFamily f = all_maximal_pds(c5);
  ASSERT_EQ(f.sets.size(), 1u);
  EXPECT_EQ(f.sets[0], (std::vector<EdgeId>{0, 1, 2, 3, 4}));
  EXPECT_EQ(f.excess(), 4);
  const EdgeId pair[] = {0, 3};
  EXPECT_TRUE(is_pds(c5, pair));
}

TEST(Pds, ThetaHasNone) {
  const SignedGraph theta = corpus_graph("Theta3").abstract();
  EXPECT_TRUE(all_maximal_pds(theta).sets.empty());
  EXPECT_FALSE(maximal_pds_of_edge(theta, 0).has_value());
  const EdgeId pair[] = {0, 1};
  EXPECT_FALSE(is_pds(theta, pair));
}

TEST(Pds, HSplitFindsBothTrianglesAndThePair) {
  const PdsFamily f = all_maximal_pds(corpus_graph("H_split").abstract());
  EXPECT_EQ(f.sets, (std::vector<std::vector<EdgeId>>{{0, 1, 2}, {3, 4, 5}, {6, 7}}));
  ASSERT_NE(f.containing(7), nullptr);
  EXPECT_EQ(*f.containing(7), (std::vector<EdgeId>{6, 7}));
}

TEST(Pds, PreconditionsAreChecked) {
  const SignedGraph c5 = cycle_graph(5).abstract();
  const EdgeId one[] = {0};
  EXPECT_THROW(is_pds(c5, one), DomainError);
  EXPECT_THROW(all_maximal_pds(corpus_graph("C3_pendant").abstract()), DomainError);
  EXPECT_THROW(all_maximal_pds(edgeless_graph(2).abstract()), DomainError);
}

TEST(Pds, MatchesSubsetSearchOnEnumeration) {
  for (const SignedGraph& g : enumerate_test_graphs({7, 7, false})) {
    const PdsFamily f = all_maximal_pds(g);
    EXPECT_EQ(f.sets, oracle::maximal_pds(g));
    for (const GraphEdge& e : g.edges()) {
      const auto s = maximal_pds_of_edge(g, e.id);
      const auto* c = f.containing(e.id);
      EXPECT_EQ(s.has_value(), c != nullptr);
      if (s && c) EXPECT_EQ(*s, *c);
    }
  }
}

TEST(MultipleEdges, Groups) {
  EXPECT_EQ(maximal_multiple_edges(corpus_graph("M4").abstract()).groups,
            (std::vector<std::vector<EdgeId>>{{0, 1, 2, 3}}));
  EXPECT_EQ(maximal_multiple_edges(corpus_graph("M4").abstract()).excess(), 3);
  EXPECT_TRUE(maximal_multiple_edges(cycle_graph(4).abstract()).groups.empty());
}

TEST(TutteExtremes, MatchSubsetExpansion) {
  for (const SignedGraph& g : enumerate_test_graphs({7, 7, true})) {
    const LaurentPoly t = tutte_neg_eval(g);
    const TopCoefficients top = dl_extreme_coeffs(g);
    EXPECT_EQ(top.m, t.max_degree());
    EXPECT_EQ(top.a_m, t.coeff(top.m));
    EXPECT_EQ(top.a_m_minus_1, t.coeff(top.m - 1));
    if (!is_bridgeless(g)) continue;
    const BottomCoefficients bottom = dual_extreme_coeffs(g);
    EXPECT_EQ(bottom.n, t.min_degree());
    EXPECT_EQ(bottom.a_n, t.coeff(bottom.n));
    EXPECT_EQ(bottom.a_n_plus_1, t.coeff(bottom.n + 1));
  }
}

TEST(SimplifiedEdgeCount, IdentityUnderContraction) {
  int checked = 0;
  for (const SignedGraph& g : enumerate_test_graphs({7, 7, false})) {
    const MultiplicityInfo mi = multiplicity_info(g);
    for (const GraphEdge& e : g.edges()) {
      if (mi.multiplicity.at(e.id) != 1) continue;
      EXPECT_TRUE(es_identity_check(g, e.id));
      ++checked;
    }
  }
  EXPECT_GT(checked, 100);
  EXPECT_THROW(es_identity_check(corpus_graph("Theta3").abstract(), 0), DomainError);
}

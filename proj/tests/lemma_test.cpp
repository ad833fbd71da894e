#include <gtest/gtest.h>

#include <stdexcept>

#include "factorlab/barrier.hpp"
#include "factorlab/enumeration.hpp"
#include "factorlab/graph6.hpp"
#include "factorlab/independence.hpp"
#include "factorlab/lemma_audit.hpp"
#include "factorlab/two_factor.hpp"

namespace factorlab {
namespace {

TEST(AdjacencyCheck, Examples) {
  const AuditRecord c5 = check_val(graphs::cycle(5));
  EXPECT_TRUE(c5.hypothesis_satisfied);
  EXPECT_TRUE(c5.conclusion_holds);
  EXPECT_EQ(c5.lemma, "adjacency");
  EXPECT_EQ(c5.graph, to_graph6(graphs::cycle(5)));

  // K5 is not Delta-critical, but the bound holds when assumed.
  EXPECT_FALSE(check_val(graphs::complete(5)).hypothesis_satisfied);
  const AuditRecord k5 = check_val(graphs::complete(5), Hypothesis::kAssume);
  EXPECT_TRUE(k5.conclusion_holds);
}

TEST(AdjacencyCheck, ReportsAnOffendingEdge) {
  const AuditRecord star = check_val(graphs::star(3), Hypothesis::kAssume);
  EXPECT_TRUE(star.violated());
  EXPECT_FALSE(star.witness.empty());
  EXPECT_NE(star.witness.find("edge"), std::string::npos);
}

TEST(AdjacencyCheck, GatedOnItsHypothesis) {
  const AuditRecord star = check_val(graphs::star(3));
  EXPECT_FALSE(star.hypothesis_satisfied);
  EXPECT_FALSE(star.violated());
}

TEST(HstarCheck, Examples) {
  const AuditRecord c5 = check_tnodelta(graphs::cycle(5), VertexSet{0});
  EXPECT_TRUE(c5.hypothesis_satisfied);
  EXPECT_TRUE(c5.conclusion_holds);
  EXPECT_EQ(c5.diagnostics.at("delta0"), 1);
  EXPECT_EQ(c5.diagnostics.at("matching"), 1);

  const AuditRecord k5 = check_tnodelta(graphs::complete(5), VertexSet{0}, Hypothesis::kAssume);
  EXPECT_TRUE(k5.conclusion_holds);
  EXPECT_EQ(k5.diagnostics.at("delta0"), 1);

  EXPECT_THROW(check_tnodelta(graphs::cycle(5), VertexSet{0, 1}), std::invalid_argument);
}

TEST(HstarCheck, AllMaximalIndependentSetsOfSmallCriticalGraphs) {
  for (int n = 3; n <= 7; ++n) {
    for (const Graph& g : enumerate_delta_critical(n)) {
      for (VertexSet t : maximal_independent_sets(g)) {
        const AuditRecord r = check_tnodelta(g, t);
        EXPECT_TRUE(r.hypothesis_satisfied);
        EXPECT_FALSE(r.violated()) << r.graph << " " << r.witness;
      }
    }
  }
}

TEST(MinBarrierCheck, Examples) {
  const AuditRecord p3 = check_min_barrier(graphs::path(3));
  EXPECT_TRUE(p3.hypothesis_satisfied);
  EXPECT_TRUE(p3.conclusion_holds) << p3.witness;
  EXPECT_EQ(p3.witness, "S={} T={0}");
  EXPECT_EQ(p3.diagnostics.at("deficiency"), -2);

  const AuditRecord star = check_min_barrier(graphs::star(3));
  EXPECT_TRUE(star.hypothesis_satisfied);
  EXPECT_TRUE(star.conclusion_holds) << star.witness;

  const AuditRecord c5 = check_min_barrier(graphs::cycle(5));
  EXPECT_FALSE(c5.hypothesis_satisfied);
  EXPECT_FALSE(c5.violated());
}

TEST(HConstructionCheck, Examples) {
  const AuditRecord p3 = check_H_construction(graphs::path(3));
  EXPECT_TRUE(p3.hypothesis_satisfied);
  EXPECT_TRUE(p3.conclusion_holds) << p3.witness;
  EXPECT_EQ(p3.diagnostics.at("x"), 0);
  EXPECT_EQ(p3.diagnostics.at("t_exceeds_x"), 1);
  for (const char* key : {"T0", "T1_1", "T1_2", "T2", "m11", "m12", "m2", "m3"}) {
    EXPECT_EQ(p3.diagnostics.count(key), 1U) << key;
  }
  EXPECT_FALSE(check_H_construction(graphs::cycle(5)).hypothesis_satisfied);
}

// Finds graphs whose minimum barrier has a component with exactly three
// edges to T and checks that the construction gives it a degree-3 vertex.
TEST(HConstructionCheck, ComponentsWithThreeEdgesAppearAndPass) {
  int found = 0;
  for (int n = 4; n <= 8 && found < 5; ++n) {
    for_each_connected(n, [&](const Graph& g) {
      if (found >= 5 || find_2_factor(g)) return;
      const auto b = minimum_barrier(g);
      const ComponentClassification c(g, b->s, b->t);
      if (c.with_edges_to_t(3).empty()) return;
      ++found;
      const AuditRecord r = check_H_construction(g);
      EXPECT_FALSE(r.violated()) << r.graph << " " << r.witness;
    });
  }
  EXPECT_GT(found, 0);
}

TEST(Checkers, NeverFailWithoutTheirHypothesis) {
  for (int n = 1; n <= 6; ++n) {
    for_each_graph(n, [&](const Graph& g) {
      const bool factor = find_2_factor(g).has_value();
      for (const AuditRecord& r : {check_val(g), check_min_barrier(g), check_H_construction(g)}) {
        if (!r.hypothesis_satisfied) EXPECT_FALSE(r.violated());
        if (!r.conclusion_holds) EXPECT_FALSE(r.witness.empty());
      }
      EXPECT_EQ(check_min_barrier(g).hypothesis_satisfied, !factor);
    });
  }
}

}  // namespace
}  // namespace factorlab

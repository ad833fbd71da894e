#include <gtest/gtest.h>

#include <random>
#include <set>
#include <stdexcept>

#include "factorlab/canonical.hpp"
#include "factorlab/errors.hpp"
#include "factorlab/graph.hpp"
#include "factorlab/graph6.hpp"
#include "factorlab/independence.hpp"
#include "oracles/brute_force.hpp"
#include "support/random_graphs.hpp"

namespace factorlab {
namespace {

TEST(VertexSet, BasicOperations) {
  VertexSet s{};
  s.insert(0);
  s.insert(3);
  EXPECT_EQ(s.size(), 2);
  EXPECT_TRUE(s.contains(3));
  EXPECT_FALSE(s.contains(1));
  EXPECT_EQ(s.to_string(), "{0,3}");
  EXPECT_EQ((s - VertexSet::singleton(0)).to_vector(), std::vector<int>{3});
  EXPECT_TRUE(VertexSet::singleton(3).is_subset_of(s));
  EXPECT_EQ(VertexSet::range(64).size(), 64);
  EXPECT_EQ(VertexSet::range(0).size(), 0);
}

TEST(Graph, AdjacencyStaysSymmetricAndLoopFree) {
  std::mt19937_64 rng(1);
  for (int trial = 0; trial < 200; ++trial) {
    Graph g = support::random_graph(rng, 1 + trial % 20, 0.4);
    if (g.edge_count() > 0) g.remove_edge(g.edges().front().u, g.edges().front().v);
    for (int u = 0; u < g.order(); ++u) {
      EXPECT_FALSE(g.has_edge(u, u));
      for (int v = 0; v < g.order(); ++v) EXPECT_EQ(g.has_edge(u, v), g.has_edge(v, u));
    }
  }
}

TEST(Graph, RejectsLoopsAndBadVertices) {
  Graph g(3);
  EXPECT_THROW(g.add_edge(1, 1), std::invalid_argument);
  EXPECT_THROW(g.add_edge(0, 3), std::out_of_range);
  EXPECT_THROW(Graph(65), std::invalid_argument);
  EXPECT_THROW(degree(g, 5), std::out_of_range);
}

TEST(Graph, DegreesOfExamples) {
  const Graph c5 = graphs::cycle(5);
  EXPECT_EQ(max_degree(c5), 2);
  EXPECT_EQ(delta_vertices(c5), VertexSet::range(5));
  const Graph star = graphs::star(3);
  EXPECT_EQ(max_degree(star), 3);
  EXPECT_EQ(delta_vertices(star), VertexSet::singleton(0));
  EXPECT_EQ(max_degree(graphs::empty(4)), 0);
}

TEST(Graph, Components) {
  EXPECT_EQ(connected_components(graphs::cycle(5)).size(), 1U);
  const Graph two_edges(4, {{0, 1}, {2, 3}});
  const auto parts = connected_components(two_edges);
  ASSERT_EQ(parts.size(), 2U);
  EXPECT_EQ(parts[0].size(), 2);
  EXPECT_EQ(parts[1].size(), 2);
  const auto singles = connected_components(graphs::empty(3));
  ASSERT_EQ(singles.size(), 3U);
  for (VertexSet c : singles) EXPECT_EQ(c.size(), 1);
  EXPECT_FALSE(is_connected(two_edges));
  EXPECT_TRUE(is_connected(graphs::empty(0)));
}

TEST(Graph6, KnownEncodings) {
  EXPECT_EQ(to_graph6(graphs::empty(0)), "?");
  EXPECT_EQ(to_graph6(graphs::complete(2)), "A_");
  EXPECT_EQ(to_graph6(graphs::empty(3)), "B?");
  const Graph k2 = parse_graph6("A_");
  EXPECT_EQ(k2.order(), 2);
  EXPECT_EQ(k2.edge_count(), 1);
  const Graph e3 = parse_graph6("B?");
  EXPECT_EQ(e3.order(), 3);
  EXPECT_EQ(e3.edge_count(), 0);
  // An independent decoder (networkx) writes the 0-1-2-3-4 cycle as "Dhc".
  EXPECT_EQ(to_graph6(graphs::cycle(5)), "Dhc");
  EXPECT_EQ(parse_graph6(">>graph6<<Dhc"), graphs::cycle(5));
}

TEST(Graph6, RoundTripsRandomGraphs) {
  std::mt19937_64 rng(2);
  for (int n : {0, 1, 2, 5, 10, 31, 62, 63, 64}) {
    for (int trial = 0; trial < 5; ++trial) {
      const Graph g = support::random_graph(rng, n, 0.3);
      const std::string text = to_graph6(g);
      EXPECT_EQ(parse_graph6(text), g);
      EXPECT_EQ(to_graph6(parse_graph6(text)), text);
    }
  }
}

TEST(Graph6, ErrorsCarryTheByteOffset) {
  auto offset_of = [](std::string_view text) -> long {
    try {
      (void)parse_graph6(text);
    } catch (const ParseError& e) {
      return static_cast<long>(e.offset());
    }
    return -1;
  };
  EXPECT_EQ(offset_of(""), 0);
  EXPECT_EQ(offset_of(" A_"), 0);
  EXPECT_EQ(offset_of("A_x"), 2);    // trailing garbage
  EXPECT_EQ(offset_of("D"), 1);      // truncated
  EXPECT_EQ(offset_of("A\x7f"), 1);  // byte out of range
  EXPECT_EQ(offset_of("A`"), 1);     // padding bits set
  EXPECT_GE(offset_of("~~??????????"), 0);
}

TEST(Independence, Examples) {
  EXPECT_EQ(independence_number(graphs::cycle(5)).size, 2);
  EXPECT_EQ(independence_number(graphs::complete(5)).size, 1);
  EXPECT_EQ(independence_number(graphs::petersen()).size, 4);
  EXPECT_EQ(oracle::independence_number(graphs::petersen()), 4);
  EXPECT_EQ(independence_number(graphs::empty(0)).size, 0);
}

TEST(Independence, MatchesBruteForceUpTo16) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 1 + trial % 16;
    const Graph g = support::random_graph(rng, n, 0.1 + 0.8 * (trial % 7) / 7.0);
    const IndependentSet result = independence_number(g);
    ASSERT_EQ(result.size, oracle::independence_number(g)) << to_graph6(g);
    EXPECT_EQ(result.witness.size(), result.size);
    EXPECT_TRUE(is_independent(g, result.witness));
  }
}

TEST(Independence, MaximalSetsAreExactlyTheMaximalOnes) {
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 100; ++trial) {
    const Graph g = support::random_graph(rng, 1 + trial % 10, 0.4);
    std::set<std::uint64_t> expected;
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << g.order()); ++m) {
      if (!oracle::is_independent_mask(g, m)) continue;
      bool maximal = true;
      for (int v = 0; v < g.order() && maximal; ++v) {
        if (!((m >> v) & 1U) && oracle::is_independent_mask(g, m | (std::uint64_t{1} << v))) maximal = false;
      }
      if (maximal) expected.insert(m);
    }
    std::set<std::uint64_t> got;
    for (VertexSet s : maximal_independent_sets(g)) got.insert(s.bits());
    EXPECT_EQ(got, expected) << to_graph6(g);
  }
}

TEST(Canonical, Examples) {
  const Graph c5 = graphs::cycle(5);
  EXPECT_EQ(canonical_form(c5), canonical_form(c5.relabeled({0, 2, 4, 1, 3})));
  EXPECT_NE(canonical_form(graphs::path(4)), canonical_form(graphs::star(3)));
}

TEST(Canonical, InvariantUnderRandomRelabelling) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 1000; ++trial) {
    const int n = 1 + trial % 8;
    const Graph g = support::random_graph(rng, n, 0.5);
    const Graph h = g.relabeled(support::random_permutation(rng, n));
    ASSERT_EQ(canonical_form(g), canonical_form(h)) << to_graph6(g) << " vs " << to_graph6(h);
  }
}

TEST(Canonical, InvariantOnLargerSymmetricGraphs) {
  std::mt19937_64 rng(6);
  const std::vector<Graph> samples{graphs::petersen(), graphs::cycle(20), graphs::complete_bipartite(6, 7),
                                   graphs::complete(12), graphs::petersen().complement()};
  for (const Graph& g : samples) {
    for (int trial = 0; trial < 20; ++trial) {
      EXPECT_EQ(canonical_form(g), canonical_form(g.relabeled(support::random_permutation(rng, g.order()))));
    }
  }
}

TEST(Canonical, SeparatesClassesLikeThePermutationOracle) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 400; ++trial) {
    const int n = 2 + trial % 6;
    const Graph a = support::random_graph(rng, n, 0.5);
    const Graph b = support::random_graph(rng, n, 0.5);
    EXPECT_EQ(canonical_form(a) == canonical_form(b), oracle::canonical_code(a) == oracle::canonical_code(b));
    EXPECT_EQ(unpack_upper_triangle(n, canonical_code(a)), canonical_graph(a));
  }
}

TEST(Canonical, ConnectedFiveVertexClassesNumber21) {
  std::set<std::string> forms;
  std::set<std::uint64_t> brute;
  for (std::uint64_t code = 0; code < (1U << 10); ++code) {
    const Graph g = unpack_upper_triangle(5, code);
    if (!oracle::connected(g)) continue;
    forms.insert(canonical_form(g));
    brute.insert(oracle::canonical_code(g));
  }
  EXPECT_EQ(forms.size(), 21U);
  EXPECT_EQ(brute.size(), 21U);
}

}  // namespace
}  // namespace factorlab

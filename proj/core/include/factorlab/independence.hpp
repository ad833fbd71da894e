#pragma once

#include "factorlab/graph.hpp"

namespace factorlab {

struct IndependentSet {
  int size = 0;
  VertexSet witness;
};

/// Exact alpha(G) by branch and bound, with one maximum independent set.
IndependentSet independence_number(const Graph& g);

/// Every maximal independent set of G, in increasing bitmask order.
std::vector<VertexSet> maximal_independent_sets(const Graph& g);

}  // namespace factorlab

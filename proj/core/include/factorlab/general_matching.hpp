#pragma once

#include <vector>

#include "factorlab/graph.hpp"

namespace factorlab {

struct Matching {
  std::vector<Edge> edges;  // sorted
  int size() const { return static_cast<int>(edges.size()); }
};

/// Pairwise vertex-disjoint edges of g.
bool is_matching(const Graph& g, const Matching& m);

/// Maximum-cardinality matching on an adjacency-list graph of any size
/// (Edmonds' blossom algorithm). Returns mate[v], or -1 for unmatched.
/// Vertices are scanned in index order, so the result is deterministic.
std::vector<int> maximum_matching_mates(const std::vector<std::vector<int>>& adjacency);

/// Maximum matching of g; perfect iff size() == order()/2 with even order.
Matching max_matching_general(const Graph& g);

}  // namespace factorlab

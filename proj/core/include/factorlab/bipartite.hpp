#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "factorlab/graph.hpp"

namespace factorlab {

/// Bipartite graph R[A, B] with its own index spaces: left vertices
/// 0..left_count()-1 (A, X' or X) and right vertices 0..right_count()-1
/// (B or T). Each side holds at most 64 vertices.
class BipartiteGraph {
 public:
  BipartiteGraph() = default;
  BipartiteGraph(int left, int right);

  /// The bipartite subgraph of g between two disjoint vertex sets; left
  /// index i is the i-th smallest vertex of `left`, likewise for the right.
  static BipartiteGraph between(const Graph& g, VertexSet left, VertexSet right);

  int left_count() const { return left_n_; }
  int right_count() const { return right_n_; }
  VertexSet all_left() const { return VertexSet::range(left_n_); }
  VertexSet all_right() const { return VertexSet::range(right_n_); }

  void add_edge(int x, int y);
  void remove_edge(int x, int y);
  bool has_edge(int x, int y) const { return left_adj_[static_cast<std::size_t>(x)].contains(y); }

  /// Right vertices adjacent to left vertex x.
  VertexSet left_neighbors(int x) const { return left_adj_[static_cast<std::size_t>(x)]; }
  /// Left vertices adjacent to right vertex y.
  VertexSet right_neighbors(int y) const { return right_adj_[static_cast<std::size_t>(y)]; }
  int left_degree(int x) const { return left_neighbors(x).size(); }
  int right_degree(int y) const { return right_neighbors(y).size(); }

  /// N(A) for a set of right vertices.
  VertexSet neighborhood_of_right(VertexSet right_set) const;
  int edge_count() const;
  std::vector<std::pair<int, int>> edges() const;

 private:
  int left_n_ = 0;
  int right_n_ = 0;
  std::vector<VertexSet> left_adj_;
  std::vector<VertexSet> right_adj_;
};

struct BipartiteMatching {
  std::vector<int> mate_of_left;   // -1 when unmatched
  std::vector<int> mate_of_right;  // -1 when unmatched

  int size() const;
  /// (left, right) pairs, ordered by left index.
  std::vector<std::pair<int, int>> pairs() const;
  VertexSet matched_right() const;
  bool saturates(VertexSet right_set) const { return right_set.is_subset_of(matched_right()); }
  bool saturates_right() const;
};

/// Every pair is an edge and no vertex is used twice.
bool is_valid_matching(const BipartiteGraph& h, const BipartiteMatching& m);

/// Maximum-cardinality matching (Hopcroft-Karp).
BipartiteMatching max_bipartite_matching(const BipartiteGraph& h);

/// A minimum-cardinality set A of right vertices with |N(A)| < |A|, ties
/// broken by smallest bitmask; nothing when some matching saturates the right
/// side. Exponential in the worst case.
std::optional<VertexSet> hall_violator(const BipartiteGraph& h);

/// A right-saturating matching under the degree condition "no isolated right
/// vertex, and deg(y) >= deg(x) on every edge xy". Throws
/// std::invalid_argument naming the offending vertex or edge when the
/// condition fails, and InvariantViolation should the guarantee ever fail.
BipartiteMatching lemma4_matching(const BipartiteGraph& h);

/// Degree-one reduction: A1 = left vertices of degree 1, B1 = N(A1).
struct DegreeOneReduction {
  BipartiteGraph reduced;     // R' = R[(A - A1) u (B - B1)], same index spaces
  VertexSet remaining_left;   // A - A1
  VertexSet remaining_right;  // B - B1
  BipartiteMatching base;     // M0, saturates B1 using only A1
};

DegreeOneReduction lemma5_reduce(const BipartiteGraph& h);

/// M0 u M' for a matching M' of the reduced graph. Throws
/// std::invalid_argument if M' touches removed vertices.
BipartiteMatching compose(const DegreeOneReduction& reduction, const BipartiteMatching& reduced);

}  // namespace factorlab

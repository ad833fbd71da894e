#pragma once

#include <vector>

#include "factorlab/barrier.hpp"
#include "factorlab/bipartite.hpp"
#include "factorlab/graph.hpp"

namespace factorlab {

enum class LeftOriginKind {
  kSetVertex,        // a vertex of S (or, for H* built without S, any vertex of X')
  kComponentVertex,  // a vertex of some component of G - (S u T)
  kSplitVertex,      // u_i^C from contracting and splitting a component C
};

struct LeftOrigin {
  LeftOriginKind kind = LeftOriginKind::kSetVertex;
  int vertex = -1;       // G vertex; for a split vertex only when C is a single vertex
  int component = -1;    // index into the classification's components
  int split_index = 0;   // i of u_i^C, 1-based
};

/// H*[X', T] or H[X, T] with the bookkeeping that ties it back to G.
/// Right index j is the j-th smallest vertex of T.
struct AuxBipartite {
  BipartiteGraph graph;
  std::vector<int> right_vertices;
  std::vector<LeftOrigin> left_origin;
  /// sigma_x: non-Delta neighbours of x inside X' = V - T; -1 for split
  /// vertices that stand for more than one G vertex.
  std::vector<int> sigma;
  int delta0 = 0;             // |T n V_Delta|
  VertexSet s_prime;          // S u V(C_3^1); empty when S is unknown
  VertexSet s0;               // {x in S' : sigma_x = 0}
  VertexSet s1;               // S' - S0
  /// |C_1y| per right vertex: class-1 odd components receiving y's edge.
  std::vector<int> class1_contacts;

  int left_index_of(int vertex) const;
  int right_index_of(int vertex) const;
  /// G vertices represented on the left by themselves.
  VertexSet left_graph_vertices() const;
};

/// H* with X' = V - T and edges E_G(X', T). `s` only annotates origins and
/// S'; pass it when T comes from a barrier (S, T). Throws
/// std::invalid_argument when T is not independent or overlaps S.
AuxBipartite build_Hstar(const Graph& g, VertexSet t, VertexSet s = {});

/// H[X, T] from a pair (S, T) with T independent: even components and those
/// in C_1 are dropped, edges inside S are dropped, and each C in C_{2k+1}
/// (k >= 1) becomes k split vertices. Its 2k+1 edges to T, sorted by
/// (T vertex, component vertex), go three to u_1^C and two to each later
/// u_i^C. Throws std::invalid_argument when S, T overlap or T is not
/// independent.
AuxBipartite build_H(const Graph& g, VertexSet s, VertexSet t);

}  // namespace factorlab

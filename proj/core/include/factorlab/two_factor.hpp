#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "factorlab/graph.hpp"

namespace factorlab {

/// Spanning 2-regular subgraph, as a sorted edge list.
struct TwoFactor {
  std::vector<Edge> edges;
};

/// Every vertex of g meets exactly two of the (distinct) edges, all of g.
bool is_two_factor(const Graph& g, const TwoFactor& f);

/// A vertex of degree below two rules out a 2-factor before any gadget is built.
class NoTwoFactorPossible : public std::runtime_error {
 public:
  explicit NoTwoFactorPossible(int vertex)
      : std::runtime_error("vertex " + std::to_string(vertex) + " has degree below 2"),
        vertex_(vertex) {}
  int vertex() const noexcept { return vertex_; }

 private:
  int vertex_;
};

/// The f-factor gadget for f = 2: each vertex v becomes d(v) external nodes
/// (one per incident edge) and d(v) - 2 internal nodes joined completely to
/// them; each edge uv joins the matching external nodes of u and v.
struct FactorGadget {
  int node_count = 0;
  std::vector<std::vector<int>> adjacency;
  std::vector<std::pair<int, int>> edges;  // (a, b) with a < b
  /// Per gadget edge: index into graph_edges, or -1 for an internal edge.
  std::vector<int> edge_origin;
  std::vector<Edge> graph_edges;           // g.edges()
  std::vector<int> owner;                  // G vertex owning each node
  std::vector<char> internal;              // node is an internal node
};

/// Throws NoTwoFactorPossible when some vertex has degree below 2.
FactorGadget build_factor_gadget(const Graph& g);

/// Number of gadget nodes, sum over v of d(v) + (d(v) - 2).
int gadget_node_count(const Graph& g);

/// The G-edges used by a gadget matching (mates indexed by gadget node).
TwoFactor extract_two_factor(const FactorGadget& gadget, const std::vector<int>& mates);

/// A 2-factor when one exists. The empty graph has the empty 2-factor.
std::optional<TwoFactor> find_2_factor(const Graph& g);

}  // namespace factorlab

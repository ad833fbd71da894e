#pragma once

#include <optional>
#include <vector>

#include "factorlab/graph.hpp"

namespace factorlab {

/// Ordered pair (S, T) of disjoint vertex sets with its deficiency
///   delta(S,T) = 2|S| + sum_{v in T} d_{G-S}(v) - 2|T| - h(S,T),
/// where h(S,T) counts the odd components of G - (S u T): those joined to T
/// by an odd number of edges. A pair with delta <= -2 is a barrier.
struct Barrier {
  VertexSet s;
  VertexSet t;
  int deficiency = 0;
  int h = 0;

  bool is_barrier() const { return deficiency <= -2; }
  bool operator==(const Barrier&) const = default;
};

/// The four summands of delta(S,T), kept separate for audit output.
struct DeficiencyTerms {
  int twice_s = 0;
  int degree_sum = 0;  // sum over T of d_{G-S}(v)
  int twice_t = 0;
  int h = 0;

  int value() const { return twice_s + degree_sum - twice_t - h; }
};

/// Throws std::invalid_argument if S and T overlap or leave the graph.
DeficiencyTerms deficiency_terms(const Graph& g, VertexSet s, VertexSet t);
int deficiency_delta(const Graph& g, VertexSet s, VertexSet t);
Barrier make_barrier(const Graph& g, VertexSet s, VertexSet t);

struct ComponentInfo {
  VertexSet vertices;
  int edges_to_t = 0;
  VertexSet contacts;         // T-vertices with an edge into the component
  VertexSet single_contacts;  // T-vertices with exactly one edge into it

  bool odd() const { return edges_to_t % 2 == 1; }
  bool singleton() const { return vertices.size() == 1; }
};

/// Census of the components of G - (S u T) relative to T. Index lists
/// refer to `components`, which is ordered by smallest vertex.
class ComponentClassification {
 public:
  ComponentClassification(const Graph& g, VertexSet s, VertexSet t);

  VertexSet s() const { return s_; }
  VertexSet t() const { return t_; }
  const std::vector<ComponentInfo>& components() const { return components_; }
  const ComponentInfo& operator[](int i) const { return components_[static_cast<std::size_t>(i)]; }

  /// h(S,T)
  int odd_count() const;
  std::vector<int> odd() const;
  std::vector<int> even() const;
  /// C_k: odd components with exactly k edges to T.
  std::vector<int> with_edges_to_t(int k) const;
  /// C_{>= k}: odd components with at least k edges to T.
  std::vector<int> at_least(int k) const;
  /// C_v: odd components receiving exactly one edge from v.
  std::vector<int> single_edge_from(int v) const;
  /// C_1v = C_1 intersected with C_v.
  std::vector<int> class1_single_edge_from(int v) const;

  /// D^1 and D^2 of a family: its singleton and non-singleton members.
  std::vector<int> singletons(const std::vector<int>& family) const;
  std::vector<int> non_singletons(const std::vector<int>& family) const;
  /// V(D)
  VertexSet vertices_of(const std::vector<int>& family) const;

 private:
  VertexSet s_;
  VertexSet t_;
  std::vector<ComponentInfo> components_;
};

ComponentClassification classify_components(const Graph& g, VertexSet s, VertexSet t);

/// Some barrier when one exists: the one with the most negative deficiency,
/// then smallest |S u T|, then smallest (S, T) bitmasks. Scans all 3^n
/// disjoint pairs; throws CapabilityError above 20 vertices.
std::optional<Barrier> find_barrier(const Graph& g);

/// True iff some disjoint pair has delta <= -2. Same scan as find_barrier
/// but stops at the first barrier.
bool has_barrier(const Graph& g);

/// Barrier minimizing |S u T|, then h(S,T), then the (S, T) bitmasks.
/// Throws CapabilityError above 16 vertices.
std::optional<Barrier> minimum_barrier(const Graph& g);

struct GraphDeficiency {
  int deficiency = 0;  // sum over v of (Delta - d(v))
  bool overfull = false;
};

GraphDeficiency graph_deficiency(const Graph& g);

}  // namespace factorlab

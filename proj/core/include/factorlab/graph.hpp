#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

namespace factorlab {

inline constexpr int kMaxVertices = 64;

/// A subset of {0, ..., 63}, one bit per vertex.
class VertexSet {
 public:
  constexpr VertexSet() = default;
  constexpr explicit VertexSet(std::uint64_t bits) : bits_(bits) {}
  constexpr VertexSet(std::initializer_list<int> vertices) {
    for (int v : vertices) bits_ |= std::uint64_t{1} << v;
  }

  /// {0, ..., n-1}
  static constexpr VertexSet range(int n) {
    return VertexSet(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
  }
  static constexpr VertexSet singleton(int v) { return VertexSet(std::uint64_t{1} << v); }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool contains(int v) const { return (bits_ >> v) & 1U; }
  constexpr int first() const { return std::countr_zero(bits_); }

  constexpr void insert(int v) { bits_ |= std::uint64_t{1} << v; }
  constexpr void erase(int v) { bits_ &= ~(std::uint64_t{1} << v); }

  constexpr bool is_subset_of(VertexSet other) const { return (bits_ & ~other.bits_) == 0; }
  constexpr bool intersects(VertexSet other) const { return (bits_ & other.bits_) != 0; }

  constexpr VertexSet operator|(VertexSet o) const { return VertexSet(bits_ | o.bits_); }
  constexpr VertexSet operator&(VertexSet o) const { return VertexSet(bits_ & o.bits_); }
  /// Set difference.
  constexpr VertexSet operator-(VertexSet o) const { return VertexSet(bits_ & ~o.bits_); }
  constexpr VertexSet& operator|=(VertexSet o) { bits_ |= o.bits_; return *this; }
  constexpr VertexSet& operator&=(VertexSet o) { bits_ &= o.bits_; return *this; }
  constexpr VertexSet& operator-=(VertexSet o) { bits_ &= ~o.bits_; return *this; }

  constexpr auto operator<=>(const VertexSet&) const = default;

  class iterator {
   public:
    using value_type = int;
    using difference_type = std::ptrdiff_t;
    constexpr iterator() = default;
    constexpr explicit iterator(std::uint64_t rest) : rest_(rest) {}
    constexpr int operator*() const { return std::countr_zero(rest_); }
    constexpr iterator& operator++() { rest_ &= rest_ - 1; return *this; }
    constexpr iterator operator++(int) { auto t = *this; ++*this; return t; }
    constexpr bool operator==(const iterator&) const = default;

   private:
    std::uint64_t rest_ = 0;
  };
  constexpr iterator begin() const { return iterator(bits_); }
  constexpr iterator end() const { return iterator(0); }

  std::vector<int> to_vector() const;
  /// "{0,3,5}"
  std::string to_string() const;

 private:
  std::uint64_t bits_ = 0;
};

/// Undirected edge with u < v.
struct Edge {
  int u = 0;
  int v = 0;

  constexpr Edge() = default;
  constexpr Edge(int a, int b) : u(a < b ? a : b), v(a < b ? b : a) {}
  constexpr int other(int w) const { return w == u ? v : u; }
  constexpr auto operator<=>(const Edge&) const = default;
};

/// Simple undirected graph on at most 64 labelled vertices.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);
  Graph(int n, std::initializer_list<std::pair<int, int>> edges);
  static Graph from_edges(int n, const std::vector<Edge>& edges);

  int order() const { return n_; }
  VertexSet vertices() const { return VertexSet::range(n_); }

  VertexSet neighbors(int v) const { return VertexSet(adj_[static_cast<std::size_t>(v)]); }
  std::uint64_t row(int v) const { return adj_[static_cast<std::size_t>(v)]; }
  bool has_edge(int u, int v) const { return (adj_[static_cast<std::size_t>(u)] >> v) & 1U; }

  /// Throws std::invalid_argument on loops and std::out_of_range on bad vertices.
  void add_edge(int u, int v);
  void remove_edge(int u, int v);

  int edge_count() const;
  /// All edges, sorted lexicographically.
  std::vector<Edge> edges() const;

  Graph without_edge(Edge e) const;
  /// Induced subgraph, relabelled 0..|keep|-1 in increasing vertex order.
  Graph induced(VertexSet keep) const;
  /// Vertex i of the result is vertex order[i] of this graph.
  Graph relabeled(const std::vector<int>& order) const;
  Graph complement() const;

  bool operator==(const Graph& other) const;

 private:
  void check_vertex(int v) const;

  int n_ = 0;
  std::array<std::uint64_t, kMaxVertices> adj_{};
};

/// Throws std::out_of_range for a vertex outside the graph.
int degree(const Graph& g, int v);
int max_degree(const Graph& g);
int min_degree(const Graph& g);
/// V_Delta: the vertices whose degree equals the maximum degree.
VertexSet delta_vertices(const Graph& g);

/// e_G(A, B) for disjoint A, B.
int edges_between(const Graph& g, VertexSet a, VertexSet b);
/// |E(G[A])|
int edges_within(const Graph& g, VertexSet a);
bool is_independent(const Graph& g, VertexSet set);

/// The component of G[within] containing `seed`.
VertexSet component_of(const Graph& g, int seed, VertexSet within);
/// Components of G[within], ordered by smallest vertex.
std::vector<VertexSet> components_within(const Graph& g, VertexSet within);
std::vector<VertexSet> connected_components(const Graph& g);
bool is_connected(const Graph& g);

namespace graphs {

Graph path(int n);
Graph cycle(int n);
Graph complete(int n);
Graph complete_bipartite(int a, int b);
Graph star(int leaves);
Graph petersen();
Graph empty(int n);

}  // namespace graphs

}  // namespace factorlab

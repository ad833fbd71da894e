#include "factorlab/graph.hpp"

#include <algorithm>
#include <stdexcept>

namespace factorlab {

std::vector<int> VertexSet::to_vector() const {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(size()));
  for (int v : *this) out.push_back(v);
  return out;
}

std::string VertexSet::to_string() const {
  std::string s = "{";
  bool first_item = true;
  for (int v : *this) {
    if (!first_item) s += ',';
    s += std::to_string(v);
    first_item = false;
  }
  return s + "}";
}

Graph::Graph(int n) : n_(n) {
  if (n < 0 || n > kMaxVertices) {
    throw std::invalid_argument("vertex count " + std::to_string(n) + " outside [0, 64]");
  }
}

Graph::Graph(int n, std::initializer_list<std::pair<int, int>> edges) : Graph(n) {
  for (auto [u, v] : edges) add_edge(u, v);
}

Graph Graph::from_edges(int n, const std::vector<Edge>& edges) {
  Graph g(n);
  for (const Edge& e : edges) g.add_edge(e.u, e.v);
  return g;
}

void Graph::check_vertex(int v) const {
  if (v < 0 || v >= n_) {
    throw std::out_of_range("vertex " + std::to_string(v) + " not in graph of order " +
                            std::to_string(n_));
  }
}

void Graph::add_edge(int u, int v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw std::invalid_argument("loop at vertex " + std::to_string(u));
  adj_[static_cast<std::size_t>(u)] |= std::uint64_t{1} << v;
  adj_[static_cast<std::size_t>(v)] |= std::uint64_t{1} << u;
}

void Graph::remove_edge(int u, int v) {
  check_vertex(u);
  check_vertex(v);
  adj_[static_cast<std::size_t>(u)] &= ~(std::uint64_t{1} << v);
  adj_[static_cast<std::size_t>(v)] &= ~(std::uint64_t{1} << u);
}

int Graph::edge_count() const {
  int twice = 0;
  for (int v = 0; v < n_; ++v) twice += std::popcount(adj_[static_cast<std::size_t>(v)]);
  return twice / 2;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  for (int u = 0; u < n_; ++u) {
    // neighbours above u only
    VertexSet up(adj_[static_cast<std::size_t>(u)] & ~((std::uint64_t{2} << u) - 1));
    for (int v : up) out.emplace_back(u, v);
  }
  return out;
}

Graph Graph::without_edge(Edge e) const {
  Graph g = *this;
  g.remove_edge(e.u, e.v);
  return g;
}

Graph Graph::induced(VertexSet keep) const {
  std::vector<int> order = keep.to_vector();
  Graph g(static_cast<int>(order.size()));
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (std::size_t j = i + 1; j < order.size(); ++j) {
      if (has_edge(order[i], order[j])) g.add_edge(static_cast<int>(i), static_cast<int>(j));
    }
  }
  return g;
}

Graph Graph::relabeled(const std::vector<int>& order) const {
  if (static_cast<int>(order.size()) != n_) {
    throw std::invalid_argument("relabeling must list every vertex exactly once");
  }
  Graph g(n_);
  for (int i = 0; i < n_; ++i) {
    std::uint64_t r = 0;
    const std::uint64_t src = adj_[static_cast<std::size_t>(order[static_cast<std::size_t>(i)])];
    for (int j = 0; j < n_; ++j) {
      r |= ((src >> order[static_cast<std::size_t>(j)]) & 1U) << j;
    }
    g.adj_[static_cast<std::size_t>(i)] = r;
  }
  return g;
}

Graph Graph::complement() const {
  Graph g(n_);
  const std::uint64_t all = VertexSet::range(n_).bits();
  for (int v = 0; v < n_; ++v) {
    g.adj_[static_cast<std::size_t>(v)] =
        all & ~adj_[static_cast<std::size_t>(v)] & ~(std::uint64_t{1} << v);
  }
  return g;
}

bool Graph::operator==(const Graph& other) const {
  if (n_ != other.n_) return false;
  return std::equal(adj_.begin(), adj_.begin() + n_, other.adj_.begin());
}

int degree(const Graph& g, int v) {
  if (v < 0 || v >= g.order()) {
    throw std::out_of_range("vertex " + std::to_string(v) + " not in graph of order " +
                            std::to_string(g.order()));
  }
  return std::popcount(g.row(v));
}

int max_degree(const Graph& g) {
  int best = 0;
  for (int v = 0; v < g.order(); ++v) best = std::max(best, std::popcount(g.row(v)));
  return best;
}

int min_degree(const Graph& g) {
  if (g.order() == 0) return 0;
  int best = kMaxVertices;
  for (int v = 0; v < g.order(); ++v) best = std::min(best, std::popcount(g.row(v)));
  return best;
}

VertexSet delta_vertices(const Graph& g) {
  const int delta = max_degree(g);
  VertexSet out;
  for (int v = 0; v < g.order(); ++v) {
    if (std::popcount(g.row(v)) == delta) out.insert(v);
  }
  return out;
}

int edges_between(const Graph& g, VertexSet a, VertexSet b) {
  int count = 0;
  for (int v : a) count += (g.neighbors(v) & b).size();
  return count;
}

int edges_within(const Graph& g, VertexSet a) {
  int twice = 0;
  for (int v : a) twice += (g.neighbors(v) & a).size();
  return twice / 2;
}

bool is_independent(const Graph& g, VertexSet set) {
  for (int v : set) {
    if (g.neighbors(v).intersects(set)) return false;
  }
  return true;
}

VertexSet component_of(const Graph& g, int seed, VertexSet within) {
  VertexSet comp = VertexSet::singleton(seed);
  VertexSet frontier = comp;
  while (!frontier.empty()) {
    VertexSet next;
    for (int v : frontier) next |= g.neighbors(v);
    next = (next & within) - comp;
    comp |= next;
    frontier = next;
  }
  return comp;
}

std::vector<VertexSet> components_within(const Graph& g, VertexSet within) {
  std::vector<VertexSet> out;
  VertexSet rest = within;
  while (!rest.empty()) {
    VertexSet comp = component_of(g, rest.first(), within);
    out.push_back(comp);
    rest -= comp;
  }
  return out;
}

std::vector<VertexSet> connected_components(const Graph& g) {
  return components_within(g, g.vertices());
}

bool is_connected(const Graph& g) {
  if (g.order() == 0) return true;
  return component_of(g, 0, g.vertices()) == g.vertices();
}

namespace graphs {

Graph path(int n) {
  Graph g(n);
  for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  return g;
}

Graph cycle(int n) {
  Graph g = path(n);
  if (n >= 3) g.add_edge(n - 1, 0);
  return g;
}

Graph complete(int n) {
  Graph g(n);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
  }
  return g;
}

Graph complete_bipartite(int a, int b) {
  Graph g(a + b);
  for (int i = 0; i < a; ++i) {
    for (int j = 0; j < b; ++j) g.add_edge(i, a + j);
  }
  return g;
}

Graph star(int leaves) { return complete_bipartite(1, leaves); }

Graph petersen() {
  Graph g(10);
  for (int i = 0; i < 5; ++i) {
    g.add_edge(i, (i + 1) % 5);          // outer cycle
    g.add_edge(i, i + 5);                // spokes
    g.add_edge(5 + i, 5 + (i + 2) % 5);  // inner pentagram
  }
  return g;
}

Graph empty(int n) { return Graph(n); }

}  // namespace graphs

}  // namespace factorlab

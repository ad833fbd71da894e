#include "factorlab/aux_bipartite.hpp"

#include <algorithm>
#include <stdexcept>

namespace factorlab {
namespace {

void check_inputs(const Graph& g, VertexSet s, VertexSet t) {
  if (s.intersects(t)) throw std::invalid_argument("S and T must be disjoint");
  if (!(s | t).is_subset_of(g.vertices())) throw std::invalid_argument("S or T leaves the graph");
  if (!is_independent(g, t)) throw std::invalid_argument("T must be an independent set");
}

int sigma_of(const Graph& g, int x, VertexSet x_prime, VertexSet delta_set) {
  return (g.neighbors(x) & (x_prime - delta_set)).size();
}

void fill_s_partition(const Graph& g, AuxBipartite& aux, VertexSet s, VertexSet t,
                      const ComponentClassification& census) {
  const VertexSet x_prime = g.vertices() - t;
  const VertexSet delta_set = delta_vertices(g);
  aux.s_prime = s | census.vertices_of(census.singletons(census.with_edges_to_t(3)));
  for (int x : aux.s_prime) {
    if (sigma_of(g, x, x_prime, delta_set) == 0) {
      aux.s0.insert(x);
    } else {
      aux.s1.insert(x);
    }
  }
  for (int y : t) {
    aux.class1_contacts.push_back(static_cast<int>(census.class1_single_edge_from(y).size()));
  }
}

}  // namespace

int AuxBipartite::left_index_of(int vertex) const {
  for (std::size_t i = 0; i < left_origin.size(); ++i) {
    if (left_origin[i].vertex == vertex) return static_cast<int>(i);
  }
  return -1;
}

int AuxBipartite::right_index_of(int vertex) const {
  const auto it = std::find(right_vertices.begin(), right_vertices.end(), vertex);
  return it == right_vertices.end() ? -1 : static_cast<int>(it - right_vertices.begin());
}

VertexSet AuxBipartite::left_graph_vertices() const {
  VertexSet out;
  for (const LeftOrigin& o : left_origin) {
    if (o.vertex >= 0) out.insert(o.vertex);
  }
  return out;
}

AuxBipartite build_Hstar(const Graph& g, VertexSet t, VertexSet s) {
  check_inputs(g, s, t);
  const VertexSet x_prime = g.vertices() - t;
  const VertexSet delta_set = delta_vertices(g);

  AuxBipartite aux;
  aux.graph = BipartiteGraph::between(g, x_prime, t);
  aux.right_vertices = t.to_vector();
  aux.delta0 = (t & delta_set).size();
  for (int x : x_prime) {
    const LeftOriginKind kind = s.contains(x) || s.empty() ? LeftOriginKind::kSetVertex
                                                           : LeftOriginKind::kComponentVertex;
    aux.left_origin.push_back({kind, x, -1, 0});
    aux.sigma.push_back(sigma_of(g, x, x_prime, delta_set));
  }
  if (!s.empty()) {
    const ComponentClassification census(g, s, t);
    fill_s_partition(g, aux, s, t, census);
  }
  return aux;
}

AuxBipartite build_H(const Graph& g, VertexSet s, VertexSet t) {
  check_inputs(g, s, t);
  const ComponentClassification census(g, s, t);
  const VertexSet x_prime = g.vertices() - t;
  const VertexSet delta_set = delta_vertices(g);

  AuxBipartite aux;
  aux.right_vertices = t.to_vector();
  aux.delta0 = (t & delta_set).size();

  // Left side: S first, then the split vertices of each C in C_{>=3}.
  struct Incidence {
    int t_vertex;
    int c_vertex;
    auto operator<=>(const Incidence&) const = default;
  };
  std::vector<std::vector<int>> left_rows;  // right vertices (as G vertices) per left vertex
  for (int x : s) {
    aux.left_origin.push_back({LeftOriginKind::kSetVertex, x, -1, 0});
    aux.sigma.push_back(sigma_of(g, x, x_prime, delta_set));
    left_rows.push_back((g.neighbors(x) & t).to_vector());
  }
  for (int c : census.at_least(3)) {
    const ComponentInfo& comp = census[c];
    std::vector<Incidence> incidences;
    for (int y : t) {
      for (int w : g.neighbors(y) & comp.vertices) incidences.push_back({y, w});
    }
    std::sort(incidences.begin(), incidences.end());
    const int k = (comp.edges_to_t - 1) / 2;
    // A single vertex in C_3 is left as is; anything else is contracted.
    const int lone = comp.singleton() && k == 1 ? comp.vertices.first() : -1;
    std::size_t next = 0;
    for (int i = 1; i <= k; ++i) {
      const std::size_t take = i == 1 ? 3 : 2;
      std::vector<int> row;
      for (std::size_t j = 0; j < take && next < incidences.size(); ++j, ++next) {
        row.push_back(incidences[next].t_vertex);
      }
      aux.left_origin.push_back({LeftOriginKind::kSplitVertex, lone, c, i});
      aux.sigma.push_back(lone >= 0 ? sigma_of(g, lone, x_prime, delta_set) : -1);
      left_rows.push_back(std::move(row));
    }
  }

  aux.graph = BipartiteGraph(static_cast<int>(left_rows.size()), static_cast<int>(aux.right_vertices.size()));
  for (std::size_t x = 0; x < left_rows.size(); ++x) {
    for (int y : left_rows[x]) aux.graph.add_edge(static_cast<int>(x), aux.right_index_of(y));
  }
  fill_s_partition(g, aux, s, t, census);
  return aux;
}

}  // namespace factorlab

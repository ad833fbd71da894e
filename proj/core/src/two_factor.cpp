#include "factorlab/two_factor.hpp"

#include <algorithm>

#include "factorlab/errors.hpp"
#include "factorlab/general_matching.hpp"

namespace factorlab {

bool is_two_factor(const Graph& g, const TwoFactor& f) {
  std::vector<int> deg(static_cast<std::size_t>(g.order()), 0);
  std::vector<Edge> sorted = f.edges;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
  for (const Edge& e : sorted) {
    if (e.u < 0 || e.v >= g.order() || e.u == e.v || !g.has_edge(e.u, e.v)) return false;
    ++deg[static_cast<std::size_t>(e.u)];
    ++deg[static_cast<std::size_t>(e.v)];
  }
  return std::all_of(deg.begin(), deg.end(), [](int d) { return d == 2; });
}

int gadget_node_count(const Graph& g) {
  int count = 0;
  for (int v = 0; v < g.order(); ++v) count += 2 * degree(g, v) - 2;
  return count;
}

FactorGadget build_factor_gadget(const Graph& g) {
  for (int v = 0; v < g.order(); ++v) {
    if (degree(g, v) < 2) throw NoTwoFactorPossible(v);
  }
  FactorGadget gadget;
  gadget.graph_edges = g.edges();

  // external[v][k]: node for the k-th neighbour of v in increasing order
  std::vector<std::vector<int>> external(static_cast<std::size_t>(g.order()));
  auto add_node = [&](int v, bool is_internal) {
    gadget.owner.push_back(v);
    gadget.internal.push_back(is_internal ? 1 : 0);
    return gadget.node_count++;
  };
  auto add_edge = [&](int a, int b, int origin) {
    gadget.edges.emplace_back(std::min(a, b), std::max(a, b));
    gadget.edge_origin.push_back(origin);
  };

  for (int v = 0; v < g.order(); ++v) {
    const int d = degree(g, v);
    for (int k = 0; k < d; ++k) external[static_cast<std::size_t>(v)].push_back(add_node(v, false));
    for (int k = 0; k < d - 2; ++k) {
      const int inner = add_node(v, true);
      for (int outer : external[static_cast<std::size_t>(v)]) add_edge(inner, outer, -1);
    }
  }
  for (std::size_t i = 0; i < gadget.graph_edges.size(); ++i) {
    const Edge e = gadget.graph_edges[i];
    const auto slot = [&](int from, int to) {
      const int rank = (g.neighbors(from) & VertexSet::range(to)).size();
      return external[static_cast<std::size_t>(from)][static_cast<std::size_t>(rank)];
    };
    add_edge(slot(e.u, e.v), slot(e.v, e.u), static_cast<int>(i));
  }

  gadget.adjacency.assign(static_cast<std::size_t>(gadget.node_count), {});
  for (auto [a, b] : gadget.edges) {
    gadget.adjacency[static_cast<std::size_t>(a)].push_back(b);
    gadget.adjacency[static_cast<std::size_t>(b)].push_back(a);
  }
  return gadget;
}

TwoFactor extract_two_factor(const FactorGadget& gadget, const std::vector<int>& mates) {
  TwoFactor f;
  for (std::size_t i = 0; i < gadget.edges.size(); ++i) {
    const int origin = gadget.edge_origin[i];
    if (origin < 0) continue;
    const auto [a, b] = gadget.edges[i];
    if (mates[static_cast<std::size_t>(a)] == b) {
      f.edges.push_back(gadget.graph_edges[static_cast<std::size_t>(origin)]);
    }
  }
  std::sort(f.edges.begin(), f.edges.end());
  return f;
}

std::optional<TwoFactor> find_2_factor(const Graph& g) {
  if (g.order() == 0) return TwoFactor{};
  if (min_degree(g) < 2) return std::nullopt;

  const FactorGadget gadget = build_factor_gadget(g);
  const std::vector<int> mates = maximum_matching_mates(gadget.adjacency);
  if (std::any_of(mates.begin(), mates.end(), [](int m) { return m < 0; })) return std::nullopt;

  TwoFactor f = extract_two_factor(gadget, mates);
  if (!is_two_factor(g, f)) {
    throw InvariantViolation("perfect gadget matching did not pull back to a 2-factor");
  }
  return f;
}

}  // namespace factorlab

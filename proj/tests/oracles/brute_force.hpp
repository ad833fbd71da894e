#pragma once

// Exhaustive reference implementations. They are deliberately naive and use
// nothing from the library beyond the Graph container, so that agreement
// with the real algorithms means something.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <vector>

#include "factorlab/bipartite.hpp"
#include "factorlab/graph.hpp"

namespace oracle {

using factorlab::BipartiteGraph;
using factorlab::Edge;
using factorlab::Graph;

inline std::vector<Edge> edge_list(const Graph& g) {
  std::vector<Edge> out;
  for (int u = 0; u < g.order(); ++u) {
    for (int v = u + 1; v < g.order(); ++v) {
      if (g.has_edge(u, v)) out.push_back({u, v});
    }
  }
  return out;
}

inline int degree_of(const Graph& g, int v) {
  int d = 0;
  for (int w = 0; w < g.order(); ++w) d += g.has_edge(v, w) ? 1 : 0;
  return d;
}

inline int max_degree_of(const Graph& g) {
  int best = 0;
  for (int v = 0; v < g.order(); ++v) best = std::max(best, degree_of(g, v));
  return best;
}

/// Largest set of pairwise disjoint edges, by trying every edge subset.
inline int max_matching_size(const Graph& g) {
  const std::vector<Edge> edges = edge_list(g);
  const std::uint64_t subsets = std::uint64_t{1} << edges.size();
  int best = 0;
  for (std::uint64_t mask = 0; mask < subsets; ++mask) {
    std::uint64_t used = 0;
    bool ok = true;
    int size = 0;
    for (std::size_t i = 0; i < edges.size() && ok; ++i) {
      if (!((mask >> i) & 1U)) continue;
      const std::uint64_t ends = (std::uint64_t{1} << edges[i].u) | (std::uint64_t{1} << edges[i].v);
      ok = (used & ends) == 0;
      used |= ends;
      ++size;
    }
    if (ok) best = std::max(best, size);
  }
  return best;
}

inline int bipartite_max_matching_size(const BipartiteGraph& h) {
  std::vector<std::pair<int, int>> edges;
  for (int x = 0; x < h.left_count(); ++x) {
    for (int y = 0; y < h.right_count(); ++y) {
      if (h.has_edge(x, y)) edges.emplace_back(x, y);
    }
  }
  int best = 0;
  const std::uint64_t subsets = std::uint64_t{1} << edges.size();
  for (std::uint64_t mask = 0; mask < subsets; ++mask) {
    std::uint64_t left = 0;
    std::uint64_t right = 0;
    bool ok = true;
    int size = 0;
    for (std::size_t i = 0; i < edges.size() && ok; ++i) {
      if (!((mask >> i) & 1U)) continue;
      const std::uint64_t lb = std::uint64_t{1} << edges[i].first;
      const std::uint64_t rb = std::uint64_t{1} << edges[i].second;
      ok = !(left & lb) && !(right & rb);
      left |= lb;
      right |= rb;
      ++size;
    }
    if (ok) best = std::max(best, size);
  }
  return best;
}

/// |N(A)| for a set A of right vertices.
inline int right_neighborhood_size(const BipartiteGraph& h, std::uint64_t a) {
  int count = 0;
  for (int x = 0; x < h.left_count(); ++x) {
    for (int y = 0; y < h.right_count(); ++y) {
      if (((a >> y) & 1U) && h.has_edge(x, y)) {
        ++count;
        break;
      }
    }
  }
  return count;
}

inline bool is_independent_mask(const Graph& g, std::uint64_t set) {
  for (int u = 0; u < g.order(); ++u) {
    for (int v = u + 1; v < g.order(); ++v) {
      if (((set >> u) & 1U) && ((set >> v) & 1U) && g.has_edge(u, v)) return false;
    }
  }
  return true;
}

inline int independence_number(const Graph& g) {
  int best = 0;
  const std::uint64_t subsets = std::uint64_t{1} << g.order();
  for (std::uint64_t mask = 0; mask < subsets; ++mask) {
    const int size = __builtin_popcountll(mask);
    if (size > best && is_independent_mask(g, mask)) best = size;
  }
  return best;
}

/// Every spanning 2-regular edge subset, as a bitmask over edge_list(g).
inline std::vector<std::uint64_t> two_factors(const Graph& g) {
  const std::vector<Edge> edges = edge_list(g);
  const int n = g.order();
  std::vector<std::uint64_t> out;
  std::vector<int> deg(static_cast<std::size_t>(n), 0);
  // remaining[i][v]: edges at index >= i touching v
  std::vector<std::vector<int>> remaining(edges.size() + 1, std::vector<int>(static_cast<std::size_t>(n), 0));
  for (std::size_t i = edges.size(); i-- > 0;) {
    remaining[i] = remaining[i + 1];
    ++remaining[i][static_cast<std::size_t>(edges[i].u)];
    ++remaining[i][static_cast<std::size_t>(edges[i].v)];
  }
  std::function<void(std::size_t, std::uint64_t)> go = [&](std::size_t i, std::uint64_t chosen) {
    for (int v = 0; v < n; ++v) {
      const auto sv = static_cast<std::size_t>(v);
      if (deg[sv] > 2 || deg[sv] + remaining[i][sv] < 2) return;
    }
    if (i == edges.size()) {
      out.push_back(chosen);
      return;
    }
    const auto u = static_cast<std::size_t>(edges[i].u);
    const auto v = static_cast<std::size_t>(edges[i].v);
    ++deg[u];
    ++deg[v];
    go(i + 1, chosen | (std::uint64_t{1} << i));
    --deg[u];
    --deg[v];
    go(i + 1, chosen);
  };
  if (n == 0) return {0};
  go(0, 0);
  return out;
}

/// Deficiency from the definition, with components found by union-find.
inline int deficiency(const Graph& g, std::uint64_t s, std::uint64_t t) {
  const int n = g.order();
  std::vector<int> parent(static_cast<std::size_t>(n));
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int v) {
    return parent[static_cast<std::size_t>(v)] == v ? v
                                                    : parent[static_cast<std::size_t>(v)] = find(parent[static_cast<std::size_t>(v)]);
  };
  const std::uint64_t removed = s | t;
  for (const Edge& e : edge_list(g)) {
    if (((removed >> e.u) & 1U) || ((removed >> e.v) & 1U)) continue;
    parent[static_cast<std::size_t>(find(e.u))] = find(e.v);
  }
  std::map<int, int> to_t;
  for (int v = 0; v < n; ++v) {
    if ((removed >> v) & 1U) continue;
    int& count = to_t[find(v)];
    for (int w = 0; w < n; ++w) count += ((t >> w) & 1U) && g.has_edge(v, w) ? 1 : 0;
  }
  int value = 2 * __builtin_popcountll(s) - 2 * __builtin_popcountll(t);
  for (int v = 0; v < n; ++v) {
    if (!((t >> v) & 1U)) continue;
    for (int w = 0; w < n; ++w) value += g.has_edge(v, w) && !((s >> w) & 1U) ? 1 : 0;
  }
  for (const auto& [root, count] : to_t) value -= count % 2;
  return value;
}

/// Calls visit(s, t) for every ordered pair of disjoint subsets.
inline void for_each_pair(int n, const std::function<void(std::uint64_t, std::uint64_t)>& visit) {
  std::vector<int> state(static_cast<std::size_t>(n), 0);
  while (true) {
    std::uint64_t s = 0;
    std::uint64_t t = 0;
    for (int v = 0; v < n; ++v) {
      if (state[static_cast<std::size_t>(v)] == 1) s |= std::uint64_t{1} << v;
      if (state[static_cast<std::size_t>(v)] == 2) t |= std::uint64_t{1} << v;
    }
    visit(s, t);
    int i = 0;
    while (i < n && state[static_cast<std::size_t>(i)] == 2) state[static_cast<std::size_t>(i++)] = 0;
    if (i == n) return;
    ++state[static_cast<std::size_t>(i)];
  }
}

inline bool has_barrier(const Graph& g) {
  bool found = false;
  for_each_pair(g.order(), [&](std::uint64_t s, std::uint64_t t) { found = found || deficiency(g, s, t) <= -2; });
  return found;
}

/// Smallest |S u T| over all barriers, or -1.
inline int minimum_barrier_size(const Graph& g) {
  int best = -1;
  for_each_pair(g.order(), [&](std::uint64_t s, std::uint64_t t) {
    const int size = __builtin_popcountll(s | t);
    if ((best < 0 || size < best) && deficiency(g, s, t) <= -2) best = size;
  });
  return best;
}

/// Upper-triangle code minimized over all n! relabelings.
inline std::uint64_t canonical_code(const Graph& g) {
  const int n = g.order();
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  std::uint64_t best = ~std::uint64_t{0};
  do {
    std::uint64_t code = 0;
    int bit = 0;
    for (int j = 1; j < n; ++j) {
      for (int i = 0; i < j; ++i, ++bit) {
        if (g.has_edge(perm[static_cast<std::size_t>(i)], perm[static_cast<std::size_t>(j)])) code |= std::uint64_t{1} << bit;
      }
    }
    best = std::min(best, code);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

inline bool connected(const Graph& g) {
  if (g.order() == 0) return true;
  std::vector<char> seen(static_cast<std::size_t>(g.order()), 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int count = 1;
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    for (int w = 0; w < g.order(); ++w) {
      if (g.has_edge(v, w) && !seen[static_cast<std::size_t>(w)]) {
        seen[static_cast<std::size_t>(w)] = 1;
        ++count;
        stack.push_back(w);
      }
    }
  }
  return count == g.order();
}

/// Whether the edges admit a proper colouring with k colours: plain
/// backtracking in edge order, no symmetry breaking.
inline bool edge_colorable(const Graph& g, int k) {
  const std::vector<Edge> edges = edge_list(g);
  std::vector<std::uint64_t> used(static_cast<std::size_t>(g.order()), 0);
  std::function<bool(std::size_t)> go = [&](std::size_t i) {
    if (i == edges.size()) return true;
    const auto u = static_cast<std::size_t>(edges[i].u);
    const auto v = static_cast<std::size_t>(edges[i].v);
    for (int c = 0; c < k; ++c) {
      const std::uint64_t bit = std::uint64_t{1} << c;
      if ((used[u] | used[v]) & bit) continue;
      used[u] |= bit;
      used[v] |= bit;
      if (go(i + 1)) return true;
      used[u] &= ~bit;
      used[v] &= ~bit;
    }
    return false;
  };
  return go(0);
}

inline int chromatic_index(const Graph& g) {
  int k = 0;
  while (!oracle::edge_colorable(g, k)) ++k;
  return k;
}

inline Graph without(const Graph& g, Edge e) {
  Graph h(g.order());
  for (const Edge& f : edge_list(g)) {
    if (!(f == e)) h.add_edge(f.u, f.v);
  }
  return h;
}

inline bool delta_critical(const Graph& g) {
  if (edge_list(g).empty()) return false;
  for (int v = 0; v < g.order(); ++v) {
    if (degree_of(g, v) == 0) return false;
  }
  const int chi = oracle::chromatic_index(g);
  if (chi != max_degree_of(g) + 1) return false;
  for (const Edge& e : edge_list(g)) {
    if (!oracle::edge_colorable(without(g, e), chi - 1)) return false;
  }
  return true;
}

/// Perfect matchings of an arbitrary graph given as adjacency lists,
/// restricted to the nodes in `alive`, counted by fixing the lowest node.
inline std::uint64_t count_perfect_matchings(const std::vector<std::vector<int>>& adjacency, std::vector<char> alive) {
  std::function<std::uint64_t()> go = [&]() -> std::uint64_t {
    int first = -1;
    for (std::size_t v = 0; v < alive.size(); ++v) {
      if (alive[v]) {
        first = static_cast<int>(v);
        break;
      }
    }
    if (first < 0) return 1;
    alive[static_cast<std::size_t>(first)] = 0;
    std::uint64_t total = 0;
    for (int w : adjacency[static_cast<std::size_t>(first)]) {
      if (!alive[static_cast<std::size_t>(w)]) continue;
      alive[static_cast<std::size_t>(w)] = 0;
      total += go();
      alive[static_cast<std::size_t>(w)] = 1;
    }
    alive[static_cast<std::size_t>(first)] = 1;
    return total;
  };
  return go();
}

}  // namespace oracle

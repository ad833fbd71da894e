#include "factorlab/enumeration.hpp"

#include <algorithm>
#include <bit>
#include <string>
#include <unordered_set>

#include "factorlab/canonical.hpp"
#include "factorlab/edge_coloring.hpp"
#include "factorlab/errors.hpp"

namespace factorlab {
namespace {

void require_order(int n, int lo, int hi) {
  if (n < lo || n > hi) {
    throw CapabilityError("enumeration accepts orders " + std::to_string(lo) + ".." + std::to_string(hi) +
                          ", got " + std::to_string(n));
  }
}

// Every graph of order n arises from one of order n-1 by adding a vertex
// joined to some subset; for connected graphs the subset is nonempty and the
// parent can be taken connected (delete a non-cut vertex).
std::vector<std::uint64_t> grow(std::vector<std::uint64_t> level, int from, int to, bool connected) {
  for (int n = from; n < to; ++n) {
    std::unordered_set<std::uint64_t> seen;
    seen.reserve(level.size() * 16);
    const std::uint64_t subsets = std::uint64_t{1} << n;
    for (std::uint64_t code : level) {
      const Graph parent = unpack_upper_triangle(n, code);
      Graph child(n + 1);
      for (const Edge& e : parent.edges()) child.add_edge(e.u, e.v);
      for (std::uint64_t mask = connected ? 1 : 0; mask < subsets; ++mask) {
        Graph g = child;
        for (std::uint64_t r = mask; r != 0; r &= r - 1) g.add_edge(std::countr_zero(r), n);
        seen.insert(canonical_code(g));
      }
    }
    level.assign(seen.begin(), seen.end());
    std::sort(level.begin(), level.end());
  }
  return level;
}

}  // namespace

std::vector<std::uint64_t> connected_codes(int n) {
  require_order(n, 1, kMaxEnumerationOrder);
  return grow({0}, 1, n, true);
}

std::vector<std::uint64_t> graph_codes(int n) {
  require_order(n, 0, kMaxEnumerationOrder);
  return grow({0}, 0, n, false);
}

void for_each_connected(int n, const std::function<void(const Graph&)>& visit) {
  for (std::uint64_t code : connected_codes(n)) visit(unpack_upper_triangle(n, code));
}

void for_each_graph(int n, const std::function<void(const Graph&)>& visit) {
  for (std::uint64_t code : graph_codes(n)) visit(unpack_upper_triangle(n, code));
}

std::vector<Graph> enumerate_connected(int n) {
  std::vector<Graph> out;
  for_each_connected(n, [&](const Graph& g) { out.push_back(g); });
  return out;
}

std::vector<Graph> enumerate_graphs(int n) {
  std::vector<Graph> out;
  for_each_graph(n, [&](const Graph& g) { out.push_back(g); });
  return out;
}

std::vector<Graph> enumerate_delta_critical(int n) {
  require_order(n, 1, kMaxCriticalOrder);
  std::vector<Graph> out;
  for_each_connected(n, [&](const Graph& g) {
    if (is_delta_critical(g)) out.push_back(g);
  });
  return out;
}

}  // namespace factorlab

#include "factorlab/independence.hpp"

#include <algorithm>

namespace factorlab {
namespace {

// Greedy partition of `candidates` into cliques; an independent set takes at
// most one vertex from each clique.
int clique_cover_bound(const Graph& g, VertexSet candidates) {
  int cliques = 0;
  VertexSet rest = candidates;
  while (!rest.empty()) {
    VertexSet clique_room = rest;
    while (!clique_room.empty()) {
      const int v = clique_room.first();
      rest.erase(v);
      clique_room = (clique_room & g.neighbors(v));
    }
    ++cliques;
  }
  return cliques;
}

class IndependentSetSearch {
 public:
  explicit IndependentSetSearch(const Graph& g) : g_(g) {}

  IndependentSet run() {
    expand(VertexSet{}, g_.vertices());
    return best_;
  }

 private:
  void expand(VertexSet chosen, VertexSet candidates) {
    // Vertices of degree <= 1 in G[candidates] belong to some maximum set.
    bool forced = true;
    while (forced && !candidates.empty()) {
      forced = false;
      for (int v : candidates) {
        if ((g_.neighbors(v) & candidates).size() <= 1) {
          chosen.insert(v);
          candidates -= g_.neighbors(v) | VertexSet::singleton(v);
          forced = true;
          break;
        }
      }
    }
    if (candidates.empty()) {
      if (chosen.size() > best_.size) best_ = {chosen.size(), chosen};
      return;
    }
    if (chosen.size() + clique_cover_bound(g_, candidates) <= best_.size) return;

    int pivot = candidates.first();
    int pivot_degree = -1;
    for (int v : candidates) {
      const int d = (g_.neighbors(v) & candidates).size();
      if (d > pivot_degree) {
        pivot = v;
        pivot_degree = d;
      }
    }
    VertexSet with = chosen;
    with.insert(pivot);
    expand(with, candidates - (g_.neighbors(pivot) | VertexSet::singleton(pivot)));
    VertexSet without = candidates;
    without.erase(pivot);
    expand(chosen, without);
  }

  const Graph& g_;
  IndependentSet best_;
};

void collect_maximal(const Graph& g, VertexSet chosen, VertexSet candidates, VertexSet excluded,
                     std::vector<VertexSet>& out) {
  // Bron-Kerbosch on the complement graph.
  if (candidates.empty() && excluded.empty()) {
    out.push_back(chosen);
    return;
  }
  while (!candidates.empty()) {
    const int v = candidates.first();
    const VertexSet closed = g.neighbors(v) | VertexSet::singleton(v);
    VertexSet next = chosen;
    next.insert(v);
    collect_maximal(g, next, candidates - closed, excluded - closed, out);
    candidates.erase(v);
    excluded.insert(v);
  }
}

}  // namespace

IndependentSet independence_number(const Graph& g) {
  return IndependentSetSearch(g).run();
}

std::vector<VertexSet> maximal_independent_sets(const Graph& g) {
  std::vector<VertexSet> out;
  collect_maximal(g, VertexSet{}, g.vertices(), VertexSet{}, out);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace factorlab

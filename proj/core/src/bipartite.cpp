#include "factorlab/bipartite.hpp"

#include <limits>
#include <queue>
#include <stdexcept>

#include "factorlab/errors.hpp"

namespace factorlab {

BipartiteGraph::BipartiteGraph(int left, int right)
    : left_n_(left),
      right_n_(right),
      left_adj_(static_cast<std::size_t>(left)),
      right_adj_(static_cast<std::size_t>(right)) {
  if (left < 0 || right < 0 || left > kMaxVertices || right > kMaxVertices) {
    throw std::invalid_argument("bipartite sides must hold between 0 and 64 vertices");
  }
}

BipartiteGraph BipartiteGraph::between(const Graph& g, VertexSet left, VertexSet right) {
  if (left.intersects(right)) throw std::invalid_argument("bipartite sides overlap");
  const std::vector<int> lv = left.to_vector();
  const std::vector<int> rv = right.to_vector();
  BipartiteGraph h(static_cast<int>(lv.size()), static_cast<int>(rv.size()));
  for (std::size_t i = 0; i < lv.size(); ++i) {
    for (std::size_t j = 0; j < rv.size(); ++j) {
      if (g.has_edge(lv[i], rv[j])) h.add_edge(static_cast<int>(i), static_cast<int>(j));
    }
  }
  return h;
}

void BipartiteGraph::add_edge(int x, int y) {
  if (x < 0 || x >= left_n_ || y < 0 || y >= right_n_) {
    throw std::out_of_range("bipartite edge (" + std::to_string(x) + "," + std::to_string(y) +
                            ") out of range");
  }
  left_adj_[static_cast<std::size_t>(x)].insert(y);
  right_adj_[static_cast<std::size_t>(y)].insert(x);
}

void BipartiteGraph::remove_edge(int x, int y) {
  left_adj_[static_cast<std::size_t>(x)].erase(y);
  right_adj_[static_cast<std::size_t>(y)].erase(x);
}

VertexSet BipartiteGraph::neighborhood_of_right(VertexSet right_set) const {
  VertexSet out;
  for (int y : right_set) out |= right_adj_[static_cast<std::size_t>(y)];
  return out;
}

int BipartiteGraph::edge_count() const {
  int m = 0;
  for (const VertexSet& row : left_adj_) m += row.size();
  return m;
}

std::vector<std::pair<int, int>> BipartiteGraph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int x = 0; x < left_n_; ++x) {
    for (int y : left_adj_[static_cast<std::size_t>(x)]) out.emplace_back(x, y);
  }
  return out;
}

int BipartiteMatching::size() const {
  int count = 0;
  for (int y : mate_of_left) count += y >= 0 ? 1 : 0;
  return count;
}

std::vector<std::pair<int, int>> BipartiteMatching::pairs() const {
  std::vector<std::pair<int, int>> out;
  for (std::size_t x = 0; x < mate_of_left.size(); ++x) {
    if (mate_of_left[x] >= 0) out.emplace_back(static_cast<int>(x), mate_of_left[x]);
  }
  return out;
}

VertexSet BipartiteMatching::matched_right() const {
  VertexSet out;
  for (std::size_t y = 0; y < mate_of_right.size(); ++y) {
    if (mate_of_right[y] >= 0) out.insert(static_cast<int>(y));
  }
  return out;
}

bool BipartiteMatching::saturates_right() const {
  for (int x : mate_of_right) {
    if (x < 0) return false;
  }
  return true;
}

bool is_valid_matching(const BipartiteGraph& h, const BipartiteMatching& m) {
  if (static_cast<int>(m.mate_of_left.size()) != h.left_count() ||
      static_cast<int>(m.mate_of_right.size()) != h.right_count()) {
    return false;
  }
  for (int x = 0; x < h.left_count(); ++x) {
    const int y = m.mate_of_left[static_cast<std::size_t>(x)];
    if (y < 0) continue;
    if (y >= h.right_count() || !h.has_edge(x, y)) return false;
    if (m.mate_of_right[static_cast<std::size_t>(y)] != x) return false;
  }
  for (int y = 0; y < h.right_count(); ++y) {
    const int x = m.mate_of_right[static_cast<std::size_t>(y)];
    if (x >= 0 && (x >= h.left_count() || m.mate_of_left[static_cast<std::size_t>(x)] != y)) {
      return false;
    }
  }
  return true;
}

namespace {

class HopcroftKarp {
 public:
  explicit HopcroftKarp(const BipartiteGraph& h)
      : h_(h),
        mate_left_(static_cast<std::size_t>(h.left_count()), -1),
        mate_right_(static_cast<std::size_t>(h.right_count()), -1),
        dist_(static_cast<std::size_t>(h.left_count()), 0) {}

  BipartiteMatching run() {
    while (layer()) {
      for (int x = 0; x < h_.left_count(); ++x) {
        if (mate_left_[static_cast<std::size_t>(x)] < 0) augment(x);
      }
    }
    return {mate_left_, mate_right_};
  }

 private:
  static constexpr int kInf = std::numeric_limits<int>::max();

  bool layer() {
    std::queue<int> q;
    for (int x = 0; x < h_.left_count(); ++x) {
      if (mate_left_[static_cast<std::size_t>(x)] < 0) {
        dist_[static_cast<std::size_t>(x)] = 0;
        q.push(x);
      } else {
        dist_[static_cast<std::size_t>(x)] = kInf;
      }
    }
    bool found_free = false;
    while (!q.empty()) {
      const int x = q.front();
      q.pop();
      for (int y : h_.left_neighbors(x)) {
        const int next = mate_right_[static_cast<std::size_t>(y)];
        if (next < 0) {
          found_free = true;
        } else if (dist_[static_cast<std::size_t>(next)] == kInf) {
          dist_[static_cast<std::size_t>(next)] = dist_[static_cast<std::size_t>(x)] + 1;
          q.push(next);
        }
      }
    }
    return found_free;
  }

  bool augment(int x) {
    for (int y : h_.left_neighbors(x)) {
      const int next = mate_right_[static_cast<std::size_t>(y)];
      if (next < 0 || (dist_[static_cast<std::size_t>(next)] == dist_[static_cast<std::size_t>(x)] + 1 &&
                       augment(next))) {
        mate_left_[static_cast<std::size_t>(x)] = y;
        mate_right_[static_cast<std::size_t>(y)] = x;
        return true;
      }
    }
    dist_[static_cast<std::size_t>(x)] = kInf;
    return false;
  }

  const BipartiteGraph& h_;
  std::vector<int> mate_left_;
  std::vector<int> mate_right_;
  std::vector<int> dist_;
};

// Right vertices reachable from the unmatched right vertex `root` by
// alternating paths; this set has exactly |Z| - 1 neighbours.
VertexSet alternating_reach(const BipartiteGraph& h, const BipartiteMatching& m, int root) {
  VertexSet reached = VertexSet::singleton(root);
  VertexSet frontier = reached;
  while (!frontier.empty()) {
    VertexSet next;
    for (int x : h.neighborhood_of_right(frontier)) {
      const int y = m.mate_of_left[static_cast<std::size_t>(x)];
      if (y >= 0) next.insert(y);
    }
    next -= reached;
    reached |= next;
    frontier = next;
  }
  return reached;
}

}  // namespace

BipartiteMatching max_bipartite_matching(const BipartiteGraph& h) { return HopcroftKarp(h).run(); }

std::optional<VertexSet> hall_violator(const BipartiteGraph& h) {
  const BipartiteMatching m = max_bipartite_matching(h);
  if (m.saturates_right()) return std::nullopt;

  int root = 0;
  while (m.mate_of_right[static_cast<std::size_t>(root)] >= 0) ++root;
  const VertexSet upper = alternating_reach(h, m, root);

  // Gosper's hack: k-subsets of the right side in increasing bitmask order.
  const int r = h.right_count();
  for (int k = 1; k <= upper.size(); ++k) {
    std::uint64_t subset = k >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << k) - 1;
    const std::uint64_t limit = r >= 64 ? 0 : std::uint64_t{1} << r;
    while (limit == 0 || subset < limit) {
      const VertexSet a(subset);
      if (h.neighborhood_of_right(a).size() < k) return a;
      const std::uint64_t low = subset & (~subset + 1);
      const std::uint64_t ripple = subset + low;
      if (ripple == 0) break;
      subset = (((ripple ^ subset) >> 2) / low) | ripple;
    }
  }
  return upper;  // unreachable: `upper` itself is a violator of its size
}

BipartiteMatching lemma4_matching(const BipartiteGraph& h) {
  for (int y = 0; y < h.right_count(); ++y) {
    if (h.right_degree(y) == 0) {
      throw std::invalid_argument("degree condition violated: right vertex " + std::to_string(y) +
                                  " is isolated");
    }
  }
  for (auto [x, y] : h.edges()) {
    if (h.right_degree(y) < h.left_degree(x)) {
      throw std::invalid_argument("degree condition violated on edge (" + std::to_string(x) + "," +
                                  std::to_string(y) + "): deg(y)=" +
                                  std::to_string(h.right_degree(y)) +
                                  " < deg(x)=" + std::to_string(h.left_degree(x)));
    }
  }
  BipartiteMatching m = max_bipartite_matching(h);
  if (!m.saturates_right()) {
    throw InvariantViolation("degree-condition bipartite graph has no right-saturating matching");
  }
  return m;
}

DegreeOneReduction lemma5_reduce(const BipartiteGraph& h) {
  VertexSet a1;
  for (int x = 0; x < h.left_count(); ++x) {
    if (h.left_degree(x) == 1) a1.insert(x);
  }
  VertexSet b1;
  for (int x : a1) b1 |= h.left_neighbors(x);

  DegreeOneReduction out{BipartiteGraph(h.left_count(), h.right_count()),
                         h.all_left() - a1,
                         h.all_right() - b1,
                         {std::vector<int>(static_cast<std::size_t>(h.left_count()), -1),
                          std::vector<int>(static_cast<std::size_t>(h.right_count()), -1)}};
  for (auto [x, y] : h.edges()) {
    if (out.remaining_left.contains(x) && out.remaining_right.contains(y)) out.reduced.add_edge(x, y);
  }
  // Each x in A1 has a unique neighbour in B1, so the lowest such x per y works.
  for (int y : b1) {
    const int x = (h.right_neighbors(y) & a1).first();
    out.base.mate_of_left[static_cast<std::size_t>(x)] = y;
    out.base.mate_of_right[static_cast<std::size_t>(y)] = x;
  }
  return out;
}

BipartiteMatching compose(const DegreeOneReduction& reduction, const BipartiteMatching& reduced) {
  BipartiteMatching out = reduction.base;
  for (auto [x, y] : reduced.pairs()) {
    if (!reduction.remaining_left.contains(x) || !reduction.remaining_right.contains(y)) {
      throw std::invalid_argument("reduced matching uses a removed vertex");
    }
    out.mate_of_left[static_cast<std::size_t>(x)] = y;
    out.mate_of_right[static_cast<std::size_t>(y)] = x;
  }
  return out;
}

}  // namespace factorlab

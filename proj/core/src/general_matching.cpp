#include "factorlab/general_matching.hpp"

#include <algorithm>

namespace factorlab {
namespace {

class Blossom {
 public:
  explicit Blossom(const std::vector<std::vector<int>>& adjacency)
      : adj_(adjacency),
        n_(static_cast<int>(adjacency.size())),
        mate_(static_cast<std::size_t>(n_), -1),
        parent_(static_cast<std::size_t>(n_)),
        base_(static_cast<std::size_t>(n_)),
        in_tree_(static_cast<std::size_t>(n_)),
        in_blossom_(static_cast<std::size_t>(n_)),
        marked_(static_cast<std::size_t>(n_)),
        queue_(static_cast<std::size_t>(n_)) {}

  std::vector<int> run() {
    // Greedy start; augmentations then fix up.
    for (int v = 0; v < n_; ++v) {
      if (mate(v) >= 0) continue;
      for (int w : adj_[static_cast<std::size_t>(v)]) {
        if (mate(w) < 0 && w != v) {
          set_mate(v, w);
          set_mate(w, v);
          break;
        }
      }
    }
    for (int root = 0; root < n_; ++root) {
      if (mate(root) >= 0) continue;
      int end = find_augmenting_path(root);
      while (end >= 0) {
        const int prev = parent_[static_cast<std::size_t>(end)];
        const int next = mate(prev);
        set_mate(end, prev);
        set_mate(prev, end);
        end = next;
      }
    }
    return mate_;
  }

 private:
  int mate(int v) const { return mate_[static_cast<std::size_t>(v)]; }
  void set_mate(int v, int w) { mate_[static_cast<std::size_t>(v)] = w; }
  int& base(int v) { return base_[static_cast<std::size_t>(v)]; }
  int& parent(int v) { return parent_[static_cast<std::size_t>(v)]; }

  int lowest_common_base(int a, int b) {
    std::fill(marked_.begin(), marked_.end(), 0);
    for (;;) {
      a = base(a);
      marked_[static_cast<std::size_t>(a)] = 1;
      if (mate(a) < 0) break;
      a = parent(mate(a));
    }
    for (;;) {
      b = base(b);
      if (marked_[static_cast<std::size_t>(b)]) return b;
      b = parent(mate(b));
    }
  }

  void mark_path(int v, int b, int child) {
    while (base(v) != b) {
      in_blossom_[static_cast<std::size_t>(base(v))] = 1;
      in_blossom_[static_cast<std::size_t>(base(mate(v)))] = 1;
      parent(v) = child;
      child = mate(v);
      v = parent(mate(v));
    }
  }

  int find_augmenting_path(int root) {
    std::fill(in_tree_.begin(), in_tree_.end(), 0);
    std::fill(parent_.begin(), parent_.end(), -1);
    for (int i = 0; i < n_; ++i) base(i) = i;
    in_tree_[static_cast<std::size_t>(root)] = 1;
    std::size_t head = 0;
    std::size_t tail = 0;
    queue_[tail++] = root;
    while (head < tail) {
      const int v = queue_[head++];
      for (int to : adj_[static_cast<std::size_t>(v)]) {
        if (base(v) == base(to) || mate(v) == to) continue;
        if (to == root || (mate(to) >= 0 && parent(mate(to)) >= 0)) {
          const int blossom_base = lowest_common_base(v, to);
          std::fill(in_blossom_.begin(), in_blossom_.end(), 0);
          mark_path(v, blossom_base, to);
          mark_path(to, blossom_base, v);
          for (int i = 0; i < n_; ++i) {
            if (!in_blossom_[static_cast<std::size_t>(base(i))]) continue;
            base(i) = blossom_base;
            if (!in_tree_[static_cast<std::size_t>(i)]) {
              in_tree_[static_cast<std::size_t>(i)] = 1;
              queue_[tail++] = i;
            }
          }
        } else if (parent(to) < 0) {
          parent(to) = v;
          if (mate(to) < 0) return to;
          const int next = mate(to);
          in_tree_[static_cast<std::size_t>(next)] = 1;
          queue_[tail++] = next;
        }
      }
    }
    return -1;
  }

  const std::vector<std::vector<int>>& adj_;
  int n_;
  std::vector<int> mate_;
  std::vector<int> parent_;
  std::vector<int> base_;
  std::vector<char> in_tree_;
  std::vector<char> in_blossom_;
  std::vector<char> marked_;
  std::vector<int> queue_;
};

}  // namespace

bool is_matching(const Graph& g, const Matching& m) {
  VertexSet used;
  for (const Edge& e : m.edges) {
    if (e.u < 0 || e.v >= g.order() || e.u == e.v || !g.has_edge(e.u, e.v)) return false;
    if (used.contains(e.u) || used.contains(e.v)) return false;
    used.insert(e.u);
    used.insert(e.v);
  }
  return true;
}

std::vector<int> maximum_matching_mates(const std::vector<std::vector<int>>& adjacency) {
  return Blossom(adjacency).run();
}

Matching max_matching_general(const Graph& g) {
  std::vector<std::vector<int>> adjacency(static_cast<std::size_t>(g.order()));
  for (int v = 0; v < g.order(); ++v) adjacency[static_cast<std::size_t>(v)] = g.neighbors(v).to_vector();
  const std::vector<int> mates = maximum_matching_mates(adjacency);
  Matching m;
  for (int v = 0; v < g.order(); ++v) {
    if (mates[static_cast<std::size_t>(v)] > v) m.edges.emplace_back(v, mates[static_cast<std::size_t>(v)]);
  }
  return m;
}

}  // namespace factorlab

#include "factorlab/canonical.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

#include "factorlab/graph6.hpp"

namespace factorlab {
namespace {

// Ordered partition: lab holds the vertices by position, len[p] is the size
// of the cell starting at position p (meaningful only at cell starts).
struct Partition {
  int n = 0;
  std::array<std::uint8_t, kMaxVertices> lab{};
  std::array<std::uint8_t, kMaxVertices> len{};

  std::uint64_t cell_mask(int start) const {
    std::uint64_t m = 0;
    for (int p = start; p < start + len[static_cast<std::size_t>(start)]; ++p) {
      m |= std::uint64_t{1} << lab[static_cast<std::size_t>(p)];
    }
    return m;
  }
};

using Rows = std::array<std::uint64_t, kMaxVertices>;

class CanonicalSearch {
 public:
  explicit CanonicalSearch(const Graph& g) : g_(g), n_(g.order()) {}

  std::vector<int> run() {
    Partition root;
    root.n = n_;
    for (int v = 0; v < n_; ++v) root.lab[static_cast<std::size_t>(v)] = static_cast<std::uint8_t>(v);
    if (n_ > 0) root.len[0] = static_cast<std::uint8_t>(n_);
    refine(root);
    search(root);
    std::vector<int> order(static_cast<std::size_t>(n_));
    for (int i = 0; i < n_; ++i) order[static_cast<std::size_t>(i)] = best_lab_[static_cast<std::size_t>(i)];
    return order;
  }

 private:
  // Splits cells by neighbour counts into each cell until the partition is
  // equitable. Only positions drive the decisions, so the result is
  // label-invariant as an ordered sequence of vertex sets.
  void refine(Partition& p) const {
    bool changed = true;
    while (changed) {
      changed = false;
      for (int s = 0; s < n_ && !changed; s += p.len[static_cast<std::size_t>(s)]) {
        const std::uint64_t splitter = p.cell_mask(s);
        for (int t = 0; t < n_; t += p.len[static_cast<std::size_t>(t)]) {
          const int size = p.len[static_cast<std::size_t>(t)];
          if (size == 1) continue;
          if (split_cell(p, t, size, splitter)) {
            changed = true;
            break;
          }
        }
      }
    }
  }

  bool split_cell(Partition& p, int start, int size, std::uint64_t splitter) const {
    std::array<std::uint8_t, kMaxVertices> count{};
    bool uniform = true;
    for (int i = 0; i < size; ++i) {
      const int v = p.lab[static_cast<std::size_t>(start + i)];
      count[static_cast<std::size_t>(i)] =
          static_cast<std::uint8_t>(std::popcount(g_.row(v) & splitter));
      if (count[static_cast<std::size_t>(i)] != count[0]) uniform = false;
    }
    if (uniform) return false;

    std::array<std::pair<std::uint8_t, std::uint8_t>, kMaxVertices> keyed{};
    for (int i = 0; i < size; ++i) {
      keyed[static_cast<std::size_t>(i)] = {count[static_cast<std::size_t>(i)],
                                            p.lab[static_cast<std::size_t>(start + i)]};
    }
    std::sort(keyed.begin(), keyed.begin() + size);
    int run_start = 0;
    for (int i = 0; i < size; ++i) {
      p.lab[static_cast<std::size_t>(start + i)] = keyed[static_cast<std::size_t>(i)].second;
      if (i + 1 == size ||
          keyed[static_cast<std::size_t>(i + 1)].first != keyed[static_cast<std::size_t>(i)].first) {
        p.len[static_cast<std::size_t>(start + run_start)] = static_cast<std::uint8_t>(i + 1 - run_start);
        run_start = i + 1;
      }
    }
    return true;
  }

  bool twins(int u, int v) const {
    const std::uint64_t bu = std::uint64_t{1} << u;
    const std::uint64_t bv = std::uint64_t{1} << v;
    return (g_.row(u) & ~bv) == (g_.row(v) & ~bu);
  }

  void search(const Partition& p) {
    int target = -1;
    for (int s = 0; s < n_; s += p.len[static_cast<std::size_t>(s)]) {
      if (p.len[static_cast<std::size_t>(s)] > 1) {
        target = s;
        break;
      }
    }
    if (target < 0) {
      consider_leaf(p);
      return;
    }
    const int size = p.len[static_cast<std::size_t>(target)];
    std::array<int, kMaxVertices> tried{};
    int tried_count = 0;
    for (int i = 0; i < size; ++i) {
      const int v = p.lab[static_cast<std::size_t>(target + i)];
      bool redundant = false;
      for (int k = 0; k < tried_count && !redundant; ++k) {
        redundant = twins(v, tried[static_cast<std::size_t>(k)]);
      }
      if (redundant) continue;
      tried[static_cast<std::size_t>(tried_count++)] = v;

      Partition child = p;
      std::swap(child.lab[static_cast<std::size_t>(target)],
                child.lab[static_cast<std::size_t>(target + i)]);
      child.len[static_cast<std::size_t>(target)] = 1;
      child.len[static_cast<std::size_t>(target + 1)] = static_cast<std::uint8_t>(size - 1);
      refine(child);
      search(child);
    }
  }

  void consider_leaf(const Partition& p) {
    std::array<int, kMaxVertices> position{};
    for (int i = 0; i < n_; ++i) position[p.lab[static_cast<std::size_t>(i)]] = i;
    Rows rows{};
    for (int i = 0; i < n_; ++i) {
      std::uint64_t r = 0;
      for (int w : VertexSet(g_.row(p.lab[static_cast<std::size_t>(i)]))) {
        r |= std::uint64_t{1} << position[static_cast<std::size_t>(w)];
      }
      rows[static_cast<std::size_t>(i)] = r;
    }
    if (!have_best_ || std::lexicographical_compare(rows.begin(), rows.begin() + n_,
                                                    best_rows_.begin(), best_rows_.begin() + n_)) {
      have_best_ = true;
      best_rows_ = rows;
      best_lab_ = p.lab;
    }
  }

  const Graph& g_;
  int n_;
  bool have_best_ = false;
  Rows best_rows_{};
  std::array<std::uint8_t, kMaxVertices> best_lab_{};
};

}  // namespace

std::vector<int> canonical_labeling(const Graph& g) { return CanonicalSearch(g).run(); }

Graph canonical_graph(const Graph& g) { return g.relabeled(canonical_labeling(g)); }

std::string canonical_form(const Graph& g) { return to_graph6(canonical_graph(g)); }

std::uint64_t pack_upper_triangle(const Graph& g) {
  if (g.order() > 11) throw std::invalid_argument("upper-triangle packing needs order <= 11");
  std::uint64_t code = 0;
  int bit = 0;
  for (int j = 1; j < g.order(); ++j) {
    for (int i = 0; i < j; ++i, ++bit) {
      if (g.has_edge(i, j)) code |= std::uint64_t{1} << bit;
    }
  }
  return code;
}

Graph unpack_upper_triangle(int n, std::uint64_t code) {
  Graph g(n);
  int bit = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++bit) {
      if ((code >> bit) & 1U) g.add_edge(i, j);
    }
  }
  return g;
}

std::uint64_t canonical_code(const Graph& g) { return pack_upper_triangle(canonical_graph(g)); }

}  // namespace factorlab

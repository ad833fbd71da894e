#include "factorlab/edge_coloring.hpp"

#include <algorithm>
#include <array>
#include <bit>

#include "factorlab/errors.hpp"

namespace factorlab {
namespace {

constexpr int kExactOrderLimit = 16;
constexpr int kExactEdgeLimit = 40;
constexpr int kOverfullOrderLimit = 20;
constexpr long kNodesBeforeOverfullCheck = 50'000;

// Renumbers colours so that exactly 0..count-1 occur, preserving order.
void compact(EdgeColoring& coloring) {
  std::vector<int> used = coloring.colors;
  std::sort(used.begin(), used.end());
  used.erase(std::unique(used.begin(), used.end()), used.end());
  for (int& c : coloring.colors) {
    c = static_cast<int>(std::lower_bound(used.begin(), used.end(), c) - used.begin());
  }
  coloring.color_count = static_cast<int>(used.size());
}

class MisraGries {
 public:
  explicit MisraGries(const Graph& g)
      : g_(g),
        n_(g.order()),
        colors_(max_degree(g) + 1),
        at_(static_cast<std::size_t>(n_)),
        color_(static_cast<std::size_t>(n_ * n_), -1) {
    for (auto& row : at_) row.fill(-1);
  }

  EdgeColoring run() {
    EdgeColoring out;
    out.edges = g_.edges();
    for (const Edge& e : out.edges) color_edge(e.u, e.v);
    for (const Edge& e : out.edges) out.colors.push_back(color(e.u, e.v));
    compact(out);
    return out;
  }

 private:
  int color(int u, int v) const { return color_[static_cast<std::size_t>(u * n_ + v)]; }
  bool is_free(int v, int c) const { return at_[static_cast<std::size_t>(v)][static_cast<std::size_t>(c)] < 0; }
  int along(int v, int c) const { return at_[static_cast<std::size_t>(v)][static_cast<std::size_t>(c)]; }

  int lowest_free(int v) const {
    for (int c = 0; c < colors_; ++c) {
      if (is_free(v, c)) return c;
    }
    throw InvariantViolation("vertex has no free colour among Delta+1");
  }

  void set(int u, int v, int c) {
    at_[static_cast<std::size_t>(u)][static_cast<std::size_t>(c)] = v;
    at_[static_cast<std::size_t>(v)][static_cast<std::size_t>(c)] = u;
    color_[static_cast<std::size_t>(u * n_ + v)] = c;
    color_[static_cast<std::size_t>(v * n_ + u)] = c;
  }

  void clear(int u, int v) {
    const int c = color(u, v);
    at_[static_cast<std::size_t>(u)][static_cast<std::size_t>(c)] = -1;
    at_[static_cast<std::size_t>(v)][static_cast<std::size_t>(c)] = -1;
    color_[static_cast<std::size_t>(u * n_ + v)] = -1;
    color_[static_cast<std::size_t>(v * n_ + u)] = -1;
  }

  void color_edge(int x, int first) {
    // Maximal fan at x starting with the uncoloured edge x-first.
    std::vector<int> fan{first};
    VertexSet in_fan = VertexSet::singleton(first);
    for (bool extended = true; extended;) {
      extended = false;
      for (int c = 0; c < colors_; ++c) {
        if (!is_free(fan.back(), c)) continue;
        const int w = along(x, c);
        if (w >= 0 && !in_fan.contains(w)) {
          fan.push_back(w);
          in_fan.insert(w);
          extended = true;
          break;
        }
      }
    }

    const int c = lowest_free(x);
    const int d = lowest_free(fan.back());
    invert_path(x, c, d);

    // First fan vertex with d free whose prefix is still a fan.
    std::size_t stop = fan.size();
    for (std::size_t i = 0; i < fan.size(); ++i) {
      if (i > 0 && !is_free(fan[i - 1], color(x, fan[i]))) break;
      if (is_free(fan[i], d)) {
        stop = i;
        break;
      }
    }
    if (stop == fan.size()) throw InvariantViolation("no rotatable fan prefix after cd-path inversion");

    for (std::size_t i = 0; i < stop; ++i) {
      const int shifted = color(x, fan[i + 1]);
      clear(x, fan[i + 1]);
      set(x, fan[i], shifted);
    }
    set(x, fan[stop], d);
  }

  // Swaps c and d along the maximal path from x that starts with colour d.
  void invert_path(int x, int c, int d) {
    if (c == d) return;
    std::vector<std::array<int, 3>> path;
    int v = x;
    int want = d;
    for (int w = along(v, want); w >= 0; w = along(v, want)) {
      path.push_back({v, w, want});
      v = w;
      want = want == d ? c : d;
    }
    for (const auto& [a, b, col] : path) clear(a, b);
    for (const auto& [a, b, col] : path) set(a, b, col == d ? c : d);
  }

  const Graph& g_;
  int n_;
  int colors_;
  std::vector<std::array<int, kMaxVertices + 1>> at_;
  std::vector<int> color_;
};

// |E(G[W])| > k * floor(|W| / 2) for some W proves G is not k-edge-colourable,
// since each colour class within W is a matching of G[W].
bool has_overfull_subgraph(const Graph& g, int k) {
  const int n = g.order();
  const std::uint64_t all = VertexSet::range(n).bits();
  for (std::uint64_t w = 1; w <= all && w != 0; ++w) {
    const int size = std::popcount(w);
    if (size % 2 == 0) continue;
    int twice = 0;
    for (std::uint64_t r = w; r != 0; r &= r - 1) twice += std::popcount(g.row(std::countr_zero(r)) & w);
    if (twice / 2 > k * (size / 2)) return true;
  }
  return false;
}

class ExactEdgeColorer {
 public:
  ExactEdgeColorer(const Graph& g, int k)
      : g_(g),
        k_(k),
        edges_(g.edges()),
        color_(edges_.size(), -1),
        used_(static_cast<std::size_t>(g.order()), 0) {}

  std::optional<EdgeColoring> run() {
    if (!search(0, 0)) return std::nullopt;
    EdgeColoring out{edges_, color_, 0};
    compact(out);
    return out;
  }

 private:
  bool search(std::size_t colored, int opened) {
    if (colored == edges_.size()) return true;
    if (++nodes_ == kNodesBeforeOverfullCheck && g_.order() <= kOverfullOrderLimit &&
        has_overfull_subgraph(g_, k_)) {
      abandoned_ = true;
    }
    if (abandoned_) return false;

    const int open_colors = std::min(opened + 1, k_);
    const std::uint64_t palette =
        open_colors >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << open_colors) - 1;
    std::size_t pick = edges_.size();
    std::uint64_t pick_allowed = 0;
    int pick_count = kMaxVertices + 1;
    int pick_weight = -1;
    for (std::size_t i = 0; i < edges_.size(); ++i) {
      if (color_[i] >= 0) continue;
      const Edge e = edges_[i];
      const std::uint64_t allowed =
          ~(used_[static_cast<std::size_t>(e.u)] | used_[static_cast<std::size_t>(e.v)]) & palette;
      const int count = std::popcount(allowed);
      if (count == 0) return false;
      const int weight = std::popcount(g_.row(e.u)) + std::popcount(g_.row(e.v));
      if (count < pick_count || (count == pick_count && weight > pick_weight)) {
        pick = i;
        pick_allowed = allowed;
        pick_count = count;
        pick_weight = weight;
      }
    }

    const Edge e = edges_[pick];
    for (std::uint64_t a = pick_allowed; a != 0; a &= a - 1) {
      const int c = std::countr_zero(a);
      const std::uint64_t bit = std::uint64_t{1} << c;
      color_[pick] = c;
      used_[static_cast<std::size_t>(e.u)] |= bit;
      used_[static_cast<std::size_t>(e.v)] |= bit;
      if (search(colored + 1, std::max(opened, c + 1))) return true;
      used_[static_cast<std::size_t>(e.u)] &= ~bit;
      used_[static_cast<std::size_t>(e.v)] &= ~bit;
      color_[pick] = -1;
      if (abandoned_) return false;
    }
    return false;
  }

  const Graph& g_;
  int k_;
  std::vector<Edge> edges_;
  std::vector<int> color_;
  std::vector<std::uint64_t> used_;
  long nodes_ = 0;
  bool abandoned_ = false;
};

}  // namespace

int EdgeColoring::color_of(Edge e) const {
  const auto it = std::lower_bound(edges.begin(), edges.end(), e);
  if (it == edges.end() || *it != e) return -1;
  return colors[static_cast<std::size_t>(it - edges.begin())];
}

bool is_proper_coloring(const Graph& g, const EdgeColoring& coloring) {
  if (coloring.edges.size() != coloring.colors.size()) return false;
  std::vector<Edge> sorted = coloring.edges;
  std::sort(sorted.begin(), sorted.end());
  if (sorted != g.edges()) return false;
  std::vector<std::uint64_t> seen(static_cast<std::size_t>(g.order()), 0);
  for (std::size_t i = 0; i < coloring.edges.size(); ++i) {
    const int c = coloring.colors[i];
    if (c < 0 || c >= coloring.color_count || c >= 64) return false;
    const std::uint64_t bit = std::uint64_t{1} << c;
    const Edge e = coloring.edges[i];
    if ((seen[static_cast<std::size_t>(e.u)] | seen[static_cast<std::size_t>(e.v)]) & bit) return false;
    seen[static_cast<std::size_t>(e.u)] |= bit;
    seen[static_cast<std::size_t>(e.v)] |= bit;
  }
  return true;
}

EdgeColoring vizing_color(const Graph& g) { return MisraGries(g).run(); }

std::optional<EdgeColoring> edge_colorable(const Graph& g, int k) {
  const int delta = max_degree(g);
  if (g.edge_count() == 0) return EdgeColoring{};
  if (k < delta) return std::nullopt;
  if (k > delta) return vizing_color(g);
  return ExactEdgeColorer(g, k).run();
}

ChromaticIndex chromatic_index(const Graph& g) {
  const int m = g.edge_count();
  if (g.order() > kExactOrderLimit && m > kExactEdgeLimit) {
    throw CapabilityError("exact chromatic index accepts order <= 16 or at most 40 edges");
  }
  if (m == 0) return {0, EdgeColoring{}};
  const int delta = max_degree(g);
  if (auto coloring = edge_colorable(g, delta)) return {delta, std::move(*coloring)};
  EdgeColoring fallback = vizing_color(g);
  if (fallback.color_count != delta + 1) {
    throw InvariantViolation("class-2 graph coloured with fewer than Delta+1 colours");
  }
  return {delta + 1, std::move(fallback)};
}

EdgeClass classify(const Graph& g) {
  return chromatic_index(g).value == max_degree(g) ? EdgeClass::kClass1 : EdgeClass::kClass2;
}

namespace {

bool critical_with(const Graph& g, int chi) {
  for (const Edge& e : g.edges()) {
    if (!edge_colorable(g.without_edge(e), chi - 1)) return false;
  }
  return true;
}

}  // namespace

bool is_critical(const Graph& g) {
  if (g.edge_count() == 0 || min_degree(g) == 0) return false;
  return critical_with(g, chromatic_index(g).value);
}

bool is_delta_critical(const Graph& g) {
  if (g.edge_count() == 0 || min_degree(g) == 0) return false;
  const int chi = chromatic_index(g).value;
  if (chi != max_degree(g) + 1) return false;
  return critical_with(g, chi);
}

}  // namespace factorlab

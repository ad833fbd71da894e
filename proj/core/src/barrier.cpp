#include "factorlab/barrier.hpp"

#include <bit>
#include <stdexcept>
#include <tuple>

#include "factorlab/errors.hpp"

namespace factorlab {
namespace {

constexpr int kFindBarrierLimit = 20;
constexpr int kMinimumBarrierLimit = 16;

void check_pair(const Graph& g, VertexSet s, VertexSet t) {
  if (s.intersects(t)) throw std::invalid_argument("S and T must be disjoint");
  if (!(s | t).is_subset_of(g.vertices())) throw std::invalid_argument("S or T leaves the graph");
}

// h(S,T) for rest = V - (S u T).
int odd_component_count(const Graph& g, std::uint64_t rest, std::uint64_t t) {
  int h = 0;
  while (rest != 0) {
    std::uint64_t comp = rest & (~rest + 1);
    std::uint64_t frontier = comp;
    while (frontier != 0) {
      std::uint64_t reach = 0;
      for (std::uint64_t f = frontier; f != 0; f &= f - 1) reach |= g.row(std::countr_zero(f));
      frontier = reach & rest & ~comp;
      comp |= frontier;
    }
    int parity = 0;
    for (std::uint64_t c = comp; c != 0; c &= c - 1) {
      parity ^= std::popcount(g.row(std::countr_zero(c)) & t);
    }
    h += parity & 1;
    rest &= ~comp;
  }
  return h;
}

// Walks every disjoint (S, T), S outer and T inner, both in increasing
// bitmask order. `visit(s, t, delta, h)` sees only pairs whose deficiency
// can be at most `threshold()` (a cheap bound filters the rest) and returns
// false to stop the scan.
template <typename Threshold, typename Visit>
void scan_pairs(const Graph& g, Threshold threshold, Visit visit) {
  const int n = g.order();
  const std::uint64_t all = VertexSet::range(n).bits();
  std::vector<int> sum(std::size_t{1} << n);  // sum over T of (d_{G-S}(v) - 2)
  std::array<int, kMaxVertices> reduced{};
  for (std::uint64_t s = 0;; s = (s - all) & all) {
    const std::uint64_t rest_all = all & ~s;
    for (std::uint64_t r = rest_all; r != 0; r &= r - 1) {
      const int v = std::countr_zero(r);
      reduced[static_cast<std::size_t>(v)] = std::popcount(g.row(v) & rest_all) - 2;
    }
    const int twice_s = 2 * std::popcount(s);
    const int free_count = n - std::popcount(s);
    sum[0] = 0;
    for (std::uint64_t t = 0;; t = (t - rest_all) & rest_all) {
      if (t != 0) {
        sum[t] = sum[t & (t - 1)] + reduced[static_cast<std::size_t>(std::countr_zero(t))];
      }
      const int base = twice_s + sum[t];
      const int remaining = free_count - std::popcount(t);
      // h <= number of remaining vertices
      if (base - remaining <= threshold()) {
        const int h = odd_component_count(g, rest_all & ~t, t);
        if (!visit(s, t, base - h, h)) return;
      }
      if (t == rest_all) break;
    }
    if (s == all) break;
  }
}

}  // namespace

DeficiencyTerms deficiency_terms(const Graph& g, VertexSet s, VertexSet t) {
  check_pair(g, s, t);
  DeficiencyTerms terms;
  terms.twice_s = 2 * s.size();
  terms.twice_t = 2 * t.size();
  const VertexSet not_s = g.vertices() - s;
  for (int v : t) terms.degree_sum += (g.neighbors(v) & not_s).size();
  terms.h = odd_component_count(g, (g.vertices() - s - t).bits(), t.bits());
  return terms;
}

int deficiency_delta(const Graph& g, VertexSet s, VertexSet t) {
  return deficiency_terms(g, s, t).value();
}

Barrier make_barrier(const Graph& g, VertexSet s, VertexSet t) {
  const DeficiencyTerms terms = deficiency_terms(g, s, t);
  return {s, t, terms.value(), terms.h};
}

ComponentClassification::ComponentClassification(const Graph& g, VertexSet s, VertexSet t)
    : s_(s), t_(t) {
  check_pair(g, s, t);
  for (VertexSet comp : components_within(g, g.vertices() - s - t)) {
    ComponentInfo info;
    info.vertices = comp;
    for (int v : t) {
      const int k = (g.neighbors(v) & comp).size();
      info.edges_to_t += k;
      if (k >= 1) info.contacts.insert(v);
      if (k == 1) info.single_contacts.insert(v);
    }
    components_.push_back(info);
  }
}

int ComponentClassification::odd_count() const {
  int h = 0;
  for (const ComponentInfo& c : components_) h += c.odd() ? 1 : 0;
  return h;
}

namespace {

template <typename Pred>
std::vector<int> select(const std::vector<ComponentInfo>& comps, Pred pred) {
  std::vector<int> out;
  for (std::size_t i = 0; i < comps.size(); ++i) {
    if (pred(comps[i])) out.push_back(static_cast<int>(i));
  }
  return out;
}

}  // namespace

std::vector<int> ComponentClassification::odd() const {
  return select(components_, [](const ComponentInfo& c) { return c.odd(); });
}

std::vector<int> ComponentClassification::even() const {
  return select(components_, [](const ComponentInfo& c) { return !c.odd(); });
}

std::vector<int> ComponentClassification::with_edges_to_t(int k) const {
  return select(components_, [k](const ComponentInfo& c) { return c.odd() && c.edges_to_t == k; });
}

std::vector<int> ComponentClassification::at_least(int k) const {
  return select(components_, [k](const ComponentInfo& c) { return c.odd() && c.edges_to_t >= k; });
}

std::vector<int> ComponentClassification::single_edge_from(int v) const {
  return select(components_,
                [v](const ComponentInfo& c) { return c.odd() && c.single_contacts.contains(v); });
}

std::vector<int> ComponentClassification::class1_single_edge_from(int v) const {
  return select(components_, [v](const ComponentInfo& c) {
    return c.odd() && c.edges_to_t == 1 && c.single_contacts.contains(v);
  });
}

std::vector<int> ComponentClassification::singletons(const std::vector<int>& family) const {
  std::vector<int> out;
  for (int i : family) {
    if ((*this)[i].singleton()) out.push_back(i);
  }
  return out;
}

std::vector<int> ComponentClassification::non_singletons(const std::vector<int>& family) const {
  std::vector<int> out;
  for (int i : family) {
    if (!(*this)[i].singleton()) out.push_back(i);
  }
  return out;
}

VertexSet ComponentClassification::vertices_of(const std::vector<int>& family) const {
  VertexSet out;
  for (int i : family) out |= (*this)[i].vertices;
  return out;
}

ComponentClassification classify_components(const Graph& g, VertexSet s, VertexSet t) {
  return ComponentClassification(g, s, t);
}

std::optional<Barrier> find_barrier(const Graph& g) {
  if (g.order() > kFindBarrierLimit) {
    throw CapabilityError("find_barrier scans 3^n pairs and accepts at most 20 vertices");
  }
  std::optional<Barrier> best;
  auto key = [](const Barrier& b) {
    return std::tuple(b.deficiency, (b.s | b.t).size(), b.s.bits(), b.t.bits());
  };
  scan_pairs(
      g, [&] { return best ? best->deficiency : -2; },
      [&](std::uint64_t s, std::uint64_t t, int delta, int h) {
        if (delta > -2) return true;
        Barrier candidate{VertexSet(s), VertexSet(t), delta, h};
        if (!best || key(candidate) < key(*best)) best = candidate;
        return true;
      });
  return best;
}

bool has_barrier(const Graph& g) {
  if (g.order() > kFindBarrierLimit) {
    throw CapabilityError("has_barrier scans 3^n pairs and accepts at most 20 vertices");
  }
  bool found = false;
  scan_pairs(
      g, [] { return -2; },
      [&](std::uint64_t, std::uint64_t, int delta, int) {
        found = delta <= -2;
        return !found;
      });
  return found;
}

std::optional<Barrier> minimum_barrier(const Graph& g) {
  const int n = g.order();
  if (n > kMinimumBarrierLimit) {
    throw CapabilityError("minimum_barrier accepts at most 16 vertices");
  }
  const std::uint64_t all = VertexSet::range(n).bits();
  for (int k = 1; k <= n; ++k) {
    std::optional<Barrier> best;
    std::uint64_t u = (std::uint64_t{1} << k) - 1;
    while (u <= all) {
      for (std::uint64_t s = 0;; s = (s - u) & u) {
        const std::uint64_t t = u & ~s;
        const std::uint64_t rest = all & ~u;
        int degree_sum = 0;
        for (std::uint64_t m = t; m != 0; m &= m - 1) {
          degree_sum += std::popcount(g.row(std::countr_zero(m)) & ~s);
        }
        const int base = 2 * std::popcount(s) + degree_sum - 2 * std::popcount(t);
        if (base - std::popcount(rest) <= -2) {
          const int h = odd_component_count(g, rest, t);
          if (base - h <= -2) {
            Barrier candidate{VertexSet(s), VertexSet(t), base - h, h};
            if (!best || std::tuple(h, s, t) < std::tuple(best->h, best->s.bits(), best->t.bits())) {
              best = candidate;
            }
          }
        }
        if (s == u) break;
      }
      const std::uint64_t low = u & (~u + 1);
      const std::uint64_t ripple = u + low;
      if (ripple == 0) break;
      u = (((ripple ^ u) >> 2) / low) | ripple;
    }
    if (best) return best;
  }
  return std::nullopt;
}

GraphDeficiency graph_deficiency(const Graph& g) {
  const int delta = max_degree(g);
  int total = 0;
  for (int v = 0; v < g.order(); ++v) total += delta - degree(g, v);
  return {total, g.order() % 2 == 1 && total < delta};
}

}  // namespace factorlab

#include "factorlab/lemma_audit.hpp"

#include <queue>
#include <stdexcept>
#include <string>
#include <vector>

#include "factorlab/aux_bipartite.hpp"
#include "factorlab/barrier.hpp"
#include "factorlab/bipartite.hpp"
#include "factorlab/edge_coloring.hpp"
#include "factorlab/graph6.hpp"
#include "factorlab/two_factor.hpp"

namespace factorlab {
namespace {

// Component census recomputed by plain BFS over neighbour lists, separate
// from the bitset routines in barrier.cpp, so the checkers do not inherit
// their bugs.
struct Piece {
  std::vector<int> vertices;
  VertexSet members;
  std::vector<int> from_t;  // edges from each vertex into the piece, indexed by vertex
  int edges_to_t = 0;

  bool odd() const { return edges_to_t % 2 == 1; }
};

std::vector<Piece> census(const Graph& g, VertexSet s, VertexSet t) {
  const int n = g.order();
  std::vector<int> label(static_cast<std::size_t>(n), -1);
  std::vector<Piece> pieces;
  for (int root = 0; root < n; ++root) {
    if (s.contains(root) || t.contains(root) || label[static_cast<std::size_t>(root)] >= 0) continue;
    Piece piece;
    piece.from_t.assign(static_cast<std::size_t>(n), 0);
    std::queue<int> q;
    q.push(root);
    label[static_cast<std::size_t>(root)] = static_cast<int>(pieces.size());
    while (!q.empty()) {
      const int v = q.front();
      q.pop();
      piece.vertices.push_back(v);
      piece.members.insert(v);
      for (int w = 0; w < n; ++w) {
        if (!g.has_edge(v, w)) continue;
        if (t.contains(w)) {
          ++piece.from_t[static_cast<std::size_t>(w)];
          ++piece.edges_to_t;
        } else if (!s.contains(w) && label[static_cast<std::size_t>(w)] < 0) {
          label[static_cast<std::size_t>(w)] = static_cast<int>(pieces.size());
          q.push(w);
        }
      }
    }
    pieces.push_back(std::move(piece));
  }
  return pieces;
}

int local_deficiency(const Graph& g, VertexSet s, VertexSet t, const std::vector<Piece>& pieces) {
  int value = 2 * s.size() - 2 * t.size();
  for (int v : t) {
    for (int w = 0; w < g.order(); ++w) {
      if (g.has_edge(v, w) && !s.contains(w)) ++value;
    }
  }
  for (const Piece& p : pieces) value -= p.odd() ? 1 : 0;
  return value;
}

std::string pair_text(VertexSet s, VertexSet t) {
  return "S=" + s.to_string() + " T=" + t.to_string();
}

void fail(AuditRecord& record, const std::string& why) {
  if (record.conclusion_holds) record.witness = why;
  record.conclusion_holds = false;
}

bool delta_critical_hypothesis(const Graph& g, Hypothesis mode) {
  return mode == Hypothesis::kAssume || is_delta_critical(g);
}

struct BarrierContext {
  Barrier barrier;
  std::vector<Piece> pieces;
};

// Shared front half of the barrier-based checkers. Returns nothing when the
// hypothesis (no 2-factor) fails; marks the record failed if no barrier is
// found despite that.
std::optional<BarrierContext> barrier_context(const Graph& g, AuditRecord& record) {
  if (find_2_factor(g)) {
    record.hypothesis_satisfied = false;
    record.witness = "graph has a 2-factor";
    return std::nullopt;
  }
  record.hypothesis_satisfied = true;
  const std::optional<Barrier> barrier = minimum_barrier(g);
  if (!barrier) {
    fail(record, "no barrier found although the graph has no 2-factor");
    return std::nullopt;
  }
  BarrierContext ctx{*barrier, census(g, barrier->s, barrier->t)};
  const int delta = local_deficiency(g, barrier->s, barrier->t, ctx.pieces);
  record.diagnostics["s"] = barrier->s.size();
  record.diagnostics["t"] = barrier->t.size();
  record.diagnostics["deficiency"] = delta;
  record.witness = pair_text(barrier->s, barrier->t);
  if (delta != barrier->deficiency || delta > -2 || delta % 2 != 0) {
    fail(record, "reported barrier " + pair_text(barrier->s, barrier->t) + " recomputes to deficiency " +
                     std::to_string(delta));
  }
  return ctx;
}

// sum over k >= 1 of k * |C_{2k+1}|
int split_total(const std::vector<Piece>& pieces) {
  int total = 0;
  for (const Piece& p : pieces) {
    if (p.odd() && p.edges_to_t >= 3) total += (p.edges_to_t - 1) / 2;
  }
  return total;
}

}  // namespace

AuditRecord check_val(const Graph& g, Hypothesis mode) {
  AuditRecord record{"adjacency", to_graph6(g), false, true, "", {}};
  if (!delta_critical_hypothesis(g, mode)) {
    record.witness = "graph is not Delta-critical";
    return record;
  }
  record.hypothesis_satisfied = true;
  const int delta = max_degree(g);
  const VertexSet big = delta_vertices(g);
  record.diagnostics["delta"] = delta;
  record.diagnostics["min_degree"] = min_degree(g);
  for (int x = 0; x < g.order(); ++x) {
    for (int y : g.neighbors(x)) {
      const int have = (g.neighbors(x) & (big - VertexSet::singleton(y))).size();
      const int need = delta - degree(g, y) + 1;
      if (have < need) {
        fail(record, "edge " + std::to_string(x) + "-" + std::to_string(y) + ": " + std::to_string(x) +
                         " has " + std::to_string(have) + " Delta-neighbours besides " +
                         std::to_string(y) + ", needs " + std::to_string(need));
      }
    }
  }
  if (min_degree(g) < 2) fail(record, "minimum degree " + std::to_string(min_degree(g)) + " < 2");
  if (record.conclusion_holds) record.witness = "all " + std::to_string(g.edge_count()) + " edges";
  return record;
}

AuditRecord check_tnodelta(const Graph& g, VertexSet t, Hypothesis mode) {
  if (!is_independent(g, t)) throw std::invalid_argument("T must be an independent set");
  AuditRecord record{"hstar-degree", to_graph6(g), false, true, "T=" + t.to_string(), {}};
  if (!delta_critical_hypothesis(g, mode)) {
    record.witness = "graph is not Delta-critical";
    return record;
  }
  record.hypothesis_satisfied = true;

  const AuxBipartite hstar = build_Hstar(g, t);
  const BipartiteGraph& h = hstar.graph;
  record.diagnostics["delta0"] = hstar.delta0;
  for (int y = 0; y < h.right_count(); ++y) {
    const int gv = hstar.right_vertices[static_cast<std::size_t>(y)];
    if (h.right_degree(y) != degree(g, gv)) {
      fail(record, "d_H*(" + std::to_string(gv) + ") differs from its degree in G");
    }
  }
  for (auto [x, y] : h.edges()) {
    const int lhs = h.right_degree(y);
    const int rhs = h.left_degree(x) + 1 - hstar.delta0 + hstar.sigma[static_cast<std::size_t>(x)];
    if (lhs < rhs) {
      fail(record, "edge " + std::to_string(hstar.left_origin[static_cast<std::size_t>(x)].vertex) + "-" +
                       std::to_string(hstar.right_vertices[static_cast<std::size_t>(y)]) + ": d(y)=" +
                       std::to_string(lhs) + " < " + std::to_string(rhs));
    }
  }
  if (hstar.delta0 <= 1) {
    const BipartiteMatching m = max_bipartite_matching(h);
    record.diagnostics["matching"] = m.size();
    if (!m.saturates_right()) {
      fail(record, "delta0=" + std::to_string(hstar.delta0) + " but the maximum matching covers only " +
                       std::to_string(m.size()) + " of " + std::to_string(t.size()) + " T-vertices");
    }
  }
  return record;
}

AuditRecord check_min_barrier(const Graph& g) {
  AuditRecord record{"min-barrier", to_graph6(g), false, true, "", {}};
  const std::optional<BarrierContext> ctx = barrier_context(g, record);
  if (!ctx) return record;
  const VertexSet s = ctx->barrier.s;
  const VertexSet t = ctx->barrier.t;
  const std::vector<Piece>& pieces = ctx->pieces;

  if (!is_independent(g, t)) fail(record, "T=" + t.to_string() + " is not independent");

  int odd_count = 0;
  for (const Piece& p : pieces) {
    if (!p.odd()) {
      if (p.edges_to_t != 0) {
        fail(record, "even component containing " + std::to_string(p.vertices.front()) + " has " +
                         std::to_string(p.edges_to_t) + " edges to T");
      }
      continue;
    }
    ++odd_count;
    for (int v : t) {
      if (p.from_t[static_cast<std::size_t>(v)] > 1) {
        fail(record, "T-vertex " + std::to_string(v) + " sends " +
                         std::to_string(p.from_t[static_cast<std::size_t>(v)]) +
                         " edges into the odd component containing " + std::to_string(p.vertices.front()));
      }
    }
  }
  record.diagnostics["h"] = odd_count;

  for (int v : t) {
    int single = 0;  // |C_v|
    for (const Piece& p : pieces) single += p.odd() && p.from_t[static_cast<std::size_t>(v)] == 1 ? 1 : 0;
    if (single < 2) continue;
    for (const Piece& d : pieces) {
      if (!d.odd() || d.edges_to_t != 1 || d.from_t[static_cast<std::size_t>(v)] != 1) continue;
      const VertexSet closed = d.members | VertexSet::singleton(v);
      for (int w : d.vertices) {
        if ((g.neighbors(w) & closed).size() < 2) {
          fail(record, "v=" + std::to_string(v) + " D=" + d.members.to_string() + " w=" + std::to_string(w) +
                           ": e(w, V(D)+v) < 2");
        }
      }
      if (d.vertices.size() < 2) {
        fail(record, "v=" + std::to_string(v) + " has |C_v|=" + std::to_string(single) +
                         " but D=" + d.members.to_string() + " in C_1v is a single vertex");
      }
    }
  }

  const int bound = s.size() + split_total(pieces);
  record.diagnostics["t_bound"] = bound;
  if (t.size() <= bound) {
    fail(record, "|T|=" + std::to_string(t.size()) + " <= |S| + sum k|C_{2k+1}| = " + std::to_string(bound));
  }
  return record;
}

AuditRecord check_H_construction(const Graph& g) {
  AuditRecord record{"h-construction", to_graph6(g), false, true, "", {}};
  const std::optional<BarrierContext> ctx = barrier_context(g, record);
  if (!ctx) return record;
  const VertexSet s = ctx->barrier.s;
  const VertexSet t = ctx->barrier.t;
  const std::vector<Piece>& pieces = ctx->pieces;
  if (!is_independent(g, t)) {
    fail(record, "T=" + t.to_string() + " is not independent; H is undefined");
    return record;
  }

  const AuxBipartite hstar = build_Hstar(g, t, s);
  const AuxBipartite h = build_H(g, s, t);

  // class-1 odd components and their partners
  std::vector<std::size_t> class1;
  for (std::size_t i = 0; i < pieces.size(); ++i) {
    if (pieces[i].odd() && pieces[i].edges_to_t == 1) class1.push_back(i);
  }
  auto class1_contacts = [&](int y) {
    int count = 0;
    for (std::size_t i : class1) count += pieces[i].from_t[static_cast<std::size_t>(y)] == 1 ? 1 : 0;
    return count;
  };

  VertexSet s_prime = s;
  for (const Piece& p : pieces) {
    if (p.odd() && p.edges_to_t == 3 && p.vertices.size() == 1) s_prime.insert(p.vertices.front());
  }

  for (int y : t) {
    const int yi = hstar.right_index_of(y);
    const int hstar_degree = hstar.graph.right_degree(yi);
    if (hstar_degree != degree(g, y)) fail(record, "d_H*(" + std::to_string(y) + ") != d_G");
    if (h.graph.right_degree(h.right_index_of(y)) != hstar_degree - class1_contacts(y)) {
      fail(record, "d_H(" + std::to_string(y) + ") != d_H*(y) - |C_1y|");
    }
  }
  const VertexSet x_prime = g.vertices() - t;
  if ((x_prime & h.left_graph_vertices()) != s_prime) {
    fail(record, "X' n X = " + (x_prime & h.left_graph_vertices()).to_string() + " but S' = " +
                     s_prime.to_string());
  }
  if (h.s_prime != s_prime) fail(record, "H reports S' = " + h.s_prime.to_string());
  for (int x : s_prime) {
    const int in_h = h.graph.left_degree(h.left_index_of(x));
    const int in_hstar = hstar.graph.left_degree(hstar.left_index_of(x));
    if (in_h != in_hstar) fail(record, "d_H(" + std::to_string(x) + ") != d_H*(x)");
  }

  // split-degree law, component by component
  std::vector<int> split_seen;
  for (std::size_t i = 0; i < h.left_origin.size(); ++i) {
    const LeftOrigin& o = h.left_origin[i];
    if (o.kind != LeftOriginKind::kSplitVertex) continue;
    const int want = o.split_index == 1 ? 3 : 2;
    if (h.graph.left_degree(static_cast<int>(i)) != want) {
      fail(record, "split vertex u_" + std::to_string(o.split_index) + " of component " +
                       std::to_string(o.component) + " has degree " +
                       std::to_string(h.graph.left_degree(static_cast<int>(i))));
    }
  }
  const int x_expected = s.size() + split_total(pieces);
  if (h.graph.left_count() != x_expected) {
    fail(record, "|X|=" + std::to_string(h.graph.left_count()) + " but |S| + sum k|C_{2k+1}| = " +
                     std::to_string(x_expected));
  }
  record.diagnostics["x"] = h.graph.left_count();
  record.diagnostics["t_exceeds_x"] = t.size() > h.graph.left_count() ? 1 : 0;

  // C_11 / C_12 by the partner's number of edges into V(C_1)
  VertexSet class1_vertices;
  for (std::size_t i : class1) class1_vertices |= pieces[i].members;
  std::vector<std::size_t> c11_single, c11_multi, c12;
  for (std::size_t i : class1) {
    int partner = -1;
    for (int y : t) {
      if (pieces[i].from_t[static_cast<std::size_t>(y)] == 1) partner = y;
    }
    if ((g.neighbors(partner) & class1_vertices).size() >= 2) {
      c12.push_back(i);
    } else if (pieces[i].vertices.size() == 1) {
      c11_single.push_back(i);
    } else {
      c11_multi.push_back(i);
    }
  }
  if (c12.size() == 1) fail(record, "C_12 has exactly one member");

  auto edges_into = [&](int y, const std::vector<std::size_t>& family) {
    int count = 0;
    for (std::size_t i : family) count += pieces[i].from_t[static_cast<std::size_t>(y)];
    return count;
  };
  int t0 = 0, t11 = 0, t12 = 0, t2 = 0;
  for (int y : t) {
    t0 += edges_into(y, class1) == 0 ? 1 : 0;
    t11 += edges_into(y, c11_single) == 1 ? 1 : 0;
    t12 += edges_into(y, c11_multi) == 1 ? 1 : 0;
    t2 += edges_into(y, c12) >= 2 ? 1 : 0;
  }
  int m3 = 0;
  for (const Piece& p : pieces) m3 += p.odd() && p.edges_to_t >= 3 && p.vertices.size() >= 2 ? 1 : 0;
  record.diagnostics["T0"] = t0;
  record.diagnostics["T1_1"] = t11;
  record.diagnostics["T1_2"] = t12;
  record.diagnostics["T2"] = t2;
  record.diagnostics["m11"] = static_cast<std::int64_t>(c11_single.size());
  record.diagnostics["m12"] = static_cast<std::int64_t>(c11_multi.size());
  record.diagnostics["m2"] = static_cast<std::int64_t>(c12.size());
  record.diagnostics["m3"] = m3;
  return record;
}

}  // namespace factorlab

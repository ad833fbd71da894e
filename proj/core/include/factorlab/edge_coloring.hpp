#pragma once

#include <optional>
#include <vector>

#include "factorlab/graph.hpp"

namespace factorlab {

/// Colour per edge, parallel to `edges` (which is g.edges()). Colours are
/// 0..color_count-1 and every one of them is used.
struct EdgeColoring {
  std::vector<Edge> edges;
  std::vector<int> colors;
  int color_count = 0;

  int color_of(Edge e) const;
};

/// Covers each edge of g exactly once with adjacent edges coloured apart.
bool is_proper_coloring(const Graph& g, const EdgeColoring& coloring);

/// Proper colouring with at most Delta+1 colours (Misra-Gries fans and
/// cd-path inversion). Edges are processed in g.edges() order and every
/// choice takes the lowest free colour, so the output is deterministic.
EdgeColoring vizing_color(const Graph& g);

/// A proper colouring with at most k colours, or nothing. Exact and
/// exponential: backtracking on the most constrained edge with colour
/// symmetry breaking (a colour may be opened only after all lower ones).
std::optional<EdgeColoring> edge_colorable(const Graph& g, int k);

struct ChromaticIndex {
  int value = 0;
  EdgeColoring certificate;  // uses exactly `value` colours
};

/// Exact chi'(G). Accepts order <= 16 or at most 40 edges and throws
/// CapabilityError otherwise. Graphs without edges have chi' = 0.
ChromaticIndex chromatic_index(const Graph& g);

enum class EdgeClass { kClass1, kClass2 };

/// Class 1 iff chi' = Delta (edgeless graphs count as class 1).
EdgeClass classify(const Graph& g);

/// No isolated vertices, at least one edge, and chi'(G - e) < chi'(G) for
/// every edge e. G - e keeps all vertices.
bool is_critical(const Graph& g);

/// Critical and class 2.
bool is_delta_critical(const Graph& g);

}  // namespace factorlab

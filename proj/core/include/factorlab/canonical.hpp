#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "factorlab/graph.hpp"

namespace factorlab {

/// A canonical ordering of the vertices: relabeling g by it yields the same
/// graph for every graph isomorphic to g.
///
/// The search refines an ordered vertex partition to an equitable one,
/// individualizes vertices of the first non-singleton cell, and keeps the
/// lexicographically smallest adjacency matrix over all leaves. Vertices that
/// are twins (N(u)-v == N(v)-u) are interchangeable by an automorphism, so
/// only one per twin class is individualized.
std::vector<int> canonical_labeling(const Graph& g);

/// g relabeled by canonical_labeling(g).
Graph canonical_graph(const Graph& g);

/// Byte string equal for two graphs iff they are isomorphic (the graph6
/// encoding of the canonical graph).
std::string canonical_form(const Graph& g);

/// Upper-triangle bit packing of the canonical graph; exact for order <= 11.
std::uint64_t canonical_code(const Graph& g);

/// Upper-triangle bit packing, bit index j*(j-1)/2 + i for edge i<j.
std::uint64_t pack_upper_triangle(const Graph& g);
Graph unpack_upper_triangle(int n, std::uint64_t code);

}  // namespace factorlab

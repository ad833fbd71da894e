#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "factorlab/graph.hpp"

namespace factorlab {

inline constexpr int kMaxEnumerationOrder = 9;
inline constexpr int kMaxCriticalOrder = 8;

/// Canonical codes (see canonical_code) of the connected graphs of order n,
/// one per isomorphism class, ascending. Throws CapabilityError unless
/// 1 <= n <= 9.
std::vector<std::uint64_t> connected_codes(int n);

/// Same for all graphs of order n (0 <= n <= 9).
std::vector<std::uint64_t> graph_codes(int n);

/// Visits the canonical representative of every class in code order without
/// materializing all of them at once.
void for_each_connected(int n, const std::function<void(const Graph&)>& visit);
void for_each_graph(int n, const std::function<void(const Graph&)>& visit);

std::vector<Graph> enumerate_connected(int n);
std::vector<Graph> enumerate_graphs(int n);

/// Connected graphs of order n that are Delta-critical. n <= 8.
std::vector<Graph> enumerate_delta_critical(int n);

}  // namespace factorlab

#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "factorlab/graph.hpp"

namespace factorlab {

/// Outcome of checking one lemma on one graph. A failed conclusion always
/// carries a witness that localizes the violation; a passing one records
/// the instance that was checked.
struct AuditRecord {
  std::string lemma;  // "adjacency", "hstar-degree", "min-barrier", "h-construction"
  std::string graph;  // graph6
  bool hypothesis_satisfied = false;
  bool conclusion_holds = true;
  std::string witness;
  std::map<std::string, std::int64_t> diagnostics;

  /// Counts as a violation only when the hypothesis held.
  bool violated() const { return hypothesis_satisfied && !conclusion_holds; }
};

/// Whether a checker establishes its Delta-critical hypothesis itself or
/// trusts the caller (the scan has already decided criticality).
enum class Hypothesis { kVerify, kAssume };

/// Vizing's adjacency bound: for every edge xy of a Delta-critical graph,
/// x has at least Delta - d(y) + 1 Delta-neighbours other than y. Also
/// records whether min degree >= 2.
AuditRecord check_val(const Graph& g, Hypothesis mode = Hypothesis::kVerify);

/// On H* for an independent T of a Delta-critical graph:
/// d(y) >= d(x) + 1 - delta0 + sigma_x on every edge xy, and a T-saturating
/// matching whenever delta0 <= 1. Throws std::invalid_argument if T is not
/// independent.
AuditRecord check_tnodelta(const Graph& g, VertexSet t, Hypothesis mode = Hypothesis::kVerify);

/// For a graph without a 2-factor, the minimum barrier (smallest |S u T|,
/// then smallest h): T independent; no T-edges into even components; at
/// most one edge from each T-vertex into each odd component; for v in T
/// with |C_v| >= 2 and D in C_1v, every w in D has e(w, V(D) + v) >= 2 and
/// |V(D)| >= 2; and |T| > |S| + sum_k k |C_{2k+1}|.
AuditRecord check_min_barrier(const Graph& g);

/// For a graph without a 2-factor, H* and H built from the minimum barrier:
/// d_{H*}(y) = d(y); X' n X = S'; d_H(x) = d_{H*}(x) on S';
/// d_H(y) = d_{H*}(y) - |C_1y|; split degrees 3,2,...,2;
/// |X| = |S| + sum_k k |C_{2k+1}|; and C_12 is empty or has >= 2 members.
/// The T-partition sizes and m-counts are recorded as diagnostics.
AuditRecord check_H_construction(const Graph& g);

}  // namespace factorlab

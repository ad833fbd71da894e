#pragma once

#include <optional>
#include <string>

#include <nlohmann/json.hpp>

#include "factorlab/barrier.hpp"
#include "factorlab/edge_coloring.hpp"
#include "factorlab/lemma_audit.hpp"
#include "factorlab/scan.hpp"
#include "factorlab/two_factor.hpp"

namespace factorlab {

inline constexpr const char* kSchema = "factorlab/1";

using Json = nlohmann::ordered_json;

// Certificates are standalone documents: {"schema", "kind", "graph", ...}.
Json certificate(const Graph& g, const TwoFactor& factor);
Json certificate(const Graph& g, const Barrier& barrier);
Json certificate(const Graph& g, const EdgeColoring& coloring);

Json to_json(const Barrier& barrier);
Json to_json(const TwoFactor& factor);
Json to_json(const EdgeColoring& coloring);
Json to_json(const AuditRecord& record);
Json to_json(const GraphRecord& record);
Json to_json(const Counterexample& counterexample);
/// Summary document: counts and counterexamples, no per-graph records.
Json summary_json(const ScanReport& report);

VertexSet vertex_set_from_json(const Json& j);
TwoFactor two_factor_from_json(const Json& j);
Barrier barrier_from_json(const Json& j);
EdgeColoring coloring_from_json(const Json& j);
AuditRecord audit_from_json(const Json& j);
GraphRecord graph_record_from_json(const Json& j);

/// Result of re-validating a certificate against a graph from scratch.
struct Verification {
  bool valid = false;
  std::string reason;
};

/// Checks a certificate document against g without trusting any number in
/// it: the barrier deficiency is recomputed, 2-factors and colourings are
/// checked edge by edge. Malformed documents are invalid, never thrown.
Verification verify_certificate(const Graph& g, const Json& document);

/// Graphviz rendering. With a barrier, S is red, T is blue and the vertices
/// of each odd component share a fill colour.
std::string to_dot(const Graph& g, const std::optional<Barrier>& barrier = std::nullopt);

}  // namespace factorlab

#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "factorlab/lemma_audit.hpp"

namespace factorlab {

/// Everything computed for one Delta-critical graph in the scan.
struct GraphRecord {
  std::string graph6;
  int order = 0;
  int max_degree = 0;
  int chromatic_index = 0;
  bool critical = false;
  int independence_number = 0;
  bool has_two_factor = false;
  std::vector<AuditRecord> audits;

  bool operator==(const GraphRecord&) const = default;
};

struct Counterexample {
  /// "no-2-factor" or "alpha-above-half" (with ":open" appended when 2 Delta < n),
  /// or "lemma:<id>"
  std::string kind;
  std::string graph6;
  std::string detail;

  bool operator==(const Counterexample&) const = default;
};

struct ScanCounts {
  std::int64_t enumerated = 0;            // all graphs up to isomorphism
  std::int64_t connected = 0;
  std::int64_t delta_critical = 0;
  std::int64_t delta_critical_large = 0;  // with 2 * Delta >= n
};

struct ScanReport {
  int n_min = 1;
  int n_max = 0;
  bool delta_ge_half_only = false;
  ScanCounts counts;
  std::vector<GraphRecord> records;
  std::vector<Counterexample> counterexamples;

  bool clean() const { return counterexamples.empty(); }
};

struct ScanOptions {
  int n_max = 0;
  bool delta_ge_half_only = false;
  /// Also check the H* degree inequality for every maximal independent set.
  bool audit_independent_sets = true;
  int threads = 0;  // 0 means thread_count()
  /// JSON-lines file of finished records; existing lines are reused by
  /// graph6 key and new ones are appended as they complete.
  std::optional<std::filesystem::path> progress_file;
};

/// Analyzes one graph, which the caller has established to be Delta-critical.
GraphRecord analyze_critical(const Graph& g, bool audit_independent_sets = true);

/// Counterexamples implied by a finished record.
std::vector<Counterexample> counterexamples_of(const GraphRecord& record);

/// Exhaustive scan of Delta-critical graphs of order 1..n_max. Throws
/// CapabilityError for n_max > 8. Records come out in (order, canonical code)
/// order regardless of thread count.
ScanReport scan_conjectures(const ScanOptions& options);
ScanReport scan_conjectures(int n_max, bool delta_ge_half_only);

}  // namespace factorlab

#include "factorlab/scan.hpp"

#include <fstream>
#include <mutex>
#include <stdexcept>
#include <unordered_map>

#include "factorlab/canonical.hpp"
#include "factorlab/edge_coloring.hpp"
#include "factorlab/enumeration.hpp"
#include "factorlab/errors.hpp"
#include "factorlab/graph6.hpp"
#include "factorlab/independence.hpp"
#include "factorlab/parallel.hpp"
#include "factorlab/serialize.hpp"
#include "factorlab/two_factor.hpp"

namespace factorlab {
namespace {

// One record covering every maximal independent set; the witness is the
// first failing set, if any.
AuditRecord audit_all_independent_sets(const Graph& g) {
  AuditRecord combined{"hstar-degree", to_graph6(g), true, true, "", {}};
  std::int64_t sets = 0;
  std::int64_t matched = 0;
  for (VertexSet t : maximal_independent_sets(g)) {
    AuditRecord one = check_tnodelta(g, t, Hypothesis::kAssume);
    ++sets;
    if (one.diagnostics.count("matching") != 0) ++matched;
    if (one.violated() && combined.conclusion_holds) {
      combined.conclusion_holds = false;
      combined.witness = "T=" + t.to_string() + ": " + one.witness;
    }
  }
  combined.diagnostics["sets"] = sets;
  combined.diagnostics["saturation_checked"] = matched;
  if (combined.conclusion_holds) combined.witness = "all " + std::to_string(sets) + " maximal independent sets";
  return combined;
}

std::unordered_map<std::string, GraphRecord> load_progress(const std::filesystem::path& path) {
  std::unordered_map<std::string, GraphRecord> out;
  std::ifstream in(path);
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    try {
      GraphRecord r = graph_record_from_json(Json::parse(line));
      out.emplace(r.graph6, std::move(r));
    } catch (const std::exception&) {
      // A torn final line from an interrupted run is recomputed.
    }
  }
  return out;
}

}  // namespace

GraphRecord analyze_critical(const Graph& g, bool audit_independent_sets) {
  GraphRecord r;
  r.graph6 = to_graph6(g);
  r.order = g.order();
  r.max_degree = max_degree(g);
  r.chromatic_index = chromatic_index(g).value;
  r.critical = true;
  r.independence_number = independence_number(g).size;
  r.has_two_factor = find_2_factor(g).has_value();
  r.audits.push_back(check_val(g, Hypothesis::kAssume));
  if (audit_independent_sets) r.audits.push_back(audit_all_independent_sets(g));
  if (!r.has_two_factor) {
    r.audits.push_back(check_min_barrier(g));
    r.audits.push_back(check_H_construction(g));
  }
  return r;
}

std::vector<Counterexample> counterexamples_of(const GraphRecord& r) {
  std::vector<Counterexample> out;
  const bool large = 2 * r.max_degree >= r.order;
  if (!r.has_two_factor) {
    out.push_back({large ? "no-2-factor" : "no-2-factor:open", r.graph6,
                   "no 2-factor with Delta=" + std::to_string(r.max_degree) + ", n=" + std::to_string(r.order)});
  }
  if (2 * r.independence_number > r.order) {
    out.push_back({large ? "alpha-above-half" : "alpha-above-half:open", r.graph6,
                   "alpha=" + std::to_string(r.independence_number) + " > n/2, n=" + std::to_string(r.order)});
  }
  for (const AuditRecord& a : r.audits) {
    if (a.violated()) out.push_back({"lemma:" + a.lemma, r.graph6, a.witness});
  }
  return out;
}

ScanReport scan_conjectures(const ScanOptions& options) {
  if (options.n_max < 0) throw std::invalid_argument("n_max must be non-negative");
  if (options.n_max > kMaxCriticalOrder) {
    throw CapabilityError("scan accepts n_max <= " + std::to_string(kMaxCriticalOrder));
  }
  const int threads = options.threads > 0 ? options.threads : thread_count();
  ScanReport report;
  report.n_max = options.n_max;
  report.delta_ge_half_only = options.delta_ge_half_only;

  std::unordered_map<std::string, GraphRecord> done;
  std::ofstream progress;
  std::mutex progress_mutex;
  if (options.progress_file) {
    done = load_progress(*options.progress_file);
    progress.open(*options.progress_file, std::ios::app);
    if (!progress) throw std::runtime_error("cannot open progress file " + options.progress_file->string());
  }

  for (int n = 1; n <= options.n_max; ++n) {
    std::vector<Graph> connected;
    for (std::uint64_t code : graph_codes(n)) {
      ++report.counts.enumerated;
      Graph g = unpack_upper_triangle(n, code);
      if (is_connected(g)) connected.push_back(std::move(g));
    }
    report.counts.connected += static_cast<std::int64_t>(connected.size());

    std::vector<char> critical(connected.size(), 0);
    parallel_for(
        connected.size(), [&](std::size_t i) { critical[i] = is_delta_critical(connected[i]) ? 1 : 0; }, threads);

    std::vector<const Graph*> selected;
    for (std::size_t i = 0; i < connected.size(); ++i) {
      if (!critical[i]) continue;
      const bool large = 2 * max_degree(connected[i]) >= n;
      ++report.counts.delta_critical;
      if (large) ++report.counts.delta_critical_large;
      if (large || !options.delta_ge_half_only) selected.push_back(&connected[i]);
    }

    std::vector<GraphRecord> records(selected.size());
    parallel_for(
        selected.size(),
        [&](std::size_t i) {
          const std::string key = to_graph6(*selected[i]);
          if (const auto it = done.find(key); it != done.end()) {
            records[i] = it->second;
            return;
          }
          records[i] = analyze_critical(*selected[i], options.audit_independent_sets);
          if (progress.is_open()) {
            const std::string line = to_json(records[i]).dump();
            const std::lock_guard lock(progress_mutex);
            progress << line << '\n';
            progress.flush();
          }
        },
        threads);

    for (GraphRecord& r : records) {
      for (Counterexample& c : counterexamples_of(r)) report.counterexamples.push_back(std::move(c));
      report.records.push_back(std::move(r));
    }
  }
  return report;
}

ScanReport scan_conjectures(int n_max, bool delta_ge_half_only) {
  ScanOptions options;
  options.n_max = n_max;
  options.delta_ge_half_only = delta_ge_half_only;
  return scan_conjectures(options);
}

}  // namespace factorlab

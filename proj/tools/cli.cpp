#include "cli.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "factorlab/barrier.hpp"
#include "factorlab/edge_coloring.hpp"
#include "factorlab/errors.hpp"
#include "factorlab/graph6.hpp"
#include "factorlab/independence.hpp"
#include "factorlab/lemma_audit.hpp"
#include "factorlab/scan.hpp"
#include "factorlab/serialize.hpp"
#include "factorlab/two_factor.hpp"

namespace factorlab::cli {
namespace {

struct Context {
  std::ostream& out;
  std::ostream& err;
  std::istream& in;
  bool json = false;
};

std::string trim(std::string s) {
  const auto not_space = [](unsigned char c) { return !std::isspace(c); };
  s.erase(s.begin(), std::find_if(s.begin(), s.end(), not_space));
  s.erase(std::find_if(s.rbegin(), s.rend(), not_space).base(), s.end());
  return s;
}

Graph read_graph(Context& ctx, const std::string& arg) {
  if (arg != "-") return parse_graph6(trim(arg));
  std::string line;
  std::getline(ctx.in, line);
  return parse_graph6(trim(line));
}

std::string edges_text(const std::vector<Edge>& edges) {
  std::string s;
  for (const Edge& e : edges) {
    if (!s.empty()) s += ' ';
    s += std::to_string(e.u) + "-" + std::to_string(e.v);
  }
  return s;
}

Json census_json(const Graph& g, const Barrier& b) {
  const ComponentClassification census(g, b.s, b.t);
  Json items = Json::array();
  for (const ComponentInfo& c : census.components()) {
    items.push_back({{"vertices", c.vertices.to_vector()},
                     {"edges_to_t", c.edges_to_t},
                     {"odd", c.odd()}});
  }
  return items;
}

Json terms_json(const DeficiencyTerms& t) {
  return {{"twice_s", t.twice_s},
          {"degree_sum", t.degree_sum},
          {"twice_t", t.twice_t},
          {"h", t.h},
          {"deficiency", t.value()}};
}

int cmd_two_factor(Context& ctx, const Graph& g) {
  if (const auto factor = find_2_factor(g)) {
    if (ctx.json) {
      ctx.out << certificate(g, *factor).dump() << '\n';
    } else {
      ctx.out << "2-factor (" << factor->edges.size() << " edges): " << edges_text(factor->edges) << '\n';
    }
    return kOk;
  }
  const std::optional<Barrier> barrier = find_barrier(g);
  if (!barrier) {
    ctx.err << "no 2-factor and no barrier found\n";
    ctx.out << Json{{"schema", kSchema}, {"kind", "inconsistency"}, {"graph", to_graph6(g)}}.dump() << '\n';
    return kViolation;
  }
  if (ctx.json) {
    ctx.out << certificate(g, *barrier).dump() << '\n';
  } else {
    ctx.out << "no 2-factor; barrier S=" << barrier->s.to_string() << " T=" << barrier->t.to_string()
            << " deficiency " << barrier->deficiency << " h " << barrier->h << '\n';
  }
  return kOk;
}

int cmd_barrier(Context& ctx, const Graph& g, bool minimum) {
  const std::optional<Barrier> barrier = minimum ? minimum_barrier(g) : find_barrier(g);
  if (!barrier) {
    if (ctx.json) {
      ctx.out << Json{{"schema", kSchema}, {"kind", "barrier"}, {"graph", to_graph6(g)}, {"barrier", nullptr}}.dump()
              << '\n';
    } else {
      ctx.out << "no barrier (the graph has a 2-factor)\n";
    }
    return kOk;
  }
  const DeficiencyTerms terms = deficiency_terms(g, barrier->s, barrier->t);
  if (ctx.json) {
    Json j = certificate(g, *barrier);
    j["terms"] = terms_json(terms);
    j["components"] = census_json(g, *barrier);
    ctx.out << j.dump() << '\n';
    return kOk;
  }
  ctx.out << (minimum ? "minimum barrier" : "barrier") << " S=" << barrier->s.to_string()
          << " T=" << barrier->t.to_string() << '\n';
  ctx.out << "deficiency = 2|S| + sum d_{G-S}(T) - 2|T| - h = " << terms.twice_s << " + " << terms.degree_sum
          << " - " << terms.twice_t << " - " << terms.h << " = " << terms.value() << '\n';
  const ComponentClassification census(g, barrier->s, barrier->t);
  for (const ComponentInfo& c : census.components()) {
    ctx.out << "  component " << c.vertices.to_string() << ": " << c.edges_to_t << " edges to T ("
            << (c.odd() ? "odd" : "even") << ")\n";
  }
  return kOk;
}

int cmd_chi(Context& ctx, const Graph& g) {
  const ChromaticIndex chi = chromatic_index(g);
  const int delta = max_degree(g);
  const bool critical = is_critical(g);
  const bool delta_critical = critical && chi.value == delta + 1;
  const char* cls = chi.value == delta ? "1" : "2";
  if (ctx.json) {
    Json j;
    j["schema"] = kSchema;
    j["kind"] = "chromatic-index";
    j["graph"] = to_graph6(g);
    j["delta"] = delta;
    j["chi"] = chi.value;
    j["class"] = chi.value == delta ? 1 : 2;
    j["critical"] = critical;
    j["delta_critical"] = delta_critical;
    j["coloring"] = certificate(g, chi.certificate);
    ctx.out << j.dump() << '\n';
  } else {
    ctx.out << "Delta " << delta << "\nchi' " << chi.value << "\nclass " << cls << "\ncritical "
            << (critical ? "yes" : "no") << "\nDelta-critical " << (delta_critical ? "yes" : "no") << '\n';
  }
  return kOk;
}

int cmd_audit(Context& ctx, const Graph& g) {
  std::vector<AuditRecord> records;
  if (is_delta_critical(g)) {
    records.push_back(check_val(g, Hypothesis::kAssume));
    for (VertexSet t : maximal_independent_sets(g)) records.push_back(check_tnodelta(g, t, Hypothesis::kAssume));
  }
  if (!find_2_factor(g)) {
    records.push_back(check_min_barrier(g));
    records.push_back(check_H_construction(g));
  }
  bool violated = false;
  for (const AuditRecord& r : records) {
    violated = violated || r.violated();
    if (ctx.json) {
      ctx.out << to_json(r).dump() << '\n';
    } else {
      ctx.out << r.lemma << ": " << (r.violated() ? "VIOLATED" : "holds") << "  " << r.witness << '\n';
    }
  }
  if (records.empty() && !ctx.json) ctx.out << "no checker applies (not Delta-critical, has a 2-factor)\n";
  return violated ? kViolation : kOk;
}

int cmd_scan(Context& ctx, int max_n, bool delta_ge_half, const std::string& out_file,
             const std::string& progress_file) {
  ScanOptions options;
  options.n_max = max_n;
  options.delta_ge_half_only = delta_ge_half;
  if (!progress_file.empty()) options.progress_file = progress_file;
  const ScanReport report = scan_conjectures(options);
  const Json summary = summary_json(report);
  if (!out_file.empty()) {
    std::ofstream file(out_file);
    if (!file) throw std::runtime_error("cannot write " + out_file);
    for (const GraphRecord& r : report.records) file << to_json(r).dump() << '\n';
    file << summary.dump() << '\n';
  }
  if (ctx.json) {
    ctx.out << summary.dump() << '\n';
  } else {
    ctx.out << "orders 1.." << report.n_max << (delta_ge_half ? " (Delta >= n/2 only)" : "") << '\n'
            << "graphs " << report.counts.enumerated << ", connected " << report.counts.connected
            << ", Delta-critical " << report.counts.delta_critical << " (" << report.counts.delta_critical_large
            << " with Delta >= n/2)\n"
            << "records " << report.records.size() << ", counterexamples " << report.counterexamples.size()
            << '\n';
    for (const Counterexample& c : report.counterexamples) {
      ctx.out << "  " << c.kind << " " << c.graph6 << ": " << c.detail << '\n';
    }
  }
  return report.clean() ? kOk : kViolation;
}

int cmd_dot(Context& ctx, const Graph& g) {
  std::optional<Barrier> overlay;
  if (!find_2_factor(g)) overlay = find_barrier(g);
  ctx.out << to_dot(g, overlay);
  return kOk;
}

int cmd_verify(Context& ctx, const std::string& cert_path, const Graph& g) {
  Json document;
  if (cert_path == "-") {
    document = Json::parse(ctx.in, nullptr, false);
  } else {
    std::ifstream file(cert_path);
    if (!file) throw CLI::ValidationError("cannot read certificate " + cert_path);
    document = Json::parse(file, nullptr, false);
  }
  const Verification v =
      document.is_discarded() ? Verification{false, "certificate is not valid JSON"} : verify_certificate(g, document);
  if (ctx.json) {
    ctx.out << Json{{"schema", kSchema}, {"kind", "verification"}, {"valid", v.valid}, {"reason", v.reason}}.dump()
            << '\n';
  } else {
    ctx.out << (v.valid ? "valid: " : "INVALID: ") << v.reason << '\n';
  }
  return v.valid ? kOk : kViolation;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, std::istream& in) {
  Context ctx{out, err, in};
  CLI::App app{"Exact 2-factor, barrier and edge-colouring tools for small graphs", "factorlab"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_flag("--json", ctx.json, "Machine-readable JSON on stdout");

  std::string g6;
  std::string cert;
  bool minimum = false;
  int max_n = 0;
  bool delta_ge_half = false;
  std::string out_file;
  std::string progress_file;

  auto* two_factor = app.add_subcommand("two-factor", "Print a 2-factor or a barrier certificate");
  two_factor->add_option("graph", g6, "graph6 string, or - for stdin")->required();
  auto* barrier = app.add_subcommand("barrier", "Print a barrier with its deficiency terms and components");
  barrier->add_flag("--minimum", minimum, "Smallest |S u T|, then smallest h");
  barrier->add_option("graph", g6, "graph6 string, or - for stdin")->required();
  auto* chi = app.add_subcommand("chi", "Print Delta, chi', class and criticality");
  chi->add_option("graph", g6, "graph6 string, or - for stdin")->required();
  auto* audit = app.add_subcommand("audit", "Run every lemma checker whose hypothesis holds");
  audit->add_option("graph", g6, "graph6 string, or - for stdin")->required();
  auto* scan = app.add_subcommand("scan", "Exhaustive scan of Delta-critical graphs");
  scan->add_option("--max-n", max_n, "Largest order (at most 8)")->required();
  scan->add_flag("--delta-ge-half", delta_ge_half, "Only graphs with Delta >= n/2");
  scan->add_option("--out", out_file, "Write per-graph JSON lines and the summary here");
  scan->add_option("--progress", progress_file, "Resumable progress file (JSON lines)");
  auto* dot = app.add_subcommand("dot", "Graphviz output with a barrier overlay");
  dot->add_option("graph", g6, "graph6 string, or - for stdin")->required();
  auto* verify = app.add_subcommand("verify", "Re-check a certificate against a graph");
  verify->add_option("certificate", cert, "Certificate JSON file, or - for stdin")->required();
  verify->add_option("graph", g6, "graph6 string")->required();

  std::vector<const char*> argv{"factorlab"};
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (scan->parsed()) return cmd_scan(ctx, max_n, delta_ge_half, out_file, progress_file);
    if (verify->parsed()) {
      if (cert == "-" && g6 == "-") throw CLI::ValidationError("only one of certificate and graph may be stdin");
      return cmd_verify(ctx, cert, read_graph(ctx, g6));
    }
    const Graph g = read_graph(ctx, g6);
    if (two_factor->parsed()) return cmd_two_factor(ctx, g);
    if (barrier->parsed()) return cmd_barrier(ctx, g, minimum);
    if (chi->parsed()) return cmd_chi(ctx, g);
    if (audit->parsed()) return cmd_audit(ctx, g);
    if (dot->parsed()) return cmd_dot(ctx, g);
  } catch (const ParseError& e) {
    err << "graph6 parse error at byte " << e.offset() << ": " << e.what() << '\n';
    return kUsage;
  } catch (const CLI::Error& e) {
    err << e.what() << '\n';
    return kUsage;
  } catch (const CapabilityError& e) {
    err << "capability limit: " << e.what() << '\n';
    return kCapability;
  } catch (const std::invalid_argument& e) {
    err << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace factorlab::cli

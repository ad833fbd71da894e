#include "factorlab/serialize.hpp"

#include <algorithm>
#include <array>
#include <sstream>
#include <stdexcept>

#include "factorlab/graph6.hpp"

namespace factorlab {
namespace {

Json vertex_list(VertexSet set) { return Json(set.to_vector()); }

Json edge_list(const std::vector<Edge>& edges) {
  Json out = Json::array();
  for (const Edge& e : edges) out.push_back({e.u, e.v});
  return out;
}

std::string edge_key(Edge e) { return std::to_string(e.u) + "-" + std::to_string(e.v); }

Edge edge_from_key(const std::string& key) {
  const std::size_t dash = key.find('-');
  if (dash == std::string::npos) throw std::invalid_argument("edge key without '-': " + key);
  std::size_t used_u = 0;
  std::size_t used_v = 0;
  const int u = std::stoi(key.substr(0, dash), &used_u);
  const int v = std::stoi(key.substr(dash + 1), &used_v);
  if (used_u != dash || used_v != key.size() - dash - 1 || u == v || u < 0 || v < 0) {
    throw std::invalid_argument("bad edge key: " + key);
  }
  return {std::min(u, v), std::max(u, v)};
}

Json document(const Graph& g, const char* kind) {
  Json j;
  j["schema"] = kSchema;
  j["kind"] = kind;
  j["graph"] = to_graph6(g);
  return j;
}

}  // namespace

Json certificate(const Graph& g, const TwoFactor& factor) {
  Json j = document(g, "two-factor");
  j.update(to_json(factor));
  return j;
}

Json certificate(const Graph& g, const Barrier& barrier) {
  Json j = document(g, "barrier");
  j.update(to_json(barrier));
  return j;
}

Json certificate(const Graph& g, const EdgeColoring& coloring) {
  Json j = document(g, "edge-coloring");
  j.update(to_json(coloring));
  return j;
}

Json to_json(const Barrier& barrier) {
  return {{"s", vertex_list(barrier.s)},
          {"t", vertex_list(barrier.t)},
          {"deficiency", barrier.deficiency},
          {"h", barrier.h}};
}

Json to_json(const TwoFactor& factor) { return {{"edges", edge_list(factor.edges)}}; }

Json to_json(const EdgeColoring& coloring) {
  Json colors = Json::object();
  for (std::size_t i = 0; i < coloring.edges.size(); ++i) colors[edge_key(coloring.edges[i])] = coloring.colors[i];
  return {{"colors", colors}, {"count", coloring.color_count}};
}

Json to_json(const AuditRecord& record) {
  Json j;
  j["schema"] = kSchema;
  j["kind"] = "audit";
  j["lemma"] = record.lemma;
  j["graph"] = record.graph;
  j["hypothesis_satisfied"] = record.hypothesis_satisfied;
  j["conclusion_holds"] = record.conclusion_holds;
  j["witness"] = record.witness;
  j["diagnostics"] = Json::object();
  for (const auto& [key, value] : record.diagnostics) j["diagnostics"][key] = value;
  return j;
}

Json to_json(const GraphRecord& record) {
  Json audits = Json::array();
  for (const AuditRecord& a : record.audits) {
    Json item = to_json(a);
    item.erase("schema");
    item.erase("kind");
    item.erase("graph");
    audits.push_back(std::move(item));
  }
  Json j;
  j["schema"] = kSchema;
  j["kind"] = "graph-record";
  j["graph"] = record.graph6;
  j["n"] = record.order;
  j["delta"] = record.max_degree;
  j["chi"] = record.chromatic_index;
  j["critical"] = record.critical;
  j["alpha"] = record.independence_number;
  j["has_two_factor"] = record.has_two_factor;
  j["audits"] = std::move(audits);
  return j;
}

Json to_json(const Counterexample& counterexample) {
  return {{"kind", counterexample.kind}, {"graph", counterexample.graph6}, {"detail", counterexample.detail}};
}

Json summary_json(const ScanReport& report) {
  Json counterexamples = Json::array();
  for (const Counterexample& c : report.counterexamples) counterexamples.push_back(to_json(c));
  Json j;
  j["schema"] = kSchema;
  j["kind"] = "scan-summary";
  j["n_min"] = report.n_min;
  j["n_max"] = report.n_max;
  j["delta_ge_half"] = report.delta_ge_half_only;
  j["counts"] = {{"enumerated", report.counts.enumerated},
                 {"connected", report.counts.connected},
                 {"delta_critical", report.counts.delta_critical},
                 {"delta_critical_large", report.counts.delta_critical_large}};
  j["records"] = report.records.size();
  j["counterexamples"] = std::move(counterexamples);
  return j;
}

VertexSet vertex_set_from_json(const Json& j) {
  VertexSet out;
  for (const Json& v : j) {
    const int x = v.get<int>();
    if (x < 0 || x >= kMaxVertices) throw std::invalid_argument("vertex out of range");
    out.insert(x);
  }
  return out;
}

TwoFactor two_factor_from_json(const Json& j) {
  TwoFactor f;
  for (const Json& e : j.at("edges")) {
    const auto pair = e.get<std::array<int, 2>>();
    f.edges.push_back({std::min(pair[0], pair[1]), std::max(pair[0], pair[1])});
  }
  return f;
}

Barrier barrier_from_json(const Json& j) {
  return {vertex_set_from_json(j.at("s")), vertex_set_from_json(j.at("t")), j.at("deficiency").get<int>(),
          j.at("h").get<int>()};
}

EdgeColoring coloring_from_json(const Json& j) {
  EdgeColoring c;
  std::vector<std::pair<Edge, int>> items;
  for (const auto& [key, value] : j.at("colors").items()) items.emplace_back(edge_from_key(key), value.get<int>());
  std::sort(items.begin(), items.end());
  for (const auto& [e, color] : items) {
    c.edges.push_back(e);
    c.colors.push_back(color);
  }
  c.color_count = j.at("count").get<int>();
  return c;
}

AuditRecord audit_from_json(const Json& j) {
  AuditRecord r;
  r.lemma = j.at("lemma").get<std::string>();
  r.graph = j.value("graph", std::string{});
  r.hypothesis_satisfied = j.at("hypothesis_satisfied").get<bool>();
  r.conclusion_holds = j.at("conclusion_holds").get<bool>();
  r.witness = j.at("witness").get<std::string>();
  for (const auto& [key, value] : j.at("diagnostics").items()) r.diagnostics[key] = value.get<std::int64_t>();
  return r;
}

GraphRecord graph_record_from_json(const Json& j) {
  GraphRecord r;
  r.graph6 = j.at("graph").get<std::string>();
  r.order = j.at("n").get<int>();
  r.max_degree = j.at("delta").get<int>();
  r.chromatic_index = j.at("chi").get<int>();
  r.critical = j.at("critical").get<bool>();
  r.independence_number = j.at("alpha").get<int>();
  r.has_two_factor = j.at("has_two_factor").get<bool>();
  for (const Json& a : j.at("audits")) {
    AuditRecord audit = audit_from_json(a);
    audit.graph = r.graph6;
    r.audits.push_back(std::move(audit));
  }
  return r;
}

Verification verify_certificate(const Graph& g, const Json& document) {
  try {
    if (document.value("schema", std::string{}) != kSchema) return {false, "missing or unknown schema"};
    if (document.contains("graph")) {
      const Graph stated = parse_graph6(document.at("graph").get<std::string>());
      if (!(stated == g)) return {false, "certificate was issued for a different graph"};
    }
    const std::string kind = document.at("kind").get<std::string>();
    if (kind == "two-factor") {
      if (!is_two_factor(g, two_factor_from_json(document))) return {false, "edge set is not a 2-factor"};
      return {true, "2-factor"};
    }
    if (kind == "barrier") {
      const Barrier claimed = barrier_from_json(document);
      if (claimed.s.intersects(claimed.t)) return {false, "S and T overlap"};
      if (!(claimed.s | claimed.t).is_subset_of(g.vertices())) return {false, "S or T leaves the graph"};
      const DeficiencyTerms terms = deficiency_terms(g, claimed.s, claimed.t);
      if (terms.value() != claimed.deficiency) {
        return {false, "stated deficiency " + std::to_string(claimed.deficiency) + " recomputes to " +
                           std::to_string(terms.value())};
      }
      if (terms.h != claimed.h) return {false, "stated h does not match"};
      if (terms.value() > -2) return {false, "deficiency above -2"};
      return {true, "barrier"};
    }
    if (kind == "edge-coloring") {
      const EdgeColoring c = coloring_from_json(document);
      if (!is_proper_coloring(g, c)) return {false, "not a proper edge colouring"};
      return {true, "proper edge colouring with " + std::to_string(c.color_count) + " colours"};
    }
    return {false, "unknown certificate kind '" + kind + "'"};
  } catch (const std::exception& e) {
    return {false, std::string("malformed certificate: ") + e.what()};
  }
}

std::string to_dot(const Graph& g, const std::optional<Barrier>& barrier) {
  static constexpr std::array<const char*, 8> kPalette{"palegreen", "khaki",     "plum",      "lightsalmon",
                                                       "lightcyan", "wheat",     "thistle",   "lightpink"};
  std::ostringstream out;
  out << "graph G {\n  node [shape=circle];\n";
  std::vector<std::string> attrs(static_cast<std::size_t>(g.order()));
  if (barrier) {
    for (int v : barrier->s) attrs[static_cast<std::size_t>(v)] = "color=red, style=filled, fillcolor=red";
    for (int v : barrier->t) attrs[static_cast<std::size_t>(v)] = "color=blue, style=filled, fillcolor=lightblue";
    const ComponentClassification census(g, barrier->s, barrier->t);
    int shade = 0;
    for (int c : census.odd()) {
      const char* fill = kPalette[static_cast<std::size_t>(shade++) % kPalette.size()];
      for (int v : census[c].vertices) {
        attrs[static_cast<std::size_t>(v)] = std::string("style=filled, fillcolor=") + fill;
      }
    }
  }
  for (int v = 0; v < g.order(); ++v) {
    out << "  " << v;
    if (!attrs[static_cast<std::size_t>(v)].empty()) out << " [" << attrs[static_cast<std::size_t>(v)] << "]";
    out << ";\n";
  }
  for (const Edge& e : g.edges()) out << "  " << e.u << " -- " << e.v << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace factorlab

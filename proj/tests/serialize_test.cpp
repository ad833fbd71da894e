#include <gtest/gtest.h>

#include "factorlab/barrier.hpp"
#include "factorlab/edge_coloring.hpp"
#include "factorlab/graph6.hpp"
#include "factorlab/lemma_audit.hpp"
#include "factorlab/serialize.hpp"
#include "factorlab/two_factor.hpp"

namespace factorlab {
namespace {

const Graph kC5 = graphs::cycle(5);
const Graph kStar = graphs::star(3);

TEST(Json, TwoFactorCertificateShape) {
  const Json j = certificate(kC5, *find_2_factor(kC5));
  EXPECT_EQ(j.at("schema"), kSchema);
  EXPECT_EQ(j.at("kind"), "two-factor");
  EXPECT_EQ(j.at("graph"), to_graph6(kC5));
  EXPECT_EQ(j.at("edges").size(), 5U);
  EXPECT_TRUE(is_two_factor(kC5, two_factor_from_json(j)));
}

TEST(Json, BarrierRoundTrip) {
  const Barrier b = *find_barrier(kStar);
  const Json j = certificate(kStar, b);
  EXPECT_EQ(j.at("kind"), "barrier");
  EXPECT_EQ(j.at("deficiency"), -4);
  EXPECT_EQ(barrier_from_json(j), b);
  EXPECT_EQ(barrier_from_json(Json::parse(j.dump())), b);
}

TEST(Json, ColoringRoundTrip) {
  const Graph k4 = graphs::complete(4);
  const EdgeColoring c = vizing_color(k4);
  const Json j = certificate(k4, c);
  EXPECT_EQ(j.at("kind"), "edge-coloring");
  EXPECT_EQ(j.at("colors").size(), 6U);
  const EdgeColoring back = coloring_from_json(j);
  EXPECT_EQ(back.color_count, c.color_count);
  for (Edge e : k4.edges()) EXPECT_EQ(back.color_of(e), c.color_of(e));
}

TEST(Json, AuditAndGraphRecordsRoundTrip) {
  const AuditRecord a = check_min_barrier(graphs::path(3));
  const AuditRecord back = audit_from_json(to_json(a));
  EXPECT_EQ(back.lemma, a.lemma);
  EXPECT_EQ(back.graph, a.graph);
  EXPECT_EQ(back.witness, a.witness);
  EXPECT_EQ(back.diagnostics, a.diagnostics);
  EXPECT_EQ(back.violated(), a.violated());

  GraphRecord r{"Bw", 3, 2, 3, true, 1, false, {a}};
  const Json j = to_json(r);
  EXPECT_EQ(j.at("kind"), "graph-record");
  EXPECT_FALSE(j.at("audits")[0].contains("schema"));
  const GraphRecord rb = graph_record_from_json(j);
  EXPECT_EQ(rb.graph6, "Bw");
  EXPECT_EQ(rb.chromatic_index, 3);
  ASSERT_EQ(rb.audits.size(), 1U);
  EXPECT_EQ(rb.audits[0].graph, "Bw");
}

TEST(Verify, AcceptsGenuineCertificates) {
  EXPECT_TRUE(verify_certificate(kC5, certificate(kC5, *find_2_factor(kC5))).valid);
  EXPECT_TRUE(verify_certificate(kStar, certificate(kStar, *find_barrier(kStar))).valid);
  const Graph p = graphs::petersen();
  EXPECT_TRUE(verify_certificate(p, certificate(p, vizing_color(p))).valid);
}

TEST(Verify, RejectsTamperedCertificates) {
  Json barrier = certificate(kStar, *find_barrier(kStar));
  barrier["deficiency"] = -6;
  const Verification v = verify_certificate(kStar, barrier);
  EXPECT_FALSE(v.valid);
  EXPECT_NE(v.reason.find("recomputes"), std::string::npos);

  Json overlap = certificate(kStar, *find_barrier(kStar));
  overlap["s"] = Json::array({1});
  EXPECT_FALSE(verify_certificate(kStar, overlap).valid);

  // a non-barrier with its true deficiency stated
  Json weak = certificate(kC5, Barrier{{}, VertexSet{0}, 0, 0});
  weak["deficiency"] = deficiency_terms(kC5, {}, VertexSet{0}).value();
  weak["h"] = deficiency_terms(kC5, {}, VertexSet{0}).h;
  EXPECT_FALSE(verify_certificate(kC5, weak).valid);

  Json factor = certificate(kC5, *find_2_factor(kC5));
  factor["edges"].erase(0);
  EXPECT_FALSE(verify_certificate(kC5, factor).valid);

  Json coloring = certificate(kC5, vizing_color(kC5));
  coloring["colors"]["0-1"] = coloring["colors"]["1-2"];
  EXPECT_FALSE(verify_certificate(kC5, coloring).valid);
}

TEST(Verify, RejectsMismatchedOrMalformedDocuments) {
  EXPECT_FALSE(verify_certificate(graphs::cycle(6), certificate(kC5, *find_2_factor(kC5))).valid);
  EXPECT_FALSE(verify_certificate(kC5, Json::object()).valid);
  EXPECT_FALSE(verify_certificate(kC5, Json{{"schema", kSchema}, {"kind", "two-factor"}}).valid);
  EXPECT_FALSE(verify_certificate(kC5, Json{{"schema", kSchema}, {"kind", "nonsense"}}).valid);
  EXPECT_FALSE(verify_certificate(kC5, Json::parse("[1,2]")).valid);
}

TEST(Dot, Overlay) {
  const std::string plain = to_dot(kC5);
  EXPECT_EQ(plain.rfind("graph G {", 0), 0U);
  EXPECT_NE(plain.find("0 -- 1"), std::string::npos);
  EXPECT_EQ(plain.find("red"), std::string::npos);

  const Graph g(5, {{0, 1}, {1, 2}, {1, 3}, {3, 4}});
  const DeficiencyTerms terms = deficiency_terms(g, VertexSet{1}, VertexSet{0, 2});
  const std::string dot = to_dot(g, Barrier{VertexSet{1}, VertexSet{0, 2}, terms.value(), terms.h});
  EXPECT_NE(dot.find("1 [color=red"), std::string::npos);
  EXPECT_NE(dot.find("0 [color=blue"), std::string::npos);

  const std::string star = to_dot(kStar, *find_barrier(kStar));
  EXPECT_NE(star.find("0 [style=filled, fillcolor=palegreen]"), std::string::npos);
}

}  // namespace
}  // namespace factorlab

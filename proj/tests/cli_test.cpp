#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "cli.hpp"
#include "factorlab/graph.hpp"
#include "factorlab/graph6.hpp"

namespace factorlab {
namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result invoke(const std::vector<std::string>& args, const std::string& input = "") {
  std::ostringstream out;
  std::ostringstream err;
  std::istringstream in(input);
  const int code = cli::run(args, out, err, in);
  return {code, out.str(), err.str()};
}

TEST(Cli, TwoFactorText) {
  const Result r = invoke({"two-factor", "Dhc"});
  EXPECT_EQ(r.code, cli::kOk);
  EXPECT_NE(r.out.find("2-factor (5 edges)"), std::string::npos);
  const Result star = invoke({"two-factor", "CF"});
  EXPECT_EQ(star.code, cli::kOk);
  EXPECT_NE(star.out.find("deficiency -4"), std::string::npos);
}

TEST(Cli, JsonFlagOnEitherSide) {
  for (const auto& args : {std::vector<std::string>{"--json", "two-factor", "CF"},
                           std::vector<std::string>{"two-factor", "CF", "--json"}}) {
    const Result r = invoke(args);
    ASSERT_EQ(r.code, cli::kOk);
    const nlohmann::json j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j.at("kind"), "barrier");
    EXPECT_EQ(j.at("deficiency"), -4);
  }
}

TEST(Cli, ReadsTheGraphFromStdin) {
  const Result r = invoke({"--json", "two-factor", "-"}, "Dhc\n");
  EXPECT_EQ(r.code, cli::kOk);
  EXPECT_EQ(nlohmann::json::parse(r.out).at("kind"), "two-factor");
}

TEST(Cli, Barrier) {
  const Result r = invoke({"barrier", "--minimum", "Bg"});
  EXPECT_EQ(r.code, cli::kOk);
  EXPECT_NE(r.out.find("S={} T={0}"), std::string::npos);
  EXPECT_NE(r.out.find("= -2"), std::string::npos);
  const Result none = invoke({"--json", "barrier", "Dhc"});
  EXPECT_EQ(none.code, cli::kOk);
  EXPECT_NO_THROW((void)nlohmann::json::parse(none.out));
}

TEST(Cli, Chi) {
  const Result r = invoke({"chi", "Bw"});
  EXPECT_EQ(r.code, cli::kOk);
  EXPECT_NE(r.out.find("chi' 3"), std::string::npos);
  EXPECT_NE(r.out.find("Delta-critical yes"), std::string::npos);
  const nlohmann::json j = nlohmann::json::parse(invoke({"--json", "chi", "Bw"}).out);
  EXPECT_EQ(j.at("class"), 2);
  EXPECT_EQ(j.at("coloring").at("kind"), "edge-coloring");
}

TEST(Cli, AuditEmitsJsonLines) {
  const Result r = invoke({"--json", "audit", "Dhc"});
  EXPECT_EQ(r.code, cli::kOk);
  std::istringstream lines(r.out);
  int count = 0;
  for (std::string line; std::getline(lines, line);) {
    const nlohmann::json j = nlohmann::json::parse(line);
    EXPECT_EQ(j.at("kind"), "audit");
    EXPECT_TRUE(j.at("conclusion_holds").get<bool>());
    ++count;
  }
  EXPECT_GE(count, 2);
}

TEST(Cli, ScanSmall) {
  const Result r = invoke({"--json", "scan", "--max-n", "6", "--delta-ge-half"});
  EXPECT_EQ(r.code, cli::kOk);
  const nlohmann::json j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j.at("kind"), "scan-summary");
  EXPECT_TRUE(j.at("counterexamples").empty());

  const std::filesystem::path path = std::filesystem::temp_directory_path() / "factorlab_cli_scan.jsonl";
  EXPECT_EQ(invoke({"scan", "--max-n", "5", "--out", path.string()}).code, cli::kOk);
  std::ifstream in(path);
  std::vector<std::string> lines;
  for (std::string line; std::getline(in, line);) lines.push_back(line);
  ASSERT_EQ(lines.size(), 5U);  // four critical graphs and the summary
  EXPECT_EQ(nlohmann::json::parse(lines.back()).at("kind"), "scan-summary");
  std::filesystem::remove(path);
}

TEST(Cli, Dot) {
  const Result r = invoke({"dot", "CF"});
  EXPECT_EQ(r.code, cli::kOk);
  EXPECT_EQ(r.out.rfind("graph G {", 0), 0U);
  EXPECT_NE(r.out.find("lightblue"), std::string::npos);
}

TEST(Cli, VerifyRoundTrip) {
  const std::filesystem::path path = std::filesystem::temp_directory_path() / "factorlab_cli_cert.json";
  const std::string cert = invoke({"--json", "two-factor", "CF"}).out;
  {
    std::ofstream(path) << cert;
  }
  EXPECT_EQ(invoke({"verify", path.string(), "CF"}).code, cli::kOk);
  EXPECT_EQ(invoke({"verify", "-", "CF"}, cert).code, cli::kOk);

  nlohmann::json tampered = nlohmann::json::parse(cert);
  tampered["deficiency"] = -10;
  EXPECT_EQ(invoke({"verify", "-", "CF"}, tampered.dump()).code, cli::kViolation);
  EXPECT_EQ(invoke({"verify", path.string(), "Dhc"}).code, cli::kViolation);
  std::filesystem::remove(path);
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(invoke({}).code, cli::kUsage);
  EXPECT_EQ(invoke({"frobnicate"}).code, cli::kUsage);
  EXPECT_EQ(invoke({"two-factor"}).code, cli::kUsage);
  const Result bad = invoke({"two-factor", "zz~"});
  EXPECT_EQ(bad.code, cli::kUsage);
  EXPECT_NE(bad.err.find("byte"), std::string::npos);
  EXPECT_EQ(invoke({"scan", "--max-n", "9"}).code, cli::kCapability);
  EXPECT_EQ(invoke({"scan", "--max-n", "-1"}).code, cli::kUsage);
  EXPECT_EQ(invoke({"barrier", to_graph6(graphs::empty(21))}).code, cli::kCapability);
  EXPECT_EQ(invoke({"verify", "/nonexistent/cert.json", "Dhc"}).code, cli::kUsage);
}

}  // namespace
}  // namespace factorlab

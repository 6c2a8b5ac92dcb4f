#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "solvgraph/cli.hpp"
#include "solvgraph/group_spec.hpp"
#include "solvgraph/report.hpp"

using namespace solvgraph;
using nlohmann::json;

namespace {

struct CliResult
{
  int code;
  std::string out;
  std::string err;
};

CliResult run(std::vector<std::string> args)
{
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

AnalyzeOptions with_workers(unsigned workers)
{
  AnalyzeOptions options;
  options.workers = workers;
  return options;
}

std::filesystem::path temp_path(const std::string &name)
{
  return std::filesystem::temp_directory_path() / ("solvgraph_test_" + name);
}

std::string read_file(const std::filesystem::path &path)
{
  std::ifstream in(path);
  return {std::istreambuf_iterator<char>(in), {}};
}

} // namespace

TEST(Report, JsonRoundTrip)
{
  for (const char *spec : {"A5", "S4", "A5xC2"}) {
    const AnalysisReport report = analyze_group(build_group(spec), with_workers(1));
    const json j = report;
    const AnalysisReport back = j.get<AnalysisReport>();
    EXPECT_EQ(back, report) << spec;
    EXPECT_EQ(json(back).dump(), j.dump());
  }
}

TEST(Report, RejectsOtherSchema)
{
  json j = analyze_group(build_group("A5"), with_workers(1));
  j["schema"] = 2;
  EXPECT_THROW(j.get<AnalysisReport>(), std::invalid_argument);
}

TEST(Report, DeterministicAcrossWorkerCounts)
{
  const PermGroup g = build_group("PSL(3,2)");
  AnalysisReport one = analyze_group(g, with_workers(1));
  AnalysisReport three = analyze_group(g, with_workers(3));
  one.runtime = {};
  three.runtime = {};
  EXPECT_EQ(json(one).dump(), json(three).dump());
}

TEST(Report, LedgerIsComplete)
{
  const AnalysisReport a5 = analyze_group(build_group("A5"), with_workers(1));
  EXPECT_TRUE(missing_anchors(a5.ledger).empty());
  EXPECT_FALSE(a5.any_failure());
  for (const auto &entry : a5.ledger)
    EXPECT_FALSE(entry.category.empty());

  const AnalysisReport s4 = analyze_group(build_group("S4"), with_workers(1));
  EXPECT_TRUE(missing_anchors(s4.ledger).empty());
  EXPECT_FALSE(s4.any_failure());
  EXPECT_FALSE(s4.vertices.has_value());

  std::vector<TheoremCheck> partial(a5.ledger.begin(), a5.ledger.end() - 1);
  EXPECT_EQ(missing_anchors(partial).size(), 1u);
}

TEST(Report, Values)
{
  const AnalysisReport r = analyze_group(build_group("A5xC2"), with_workers(1));
  EXPECT_EQ(r.radical_order, 2u);
  EXPECT_EQ(r.vertices, 118u);
  EXPECT_EQ(r.edges, 2343u);
  EXPECT_EQ(r.degrees.ps, "11/30");
  ASSERT_TRUE(r.invariants.has_value());
  EXPECT_EQ(r.invariants->girth, 3u);
  EXPECT_EQ(r.invariants->diameter, 2u);
}

TEST(Report, StatusNames)
{
  for (auto s : {CheckStatus::pass, CheckStatus::fail, CheckStatus::informational, CheckStatus::not_applicable,
                 CheckStatus::skipped})
    EXPECT_EQ(check_status_from_string(to_string(s)), s);
  EXPECT_THROW(check_status_from_string("maybe"), std::invalid_argument);
}

TEST(Cli, AnalyzeA5Json)
{
  const CliResult r = run({"analyze", "A5", "--json", "-", "--workers", "1"});
  EXPECT_EQ(r.code, exit_ok);
  const json j = json::parse(r.out);
  EXPECT_EQ(j["schema"], 1);
  EXPECT_EQ(j["vertices"], 59);
  EXPECT_EQ(j["edges"], 571);
}

TEST(Cli, AnalyzeSolvableInput)
{
  const CliResult r = run({"analyze", "S4", "--json", "-"});
  EXPECT_EQ(r.code, exit_solvable_input);
  const json j = json::parse(r.out);
  EXPECT_EQ(j["degrees"]["ps"], "1/1");
  EXPECT_EQ(j["order"], 24);
  EXPECT_TRUE(j["vertices"].is_null());
}

TEST(Cli, AnalyzeText)
{
  const CliResult r = run({"analyze", "A5xC2"});
  EXPECT_EQ(r.code, exit_ok);
  EXPECT_NE(r.out.find("|Sol(G)| = 2"), std::string::npos);
}

TEST(Cli, AnalyzeErrors)
{
  EXPECT_EQ(run({"analyze", "A5x"}).code, exit_usage);
  EXPECT_EQ(run({"analyze", "S6", "--cap", "100"}).code, exit_cap_exceeded);
  EXPECT_EQ(run({"analyze", "A5", "--cap", "20000"}).code, exit_usage);
  EXPECT_EQ(run({"analyze"}).code, exit_usage);
  EXPECT_EQ(run({}).code, exit_usage);
  EXPECT_EQ(run({"frobnicate"}).code, exit_usage);
  EXPECT_EQ(run({"--help"}).code, exit_ok);
}

TEST(Cli, AnalyzeWritesFiles)
{
  const auto json_path = temp_path("a5.json");
  const auto dot_path = temp_path("a5_analyze.dot");
  const CliResult r = run({"analyze", "A5", "--json", json_path.string(), "--dot", dot_path.string()});
  EXPECT_EQ(r.code, exit_ok);
  EXPECT_EQ(json::parse(read_file(json_path))["edges"], 571);
  EXPECT_NE(read_file(dot_path).find("graph solvable_graph"), std::string::npos);
  std::filesystem::remove(json_path);
  std::filesystem::remove(dot_path);
}

TEST(Cli, Bounds)
{
  const CliResult a = run({"bounds", "59", "571"});
  EXPECT_EQ(a.code, exit_ok);
  EXPECT_NE(a.out.find("genus >= 67"), std::string::npos);

  const CliResult k5 = run({"bounds", "5", "10"});
  EXPECT_EQ(k5.code, exit_ok);
  EXPECT_NE(k5.out.find("genus >= 1"), std::string::npos);

  EXPECT_EQ(run({"bounds", "5", "11"}).code, exit_usage);
  EXPECT_EQ(run({"bounds", "0", "0"}).code, exit_usage);
  EXPECT_EQ(run({"bounds", "5"}).code, exit_usage);
}

TEST(Cli, Export)
{
  const auto dot_path = temp_path("g.dot");
  EXPECT_EQ(run({"export", "A5", "--dot", dot_path.string()}).code, exit_ok);
  const std::string dot = read_file(dot_path);
  std::size_t nodes = 0;
  for (std::size_t pos = dot.find("[label="); pos != std::string::npos; pos = dot.find("[label=", pos + 1))
    ++nodes;
  EXPECT_EQ(nodes, 59u);
  std::filesystem::remove(dot_path);

  const auto adj_path = temp_path("g.json");
  EXPECT_EQ(run({"export", "SL(2,5)", "--adj", adj_path.string()}).code, exit_ok);
  const json adj = json::parse(read_file(adj_path));
  EXPECT_EQ(adj["vertices"].size(), 118u);
  EXPECT_EQ(adj["edges"].size(), 2343u);
  EXPECT_EQ(adj["radical"].size(), 2u);
  std::filesystem::remove(adj_path);

  EXPECT_EQ(run({"export", "A5"}).code, exit_usage);
  EXPECT_EQ(run({"export", "S4", "--dot", dot_path.string()}).code, exit_solvable_input);
}

TEST(Cli, VerifySelectedGroups)
{
  const CliResult r = run({"verify", "--groups", "A5,SL(2,5)", "--workers", "1"});
  EXPECT_EQ(r.code, exit_ok);
  EXPECT_EQ(r.out.find("[FAIL]"), std::string::npos);
  EXPECT_NE(r.out.find("SL(2,5)"), std::string::npos);
}

TEST(Cli, VerifyDiameterCheck)
{
  const CliResult r = run({"verify", "--groups", "A6", "--check", "diameter"});
  EXPECT_EQ(r.code, exit_ok);
  EXPECT_NE(r.out.find("diameter > 2"), std::string::npos);
  EXPECT_EQ(r.out.find("girth"), std::string::npos);
}

TEST(Cli, VerifyErrors)
{
  const CliResult s4 = run({"verify", "--groups", "S4"});
  EXPECT_EQ(s4.code, exit_solvable_input);
  EXPECT_NE(s4.err.find("suite requires non-solvable groups"), std::string::npos);
  EXPECT_EQ(run({"verify", "--check", "nonsense"}).code, exit_usage);
  EXPECT_EQ(run({"verify", "--suite", "other"}).code, exit_usage);
}

TEST(Cli, VerifyTimeoutSkips)
{
  const CliResult r = run({"verify", "--groups", "S6", "--timeout", "0.001", "--workers", "1"});
  EXPECT_EQ(r.code, exit_ok);
  EXPECT_NE(r.out.find("[SKIP]"), std::string::npos);
  EXPECT_EQ(r.out.find("[FAIL]"), std::string::npos);
}

#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.h"
#include "tiling_disc/errors.h"
#include "tiling_disc/graph_io.h"

namespace tiling_disc::cli {
namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "tiling-disc");
  std::vector<char*> argv;
  for (auto& a : args) argv.push_back(a.data());
  std::ostringstream out, err;
  const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string temp_path(const std::string& name) {
  return (std::filesystem::temp_directory_path() / ("tiling_disc_cli_" + name)).string();
}

TEST(CliTest, VerifyExtremalMod03) {
  const Result r = run({"verify-extremal", "--family", "mod03", "--r", "3", "--n", "12"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_NE(r.out.find("checked=1296 min=0 max=0"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("PASS"), std::string::npos);
}

TEST(CliTest, VerifyExtremalMatchingAndSampled) {
  const Result m = run({"verify-extremal", "--family", "matching", "--n", "8"});
  EXPECT_EQ(m.code, kExitOk);
  EXPECT_NE(m.out.find("mode=exhaustive checked=60 min=0 max=0"), std::string::npos) << m.out;
  const Result s = run({"verify-extremal", "--family", "mod1", "--m", "1", "--n", "60",
                        "--samples", "50", "--format", "jsonl"});
  EXPECT_EQ(s.code, kExitOk);
  EXPECT_NE(s.out.find("\"mode\":\"sampled\""), std::string::npos) << s.out;
  EXPECT_NE(s.out.find("\"checked\":51"), std::string::npos) << s.out;
  EXPECT_NE(s.out.find("\"t2\":5,\"t3\":5"), std::string::npos) << s.out;
}

TEST(CliTest, ParameterErrorsExitWithUsageCode) {
  EXPECT_EQ(run({"verify-extremal", "--family", "mod1", "--m", "1", "--n", "61"}).code,
            kExitUsage);
  EXPECT_EQ(run({"verify-extremal", "--family", "mod7", "--n", "12"}).code, kExitUsage);
  EXPECT_EQ(run({}).code, kExitUsage);
  EXPECT_EQ(run({"solve", "/nonexistent/graph.txt"}).code, kExitUsage);
  EXPECT_EQ(run({"verify-templates", "--r-min", "2"}).code, kExitUsage);
  EXPECT_EQ(run({"solve", "--format", "xml"}).code, kExitUsage);
}

TEST(CliTest, GenThenSolveRoundTrip) {
  const std::string path = temp_path("mod03.txt");
  const Result gen = run({"gen", "--family", "mod03", "--r", "3", "--n", "12", "--out", path});
  ASSERT_EQ(gen.code, kExitOk) << gen.err;
  const LabeledGraph lg = read_graph_file(path);
  EXPECT_EQ(lg.graph.order(), 12);
  EXPECT_EQ(lg.r, 3);
  EXPECT_EQ(lg.meta, "family=mod03 r=3 n=12 parts=3,3,3,3 X=0 Y=0");

  const Result solve = run({"solve", path, "--mode", "exhaustive"});
  EXPECT_EQ(solve.code, kExitOk) << solve.err;
  EXPECT_NE(solve.out.find("extremes min=0 max=0 count=1296"), std::string::npos) << solve.out;
  const Result bnb = run({"solve", path, "--objective", "maxabs"});
  EXPECT_NE(bnb.out.find("extremes min=0 max=0 count=NA"), std::string::npos) << bnb.out;
  EXPECT_NE(bnb.out.find("maxabs=0"), std::string::npos);
  int tiles = 0;
  std::istringstream lines(bnb.out);
  for (std::string line; std::getline(lines, line);) tiles += line.rfind("t ", 0) == 0;
  EXPECT_EQ(tiles, 4);
  std::remove(path.c_str());
}

TEST(CliTest, SolveFallsBackToSamplingPastBudget) {
  const std::string path = temp_path("mod03_4.txt");
  ASSERT_EQ(run({"gen", "--family", "mod03", "--r", "4", "--n", "20", "--out", path}).code,
            kExitOk);
  const Result r = run({"solve", path, "--mode", "exhaustive", "--budget", "100",
                        "--samples", "20"});
  EXPECT_EQ(r.code, kExitOk) << r.err;
  EXPECT_NE(r.out.find("mode=sampled"), std::string::npos);
  EXPECT_NE(r.out.find("count=NA"), std::string::npos);
  std::remove(path.c_str());
}

TEST(CliTest, SolveInfeasible) {
  const std::string path = temp_path("star.txt");
  std::ofstream(path) << "g 6 5 3\ne 0 1 +1\ne 0 2 +1\ne 0 3 +1\ne 0 4 +1\ne 0 5 +1\n";
  const Result r = run({"solve", path});
  EXPECT_EQ(r.code, kExitVerificationFailed);
  EXPECT_NE(r.err.find("infeasible"), std::string::npos);
  std::remove(path.c_str());
}

TEST(CliTest, MalformedGraphIsUsageError) {
  const std::string path = temp_path("bad.txt");
  std::ofstream(path) << "g 3 1 3\ne 0 1 2\n";
  const Result r = run({"solve", path});
  EXPECT_EQ(r.code, kExitUsage);
  EXPECT_NE(r.err.find("line 2"), std::string::npos) << r.err;
  std::remove(path.c_str());
}

TEST(CliTest, VerifyTemplatesCsv) {
  const Result r = run({"verify-templates", "--r-min", "3", "--r-max", "4", "--scenarios",
                        "obsB,case2a"});
  EXPECT_EQ(r.code, kExitOk);
  std::istringstream lines(r.out);
  std::string header;
  std::getline(lines, header);
  EXPECT_EQ(header, "scenario,r,i,s,s_prime,disc_K1,disc_K2,diff,expected,match");
  EXPECT_NE(r.out.find("obsB,4,0,40,16,0,-12,-12,-12,true"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("case2a,3,NA,24,9,0,-6,-6,-6,true"), std::string::npos) << r.out;
  EXPECT_EQ(r.out.find("false"), std::string::npos);
}

TEST(CliTest, ThresholdScanExamples) {
  const Result turan = run({"threshold-scan", "--r", "3", "--n", "12", "--fractions", "1.0",
                            "--samples", "3", "--host", "turan", "--labeling", "turan"});
  EXPECT_EQ(turan.code, kExitOk) << turan.err;
  EXPECT_EQ(turan.out.rfind("# EXPLORATORY", 0), 0u);
  EXPECT_NE(turan.out.find("1.0000,9,3,3,1.0000,0,exact"), std::string::npos) << turan.out;

  ThresholdParams plus;
  plus.r = 3;
  plus.n = 12;
  plus.fractions = {0.75, 1.0};
  plus.samples = 10;
  plus.labeling = ScanLabeling::kPlus;
  for (const ThresholdRow& row : run_threshold_scan(plus, RunConfig{})) {
    ASSERT_GT(row.feasible, 0);
    EXPECT_EQ(row.max_abs_disc, 12);
  }

  ThresholdParams half = plus;
  half.fractions = {0.5};
  half.samples = 100;
  half.labeling = ScanLabeling::kRandom;
  const auto rows = run_threshold_scan(half, RunConfig{});
  ASSERT_EQ(rows.size(), 1u);
  EXPECT_GE(rows[0].feasible_rate(), 0.0);
  EXPECT_LE(rows[0].feasible_rate(), 1.0);
}

TEST(CliTest, ReportsAreDeterministic) {
  const std::vector<std::string> args = {"threshold-scan", "--r", "3", "--n", "9",
                                         "--fractions", "0.5,0.8", "--samples", "20",
                                         "--seed", "17"};
  EXPECT_EQ(run(args).out, run(args).out);
  const std::vector<std::string> ver = {"verify-extremal", "--family", "mod2", "--m", "1",
                                        "--n", "84", "--samples", "5", "--format", "csv"};
  EXPECT_EQ(run(ver).out, run(ver).out);
}

TEST(CliTest, FormatParsing) {
  EXPECT_EQ(format_from_string("csv"), OutputFormat::kCsv);
  EXPECT_THROW(format_from_string("yaml"), ParameterError);
}

}  // namespace
}  // namespace tiling_disc::cli

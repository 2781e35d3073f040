// Copyright 2026 The ColdBench Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "cli/cli.hpp"
#include "coldbench/config/run_config.hpp"
#include "support/test_util.hpp"

namespace coldbench {
namespace {

struct CliResult {
  int code;
  std::string out;
  std::string err;
};

CliResult Cli(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::Main(args, out, err);
  return {code, out.str(), err.str()};
}

std::string Slurp(const std::filesystem::path& path) {
  std::ifstream in(path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

TEST(Cli, UsageErrorsExitWithTwo) {
  EXPECT_EQ(Cli({}).code, cli::kExitUsage);
  EXPECT_EQ(Cli({"teleport"}).code, cli::kExitUsage);
  EXPECT_EQ(Cli({"cost"}).code, cli::kExitUsage);
  EXPECT_EQ(Cli({"cost", "--tier", "glacier"}).code, cli::kExitUsage);
  EXPECT_EQ(Cli({"cost", "--tier", "hot", "--capacity", "much"}).code, cli::kExitUsage);
  EXPECT_EQ(Cli({"generate"}).code, cli::kExitUsage);
  EXPECT_EQ(Cli({"generate", "--files", "0"}).code, cli::kExitUsage);
  EXPECT_EQ(Cli({"run", "--backend", "floppy"}).code, cli::kExitUsage);
  EXPECT_EQ(Cli({"run", "--config", "/nonexistent.yaml"}).code, cli::kExitUsage);
}

TEST(Cli, HelpExitsWithZero) {
  const CliResult r = Cli({"--help"});
  EXPECT_EQ(r.code, cli::kExitOk);
  EXPECT_NE(r.out.find("generate"), std::string::npos);
}

TEST(Cli, CostPrintsComponentsAndEcho) {
  const CliResult r = Cli({"cost", "--tier", "cool"});
  ASSERT_EQ(r.code, cli::kExitOk) << r.err;
  EXPECT_EQ(r.out.rfind("# config {", 0), 0u);
  EXPECT_NE(r.out.find("$420,269.26"), std::string::npos);
  EXPECT_NE(r.out.find("$430,759.21"), std::string::npos);
}

TEST(Cli, MigrationLines) {
  const CliResult r = Cli({"cost", "--tier", "archive", "--migrate"});
  ASSERT_EQ(r.code, cli::kExitOk) << r.err;
  EXPECT_NE(r.out.find("$21,181.24"), std::string::npos);
  EXPECT_NE(r.out.find("$73,610.04"), std::string::npos);
  EXPECT_NE(r.out.find("15.60 months"), std::string::npos);
}

TEST(Cli, MoveoutCurve) {
  const CliResult r = Cli({"cost", "--tier", "archive", "--moveout-curve"});
  ASSERT_EQ(r.code, cli::kExitOk) << r.err;
  EXPECT_NE(r.out.find("40.0000"), std::string::npos);
  EXPECT_NE(r.out.find("4.4444"), std::string::npos);
}

TEST(Cli, AdviseRanksArchiveFirstForOneRead) {
  const CliResult r = Cli({"advise"});
  ASSERT_EQ(r.code, cli::kExitOk) << r.err;
  const auto archive = r.out.find("archive");
  const auto cool = r.out.find("cool");
  const auto hot = r.out.find("hot");
  ASSERT_NE(archive, std::string::npos);
  EXPECT_LT(archive, cool);
  EXPECT_LT(cool, hot);
}

TEST(Cli, GenerateWritesManifest) {
  testing::TempDir dir;
  const auto out = (dir.path() / "m").string();
  const CliResult r = Cli({"generate", "--files", "300", "--seed", "3", "--out", out});
  ASSERT_EQ(r.code, cli::kExitOk) << r.err;
  EXPECT_TRUE(std::filesystem::exists(dir.path() / "m" / "manifest.csv"));
  EXPECT_TRUE(std::filesystem::exists(dir.path() / "m" / "manifest.json"));
  const CliResult again = Cli({"generate", "--files", "300", "--seed", "3", "--out", (dir.path() / "n").string()});
  EXPECT_EQ(Slurp(dir.path() / "m" / "manifest.csv"), Slurp(dir.path() / "n" / "manifest.csv"));
}

TEST(Cli, GeneratePayloadHonoursLimit) {
  testing::TempDir dir;
  const auto out = (dir.path() / "m").string();
  const auto config = (dir.path() / "small.yaml").string();
  std::ofstream(config) << "dataset:\n  distribution: {kind: fixed, size: 64KiB}\n";
  ASSERT_EQ(Cli({"generate", "--config", config, "--files", "20", "--out", out, "--payload"}).code, cli::kExitOk);
  std::size_t files = 0;
  for ([[maybe_unused]] const auto& e : std::filesystem::directory_iterator(dir.path() / "m" / "payload")) ++files;
  EXPECT_EQ(files, 20u);
  EXPECT_EQ(Cli({"generate", "--config", config, "--files", "20", "--out", out, "--payload", "--payload-limit", "1MiB"}).code,
            cli::kExitUsage);
}

TEST(Cli, RunIsReproducible) {
  testing::TempDir dir;
  const std::vector<std::string> common = {"run", "--files", "400", "--requests", "40", "--seed", "9",
                                           "--backend", "cache+tape"};
  auto a = common;
  a.insert(a.end(), {"--out", (dir.path() / "a").string()});
  auto b = common;
  b.insert(b.end(), {"--out", (dir.path() / "b").string()});
  const CliResult ra = Cli(a);
  ASSERT_EQ(ra.code, cli::kExitOk) << ra.err;
  ASSERT_EQ(Cli(b).code, cli::kExitOk);
  EXPECT_NE(ra.out.find("cache+tape: 40 requests (0 failed)"), std::string::npos) << ra.out;
  for (const char* file : {"report.json", "report.csv", "measurements.csv", "latency_cdf.csv"}) {
    EXPECT_EQ(Slurp(dir.path() / "a" / file), Slurp(dir.path() / "b" / file)) << file;
  }
}

TEST(Cli, RunReadsExistingManifest) {
  testing::TempDir dir;
  const auto manifest = (dir.path() / "m").string();
  ASSERT_EQ(Cli({"generate", "--files", "200", "--out", manifest}).code, cli::kExitOk);
  const CliResult r = Cli({"run", "--manifest", manifest, "--requests", "10", "--backend", "cloud:cool", "--format",
                           "json", "--out", (dir.path() / "o").string()});
  ASSERT_EQ(r.code, cli::kExitOk) << r.err;
  EXPECT_TRUE(std::filesystem::exists(dir.path() / "o" / "report.json"));
  EXPECT_FALSE(std::filesystem::exists(dir.path() / "o" / "report.csv"));
}

double TapeBandwidth(const std::string& workload_yaml) {
  RunConfig config = ParseRunConfig("seed: 5\ndataset:\n  files: 3000\n" + workload_yaml +
                                    "backend:\n  kind: tape\n  tape:\n    drives: 2\n");
  config.Finalize();
  return ExecuteRun(config, false).report.sustained_bandwidth_bytes_per_s;
}

TEST(Cli, SmallFilesReachLowerTapeBandwidthThanLargeFiles) {
  const double small = TapeBandwidth("workload:\n  preset: cp4-smallfile\n  requests: 150\n");
  const double large = TapeBandwidth("workload:\n  requests: 150\n  min_size: 256MiB\n");
  EXPECT_LT(small * 10, large);
}

}  // namespace
}  // namespace coldbench

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

#include <algorithm>
#include <fstream>
#include <sstream>

#include "coldbench/cost/cost_model.hpp"
#include "coldbench/cost/pricing.hpp"
#include "coldbench/report/report.hpp"
#include "support/test_util.hpp"

namespace coldbench {
namespace {

Measurement Get(std::uint64_t id, SimTime issue, SimTime done, std::uint64_t bytes, std::string priority = "normal") {
  Measurement m;
  m.request_id = id;
  m.priority = std::move(priority);
  m.issue_time = issue;
  m.completion_time = done;
  m.bytes = bytes;
  m.file_count = 1;
  return m;
}

// Smallest sample value v such that at least p% of the sample is <= v.
SimTime BruteForcePercentile(const std::vector<SimTime>& values, double p) {
  std::vector<SimTime> candidates = values;
  std::sort(candidates.begin(), candidates.end());
  for (SimTime v : candidates) {
    const auto at_or_below = std::count_if(values.begin(), values.end(), [v](SimTime x) { return x <= v; });
    if (100.0 * static_cast<double>(at_or_below) >= p * static_cast<double>(values.size()) - 1e-9) return v;
  }
  return candidates.back();
}

TEST(NearestRank, TwoSampleMedianIsLowerValue) {
  EXPECT_EQ(NearestRank({1'000'000, 3'000'000}, 50), 1'000'000);
  EXPECT_EQ(NearestRank({1'000'000, 3'000'000}, 51), 3'000'000);
  EXPECT_EQ(NearestRank({5}, 99), 5);
  EXPECT_EQ(NearestRank({1, 2, 3, 4, 5, 6, 7, 8, 9, 10}, 95), 10);
  EXPECT_EQ(NearestRank({1, 2, 3, 4, 5, 6, 7, 8, 9, 10}, 90), 9);
  EXPECT_THROW(NearestRank({}, 50), std::invalid_argument);
  EXPECT_THROW(NearestRank({1}, 0), std::invalid_argument);
  EXPECT_THROW(NearestRank({1}, 101), std::invalid_argument);
}

TEST(NearestRank, AgreesWithBruteForceDefinition) {
  RngStream rng(12, "test/percentile");
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + rng.UniformIndex(60);
    std::vector<SimTime> values;
    for (std::size_t i = 0; i < n; ++i) values.push_back(static_cast<SimTime>(rng.UniformIndex(50)));
    std::vector<SimTime> sorted = values;
    std::sort(sorted.begin(), sorted.end());
    for (double p : {1.0, 25.0, 50.0, 90.0, 95.0, 99.0, 100.0}) {
      ASSERT_EQ(NearestRank(sorted, p), BruteForcePercentile(values, p)) << "n=" << n << " p=" << p;
    }
  }
}

TEST(LatencyStats, SummaryOfKnownSample) {
  const LatencyStats s = ComputeLatencyStats({40, 10, 30, 20});
  EXPECT_EQ(s.count, 4u);
  EXPECT_DOUBLE_EQ(s.mean_us, 25.0);
  EXPECT_EQ(s.p50, 20);
  EXPECT_EQ(s.p99, 40);
  EXPECT_EQ(s.max, 40);
}

TEST(Summarize, BandwidthIsBytesOverReadSpan) {
  // 1 GB read between t = 0 and t = 4 s.
  const std::vector<Measurement> ms = {Get(0, 0, 2 * sim_time::kSecond, 500'000'000),
                                       Get(1, 1 * sim_time::kSecond, 4 * sim_time::kSecond, 500'000'000)};
  const BenchReport r = Summarize(ms, {});
  EXPECT_DOUBLE_EQ(r.sustained_bandwidth_bytes_per_s, 0.25e9);
  EXPECT_EQ(r.read_span, 4 * sim_time::kSecond);
  EXPECT_EQ(r.bytes_read, 1'000'000'000u);
}

TEST(Summarize, GroupsByOpAndPriority) {
  std::vector<Measurement> ms = {Get(0, 0, 10, 1, "low"), Get(1, 0, 30, 1, "urgent"), Get(2, 0, 20, 1, "low")};
  Measurement put = Get(3, 0, 5, 9);
  put.op = Op::kPut;
  ms.push_back(put);
  const BenchReport r = Summarize(ms, {});
  ASSERT_NE(r.FindLatency("all", "all"), nullptr);
  EXPECT_EQ(r.FindLatency("all", "all")->stats.count, 4u);
  EXPECT_EQ(r.FindLatency("get", "all")->stats.count, 3u);
  EXPECT_EQ(r.FindLatency("get", "low")->stats.max, 20);
  EXPECT_EQ(r.FindLatency("get", "urgent")->stats.p50, 30);
  EXPECT_EQ(r.FindLatency("put", "all")->stats.count, 1u);
  EXPECT_EQ(r.FindLatency("get", "normal"), nullptr);
  EXPECT_EQ(r.bytes_written, 9u);
}

TEST(Summarize, FailuresAreCountedButNotTimed) {
  std::vector<Measurement> ms = {Get(0, 0, 10, 1), Get(1, 0, 0, 0)};
  ms[1].ok = false;
  const BenchReport r = Summarize(ms, {});
  EXPECT_EQ(r.request_count, 2u);
  EXPECT_EQ(r.failed_count, 1u);
  EXPECT_EQ(r.FindLatency("all", "all")->stats.count, 1u);
}

TEST(Summarize, EmptyRunIsFlagged) {
  const BenchReport r = Summarize(std::vector<Measurement>{}, LedgerTotals{});
  EXPECT_TRUE(r.empty);
  EXPECT_EQ(r.request_count, 0u);
  EXPECT_TRUE(r.latency.empty());
  EXPECT_DOUBLE_EQ(r.sustained_bandwidth_bytes_per_s, 0.0);
}

TEST(Summarize, CacheHitRate) {
  BackendStats stats;
  stats.cache_hits = 3;
  stats.cache_misses = 1;
  const BenchReport r = Summarize({Get(0, 0, 1, 1)}, {}, stats);
  EXPECT_DOUBLE_EQ(r.cache.hit_rate, 0.75);
}

BenchReport SampleReport() {
  std::vector<Measurement> ms;
  for (std::uint64_t i = 0; i < 50; ++i) ms.push_back(Get(i, i * 100, i * 100 + 37 * (i % 7 + 1), 1000 + i));
  LedgerTotals ledger;
  ledger.storage = 12.345;
  ledger.requests = 0.5;
  ledger.get_requests = 50;
  BackendStats stats;
  stats.tape_mounts = 4;
  stats.max_mounted_tapes = 2;
  BenchReport r = Summarize(ms, ledger, stats, nlohmann::json{{"backend", "tape"}, {"seed", 5}}, 5);
  r.notes.push_back("example note");
  return r;
}

TEST(ReportJson, RoundTripsExactly) {
  const BenchReport r = SampleReport();
  const BenchReport back = ReportFromJson(ReportToJson(r));
  EXPECT_EQ(back, r);
  EXPECT_EQ(ReportToJson(r)["format"], std::string(kReportFormat));
}

TEST(ReportJson, SameInputsGiveIdenticalBytes) {
  EXPECT_EQ(ReportToJsonText(SampleReport()), ReportToJsonText(SampleReport()));
}

TEST(ReportCsv, OneRowPerScalar) {
  const BenchReport r = SampleReport();
  const std::string csv = ReportToCsv(r);
  const auto lines = std::count(csv.begin(), csv.end(), '\n');
  EXPECT_EQ(static_cast<std::size_t>(lines), ReportScalars(r).size() + 1);
  EXPECT_EQ(csv.rfind("key,value\n", 0), 0u);
}

TEST(CostBreakdown, CoolTierOneReadSplit) {
  const CostReport cost = TotalCost(Azure2019Catalog().Find("cool"), PibYearOneReadScenario());
  const auto rows = CostBreakdownRows(cost);
  ASSERT_EQ(rows.size(), 2u);
  EXPECT_EQ(rows[0].first, "storage");
  EXPECT_NEAR(rows[0].second, 97.5, 0.5);
  EXPECT_NEAR(rows[1].second, 2.5, 0.5);
}

TEST(Emit, WritesEachFormat) {
  testing::TempDir dir;
  const BenchReport r = SampleReport();
  std::vector<Measurement> ms = {Get(0, 0, 2 * sim_time::kSecond, 10)};
  EXPECT_EQ(Emit(r, ms, EmitFormat::kJson, dir.path()).size(), 1u);
  EXPECT_EQ(Emit(r, ms, EmitFormat::kCsv, dir.path()).size(), 1u);
  EXPECT_EQ(Emit(r, ms, EmitFormat::kPlotData, dir.path()).size(), 3u);
  EXPECT_TRUE(std::filesystem::exists(dir.path() / "report.json"));
  EXPECT_TRUE(std::filesystem::exists(dir.path() / "latency_cdf.csv"));
  std::ifstream in(dir.path() / "report.json");
  std::stringstream text;
  text << in.rdbuf();
  EXPECT_EQ(text.str(), ReportToJsonText(r));
  EXPECT_THROW(ParseEmitFormat("xml"), std::invalid_argument);
}

TEST(PlotData, LatencyCdfEndsAtOne) {
  const auto cdf = LatencyCdf({Get(0, 0, 3, 1), Get(1, 0, 1, 1), Get(2, 0, 2, 1)});
  ASSERT_EQ(cdf.size(), 3u);
  EXPECT_DOUBLE_EQ(cdf.back().second, 1.0);
  for (std::size_t i = 1; i < cdf.size(); ++i) EXPECT_LE(cdf[i - 1].first, cdf[i].first);
}

TEST(PlotData, BandwidthTimelineConservesBytes) {
  const std::vector<Measurement> ms = {Get(0, 0, 2 * sim_time::kSecond, 600), Get(1, 0, 5 * sim_time::kSecond, 400)};
  const auto timeline = BandwidthTimeline(ms, sim_time::kSecond);
  double bytes = 0;
  for (const auto& [t, rate] : timeline) bytes += rate;  // 1 s buckets: rate * 1 s
  EXPECT_NEAR(bytes, 1000.0, 1e-6);
}

}  // namespace
}  // namespace coldbench

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

#include "coldbench/backend/cache.hpp"
#include "coldbench/backend/hybrid.hpp"
#include "coldbench/config/run_config.hpp"
#include "support/test_util.hpp"

namespace coldbench {
namespace {

TEST(RunConfig, DefaultsFinalize) {
  RunConfig config;
  EXPECT_NO_THROW(config.Finalize());
  EXPECT_EQ(config.backend.Label(), "tape");
  EXPECT_EQ(config.dataset.spec.total_files, 10'000u);
  EXPECT_EQ(config.sessions.workload.arrival.kind, Arrival::Kind::kClosed);
}

TEST(RunConfig, ParsesAllSections) {
  RunConfig config = ParseRunConfig(R"(
seed: 42
dataset:
  files: 500
  static_fraction: 0.8
  missions: 4
  mission_skew: 1.5
workload:
  requests: 77
  read_fraction: 0.9
  batch_fraction: 0.25
  batch_min: 3
  batch_max: 6
  priorities: {low: 1, urgent: 3}
  arrival: open
  rate_per_s: 2.5
  max_size: 8MiB
sessions:
  count: 3
  warmup: 2
backend:
  kind: cache+tape
  tape:
    drives: 2
    exchange_s: 10
    scheduler: tape-batched
    placement: random
  cache:
    capacity: 2GiB
    policy: fifo
output:
  formats: [json]
  measurements: false
)");
  config.Finalize();
  EXPECT_EQ(config.seed, 42u);
  EXPECT_EQ(config.dataset.spec.seed, 42u);
  EXPECT_EQ(config.dataset.spec.total_files, 500u);
  EXPECT_EQ(config.dataset.spec.mission_count, 4u);
  const WorkloadSpec& w = config.sessions.workload;
  EXPECT_EQ(w.seed, 42u);
  EXPECT_EQ(w.request_count, 77u);
  EXPECT_EQ(w.batch_size, (BatchSize{3, 6}));
  ASSERT_EQ(w.priorities.size(), 2u);
  EXPECT_EQ(w.arrival.kind, Arrival::Kind::kOpen);
  EXPECT_DOUBLE_EQ(w.arrival.rate_per_s, 2.5);
  EXPECT_EQ(*w.target_size.max_bytes, 8 * kMiB);
  EXPECT_EQ(config.sessions.session_count, 3u);
  EXPECT_EQ(config.sessions.warmup_requests, 2u);
  EXPECT_EQ(config.backend.kind, BackendSection::Kind::kCacheTape);
  EXPECT_EQ(config.backend.tape.drive_count, 2u);
  EXPECT_EQ(config.backend.tape.robot_exchange, 10 * sim_time::kSecond);
  EXPECT_EQ(config.backend.tape.scheduler, TapeConfig::Scheduler::kTapeBatched);
  EXPECT_EQ(config.backend.cache.config.capacity_bytes, 2 * kGiB);
  EXPECT_FALSE(config.backend.cache.archive_ratio.has_value());
  EXPECT_EQ(config.backend.cache.config.policy, CacheConfig::Policy::kFifo);
  EXPECT_EQ(config.output.formats.size(), 1u);
  EXPECT_FALSE(config.output.measurements_csv);
}

TEST(RunConfig, UnknownKeysAreRejected) {
  EXPECT_THROW(ParseRunConfig("sede: 4\n"), ConfigError);
  EXPECT_THROW(ParseRunConfig("workload:\n  request: 4\n"), ConfigError);
  EXPECT_THROW(ParseRunConfig("backend:\n  tape:\n    drive: 4\n"), ConfigError);
}

// Range checks run in Finalize so that command-line overrides are validated too.
void ParseAndFinalize(std::string_view text) { ParseRunConfig(text).Finalize(); }

TEST(RunConfig, BadValuesAreConfigErrors) {
  EXPECT_THROW(ParseRunConfig("seed: banana\n"), ConfigError);
  EXPECT_THROW(ParseAndFinalize("workload:\n  read_fraction: 2\n"), ConfigError);
  EXPECT_THROW(ParseAndFinalize("dataset:\n  files: 0\n"), ConfigError);
  EXPECT_THROW(ParseRunConfig("backend:\n  kind: floppy\n"), ConfigError);
  EXPECT_THROW(ParseAndFinalize("backend:\n  kind: cloud:glacier\n"), ConfigError);
  EXPECT_THROW(ParseRunConfig("backend:\n  cache:\n    capacity: lots\n"), ConfigError);
  EXPECT_THROW(ParseRunConfig("workload:\n  preset: cp7\n"), ConfigError);
  EXPECT_THROW(ParseRunConfig("dataset: [1, 2\n"), ConfigError);
  EXPECT_THROW(LoadRunConfig("/nonexistent/run.yaml"), ConfigError);
}

TEST(RunConfig, ExplicitValuesOverridePreset) {
  const RunConfig config = ParseRunConfig("workload:\n  preset: cp1-skew\n  access_skew: 1.25\n");
  EXPECT_DOUBLE_EQ(config.sessions.workload.access_skew_s, 1.25);
  EXPECT_EQ(config.workload_preset, "cp1-skew");
  const RunConfig plain = ParseRunConfig("workload:\n  preset: cp1-skew\n");
  EXPECT_DOUBLE_EQ(plain.sessions.workload.access_skew_s, 2.0);
}

TEST(RunConfig, BackendLabels) {
  BackendSection b;
  ParseBackendLabel("cloud:cool", b);
  EXPECT_EQ(b.kind, BackendSection::Kind::kCloud);
  EXPECT_EQ(b.Label(), "cloud:cool");
  ParseBackendLabel("hybrid", b);
  EXPECT_EQ(b.Label(), "hybrid");
  EXPECT_THROW(ParseBackendLabel("cloud:", b), ConfigError);
}

TEST(RunConfig, HybridSection) {
  const RunConfig config = ParseRunConfig(
      "backend:\n  kind: hybrid\n  hybrid:\n    tiers: [archive, cool]\n    scrub_interval_days: 30\n"
      "    scrub_target: cloud\n    scrub_horizon_days: 365\n");
  EXPECT_EQ(config.backend.hybrid_tiers, (std::vector<std::string>{"archive", "cool"}));
  EXPECT_EQ(config.backend.scrub_interval, 30 * sim_time::kDay);
  EXPECT_EQ(config.backend.scrub_target, HybridConfig::ScrubTarget::kCloud);
}

TEST(RunConfig, CacheRatioResolvesAgainstStaticBytes) {
  RunConfig config = ParseRunConfig("dataset:\n  files: 300\nbackend:\n  kind: cache+tape\n  cache:\n    ratio: 17\n");
  config.Finalize();
  const DatasetManifest m = MaterializeDataset(config);
  Simulator sim;
  auto backend = MakeBackend(sim, config, m);
  auto* cache = dynamic_cast<CachedBackend*>(backend.get());
  ASSERT_NE(cache, nullptr);
  EXPECT_EQ(cache->cache().capacity_bytes(), m.StaticBytes() / 17);
}

TEST(RunConfig, CustomCatalogFile) {
  testing::TempDir dir;
  {
    std::ofstream out(dir.path() / "prices.yaml");
    out << "name: mine\ntiers:\n  - name: deep\n    storage_per_gb_month: 0.001\n    retrieval_per_gb: 0.1\n"
           "    get_per_10k: 1\n    latency: hours\n";
  }
  {
    std::ofstream out(dir.path() / "run.yaml");
    out << "backend:\n  kind: cloud:deep\n  catalog: prices.yaml\n";
  }
  const RunConfig config = LoadRunConfig(dir.path() / "run.yaml");
  EXPECT_EQ(config.backend.catalog.name, "mine");
  EXPECT_EQ(config.backend.cloud.tier, "deep");
}

TEST(RunConfig, EchoIsIndependentOfOutputDir) {
  RunConfig a = ParseRunConfig("output:\n  dir: one\n");
  RunConfig b = ParseRunConfig("output:\n  dir: two\n");
  EXPECT_EQ(a.ToJson(), b.ToJson());
  EXPECT_EQ(a.ToJson()["backend"]["kind"], "tape");
}

TEST(RunConfig, ShippedConfigsParse) {
  const std::filesystem::path dir = COLDBENCH_CONFIG_DIR;
  int parsed = 0;
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    if (entry.path().extension() != ".yaml" || entry.path().stem().string().starts_with("catalog")) continue;
    EXPECT_NO_THROW(LoadRunConfig(entry.path()).Finalize()) << entry.path();
    ++parsed;
  }
  EXPECT_GE(parsed, 5);
}

}  // namespace
}  // namespace coldbench

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

#pragma once

#include <cstdint>
#include <filesystem>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "coldbench/backend/cache.hpp"
#include "coldbench/backend/cloud.hpp"
#include "coldbench/backend/hybrid.hpp"
#include "coldbench/backend/tape.hpp"
#include "coldbench/cost/pricing.hpp"
#include "coldbench/data/dataset.hpp"
#include "coldbench/driver/driver.hpp"
#include "coldbench/report/report.hpp"

namespace coldbench {

// Configuration problems (bad keys, values, missing files). The CLI maps these to exit code 2.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// 10,000 dsda-main files over 16 missions with Zipf(1) mission sizes, all static.
DatasetSpec DefaultRunDataset();

struct DatasetSection {
  // When set, the manifest is read from this directory and `spec` is ignored.
  std::optional<std::filesystem::path> manifest_dir;
  // Name of the size distribution preset, or "custom" for an explicit distribution.
  std::string preset = "dsda-main";
  DatasetSpec spec = DefaultRunDataset();
};

struct CacheSection {
  CacheConfig config;
  // Cache sized as 1:N of the static set's bytes; overrides config.capacity_bytes when set.
  // Defaults to the D-SDA ratio of 1:30; an explicit capacity clears it.
  std::optional<double> archive_ratio = 30.0;
};

struct CloudSection {
  std::string tier = "hot";
  std::optional<CloudTierConfig::LatencyModel> latency_model;
  double lognormal_sigma = 0.25;
  double bandwidth_mb_s = 0.0;
  bool charge_egress = false;
  double egress_per_gb = 0.05;

  CloudTierConfig Resolve(const PricingCatalog& catalog, std::string_view tier_name) const;
};

struct BackendSection {
  enum class Kind { kTape, kCacheTape, kCloud, kHybrid };

  Kind kind = Kind::kTape;
  TapeConfig tape;
  CacheSection cache;
  CloudSection cloud;
  // Only for hybrid: cloud tiers holding a copy (the first one serves fallbacks).
  std::vector<std::string> hybrid_tiers = {"archive"};
  bool hybrid_cache = true;
  SimTime scrub_interval = 0;
  HybridConfig::ScrubTarget scrub_target = HybridConfig::ScrubTarget::kLocal;
  SimTime scrub_horizon = 0;
  PricingCatalog catalog = Azure2019Catalog();
  std::optional<std::filesystem::path> catalog_path;

  // "tape", "cache+tape", "cloud:<tier>" or "hybrid".
  std::string Label() const;
};

// Parses a backend label; sets kind and, for cloud:<tier>, the tier.
void ParseBackendLabel(std::string_view label, BackendSection& backend);

struct OutputSection {
  std::filesystem::path dir = "coldbench-out";
  std::vector<EmitFormat> formats = {EmitFormat::kJson, EmitFormat::kCsv, EmitFormat::kPlotData};
  bool measurements_csv = true;
  bool trace = false;
};

/*
 * One run, from a YAML file. Precedence, lowest first: built-in defaults, the workload preset
 * named in the file, explicit values in the file, command-line flags.
 */
struct RunConfig {
  std::uint64_t seed = 0;
  DatasetSection dataset;
  std::optional<std::string> workload_preset;
  SessionConfig sessions;
  BackendSection backend;
  OutputSection output;

  // Propagates `seed` into the dataset and workload and validates everything. Throws ConfigError.
  void Finalize();
  // Effective configuration, echoed into reports.
  nlohmann::json ToJson() const;
};

// Relative paths in the file resolve against `base_dir`. Throws ConfigError.
RunConfig ParseRunConfig(std::string_view yaml_text, const std::filesystem::path& base_dir = ".");
RunConfig LoadRunConfig(const std::filesystem::path& path);

// Applies a named workload preset on top of the current workload. Throws ConfigError.
void ApplyWorkloadPreset(RunConfig& config, std::string_view name);

// Generated from the spec, or read from manifest_dir.
DatasetManifest MaterializeDataset(const RunConfig& config);

// Builds the configured backend on `sim`. Cache ratios are resolved against the manifest's
// static bytes. Periodic hybrid scrubs are scheduled here.
std::unique_ptr<StorageBackend> MakeBackend(Simulator& sim, const RunConfig& config, const DatasetManifest& manifest);

struct RunOutcome {
  BenchReport report;
  RunResult result;
  std::vector<std::filesystem::path> files;
};

// Materialize, preload, run, summarize. Writes outputs under config.output.dir when `write` is set.
RunOutcome ExecuteRun(const RunConfig& config, bool write = true);

}  // namespace coldbench

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
#include <string>
#include <vector>

#include <json.hpp>

#include "coldbench/backend/storage_api.hpp"
#include "coldbench/cost/cost_model.hpp"
#include "coldbench/driver/driver.hpp"

namespace coldbench {

inline constexpr std::string_view kReportFormat = "coldbench-report/1";

// Nearest-rank percentile of an ascending sample: the value at rank ceil(p/100 * n), 1-based.
// Throws std::invalid_argument for an empty sample or p outside (0, 100].
SimTime NearestRank(const std::vector<SimTime>& sorted, double p);

struct LatencyStats {
  std::uint64_t count = 0;
  double mean_us = 0.0;
  SimTime p50 = 0;
  SimTime p95 = 0;
  SimTime p99 = 0;
  SimTime max = 0;
  friend bool operator==(const LatencyStats&, const LatencyStats&) = default;
};

// Successful requests only. Sorted list of groups; "all" stands for any op or any priority.
struct LatencyGroup {
  std::string op;
  std::string priority;
  LatencyStats stats;
  friend bool operator==(const LatencyGroup&, const LatencyGroup&) = default;
};

LatencyStats ComputeLatencyStats(std::vector<SimTime> latencies);

struct CacheSummary {
  std::uint64_t hits = 0;
  std::uint64_t misses = 0;
  // 0 when the cache saw no lookups.
  double hit_rate = 0.0;
  friend bool operator==(const CacheSummary&, const CacheSummary&) = default;
};

struct BenchReport {
  // True when there were no measurements; all metrics are then zero.
  bool empty = false;
  std::uint64_t request_count = 0;
  std::uint64_t failed_count = 0;
  std::vector<LatencyGroup> latency;
  // GET bytes over the span from the first GET issue to the last GET completion.
  double sustained_bandwidth_bytes_per_s = 0.0;
  std::uint64_t bytes_read = 0;
  std::uint64_t bytes_written = 0;
  SimTime read_span = 0;
  CacheSummary cache;
  std::uint64_t mount_count = 0;
  std::uint32_t max_mounted_tapes = 0;
  CostReport cost;
  std::uint64_t get_requests_billed = 0;
  std::uint64_t bytes_retrieved_billed = 0;
  nlohmann::json config = nlohmann::json::object();
  std::uint64_t seed = 0;
  std::vector<std::string> notes;

  const LatencyGroup* FindLatency(std::string_view op, std::string_view priority) const;
  friend bool operator==(const BenchReport&, const BenchReport&) = default;
};

// Pure function of its inputs.
BenchReport Summarize(const std::vector<Measurement>& measurements, const LedgerTotals& ledger,
                      const BackendStats& stats = {}, nlohmann::json config = nlohmann::json::object(),
                      std::uint64_t seed = 0);

nlohmann::json ReportToJson(const BenchReport& report);
BenchReport ReportFromJson(const nlohmann::json& j);
std::string ReportToJsonText(const BenchReport& report);

// Flat key,value rows, one per scalar field.
std::vector<std::pair<std::string, std::string>> ReportScalars(const BenchReport& report);
std::string ReportToCsv(const BenchReport& report);

enum class EmitFormat { kJson, kCsv, kPlotData };
EmitFormat ParseEmitFormat(std::string_view text);

// Writes report.json, report.csv, or plot-data series (latency_cdf.csv, bandwidth_timeline.csv,
// cost_breakdown.csv) into `dir`, creating it. Throws std::runtime_error if unwritable.
// Returns the files written.
std::vector<std::filesystem::path> Emit(const BenchReport& report, const std::vector<Measurement>& measurements,
                                        EmitFormat format, const std::filesystem::path& dir);

// Two-column plot series.
std::vector<std::pair<double, double>> LatencyCdf(const std::vector<Measurement>& measurements);
// GET bytes per second, in buckets of `bucket` from the first issue.
std::vector<std::pair<double, double>> BandwidthTimeline(const std::vector<Measurement>& measurements,
                                                         SimTime bucket);
// (component, percent of total) rows: storage and retrieval, requests folded into retrieval.
std::vector<std::pair<std::string, double>> CostBreakdownRows(const CostReport& cost);
void WriteSeriesCsv(const std::filesystem::path& path, std::string_view x_name, std::string_view y_name,
                    const std::vector<std::pair<double, double>>& rows);
void WriteCostBreakdownCsv(const std::filesystem::path& path, const std::vector<std::pair<std::string, double>>& rows);

}  // namespace coldbench

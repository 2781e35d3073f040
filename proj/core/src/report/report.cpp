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

#include "coldbench/report/report.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>
#include <tuple>

#include <fmt/format.h>

namespace coldbench {

SimTime NearestRank(const std::vector<SimTime>& sorted, double p) {
  if (sorted.empty()) throw std::invalid_argument("percentile of an empty sample");
  if (!(p > 0.0 && p <= 100.0)) throw std::invalid_argument("percentile must be in (0, 100]");
  const auto n = static_cast<double>(sorted.size());
  // Snap values like 0.95 * 100 that land a hair above an integer.
  auto rank = static_cast<std::size_t>(std::ceil(p / 100.0 * n - 1e-9));
  rank = std::clamp<std::size_t>(rank, 1, sorted.size());
  return sorted[rank - 1];
}

LatencyStats ComputeLatencyStats(std::vector<SimTime> latencies) {
  LatencyStats stats;
  if (latencies.empty()) return stats;
  std::sort(latencies.begin(), latencies.end());
  stats.count = latencies.size();
  long double sum = 0;
  for (SimTime t : latencies) sum += static_cast<long double>(t);
  stats.mean_us = static_cast<double>(sum / static_cast<long double>(latencies.size()));
  stats.p50 = NearestRank(latencies, 50);
  stats.p95 = NearestRank(latencies, 95);
  stats.p99 = NearestRank(latencies, 99);
  stats.max = latencies.back();
  return stats;
}

const LatencyGroup* BenchReport::FindLatency(std::string_view op, std::string_view priority) const {
  for (const LatencyGroup& group : latency) {
    if (group.op == op && group.priority == priority) return &group;
  }
  return nullptr;
}

BenchReport Summarize(const std::vector<Measurement>& measurements, const LedgerTotals& ledger,
                      const BackendStats& stats, nlohmann::json config, std::uint64_t seed) {
  BenchReport report;
  report.config = std::move(config);
  report.seed = seed;
  report.cost = ledger.ToReport();
  report.get_requests_billed = ledger.get_requests;
  report.bytes_retrieved_billed = ledger.bytes_retrieved;
  report.cache.hits = stats.cache_hits;
  report.cache.misses = stats.cache_misses;
  if (stats.cache_hits + stats.cache_misses > 0) {
    report.cache.hit_rate =
        static_cast<double>(stats.cache_hits) / static_cast<double>(stats.cache_hits + stats.cache_misses);
  }
  report.mount_count = stats.tape_mounts;
  report.max_mounted_tapes = stats.max_mounted_tapes;
  if (measurements.empty()) {
    report.empty = true;
    return report;
  }

  report.request_count = measurements.size();
  std::map<std::pair<std::string, std::string>, std::vector<SimTime>> groups;
  bool any_get = false;
  SimTime first_get = 0;
  SimTime last_get = 0;
  for (const Measurement& m : measurements) {
    if (!m.ok) {
      ++report.failed_count;
      continue;
    }
    const std::string op(ToString(m.op));
    groups[{"all", "all"}].push_back(m.latency());
    groups[{op, "all"}].push_back(m.latency());
    groups[{op, m.priority}].push_back(m.latency());
    if (m.op == Op::kGet) {
      report.bytes_read += m.bytes;
      first_get = any_get ? std::min(first_get, m.issue_time) : m.issue_time;
      last_get = any_get ? std::max(last_get, m.completion_time) : m.completion_time;
      any_get = true;
    } else {
      report.bytes_written += m.bytes;
    }
  }
  for (auto& [key, latencies] : groups) {
    report.latency.push_back(LatencyGroup{key.first, key.second, ComputeLatencyStats(std::move(latencies))});
  }
  if (any_get) {
    report.read_span = last_get - first_get;
    if (report.read_span > 0) {
      report.sustained_bandwidth_bytes_per_s =
          static_cast<double>(report.bytes_read) / sim_time::ToSeconds(report.read_span);
    }
  }
  return report;
}

namespace {

nlohmann::json CostToJson(const CostReport& cost) {
  return {
      {"storage_cents", cost.storage_cost.cents()},
      {"retrieval_cents", cost.retrieval_cost.cents()},
      {"request_cents", cost.request_cost.cents()},
      {"egress_cents", cost.egress_cost.cents()},
      {"total_cents", cost.total.cents()},
      {"total", cost.total.ToString()},
      {"storage_fraction", cost.storage_fraction},
      {"access_fraction", cost.access_fraction},
  };
}

CostReport CostFromJson(const nlohmann::json& j) {
  CostReport cost;
  cost.storage_cost = Money::FromCents(j.at("storage_cents").get<std::int64_t>());
  cost.retrieval_cost = Money::FromCents(j.at("retrieval_cents").get<std::int64_t>());
  cost.request_cost = Money::FromCents(j.at("request_cents").get<std::int64_t>());
  cost.egress_cost = Money::FromCents(j.at("egress_cents").get<std::int64_t>());
  cost.total = Money::FromCents(j.at("total_cents").get<std::int64_t>());
  cost.storage_fraction = j.at("storage_fraction").get<double>();
  cost.access_fraction = j.at("access_fraction").get<double>();
  return cost;
}

}  // namespace

nlohmann::json ReportToJson(const BenchReport& report) {
  nlohmann::json latency = nlohmann::json::array();
  for (const LatencyGroup& g : report.latency) {
    latency.push_back({
        {"op", g.op},
        {"priority", g.priority},
        {"count", g.stats.count},
        {"mean_us", g.stats.mean_us},
        {"p50_us", g.stats.p50},
        {"p95_us", g.stats.p95},
        {"p99_us", g.stats.p99},
        {"max_us", g.stats.max},
    });
  }
  return {
      {"format", kReportFormat},
      {"empty", report.empty},
      {"request_count", report.request_count},
      {"failed_count", report.failed_count},
      {"latency", latency},
      {"bandwidth",
       {{"sustained_bytes_per_s", report.sustained_bandwidth_bytes_per_s},
        {"bytes_read", report.bytes_read},
        {"bytes_written", report.bytes_written},
        {"read_span_us", report.read_span}}},
      {"cache", {{"hits", report.cache.hits}, {"misses", report.cache.misses}, {"hit_rate", report.cache.hit_rate}}},
      {"tape", {{"mount_count", report.mount_count}, {"max_mounted_tapes", report.max_mounted_tapes}}},
      {"cost", CostToJson(report.cost)},
      {"billing", {{"get_requests", report.get_requests_billed}, {"bytes_retrieved", report.bytes_retrieved_billed}}},
      {"config", report.config},
      {"seed", report.seed},
      {"notes", report.notes},
  };
}

BenchReport ReportFromJson(const nlohmann::json& j) {
  if (j.at("format").get<std::string>() != kReportFormat) {
    throw std::invalid_argument(fmt::format("unsupported report format '{}'", j.at("format").get<std::string>()));
  }
  BenchReport report;
  report.empty = j.at("empty").get<bool>();
  report.request_count = j.at("request_count").get<std::uint64_t>();
  report.failed_count = j.at("failed_count").get<std::uint64_t>();
  for (const auto& g : j.at("latency")) {
    LatencyGroup group;
    group.op = g.at("op").get<std::string>();
    group.priority = g.at("priority").get<std::string>();
    group.stats.count = g.at("count").get<std::uint64_t>();
    group.stats.mean_us = g.at("mean_us").get<double>();
    group.stats.p50 = g.at("p50_us").get<SimTime>();
    group.stats.p95 = g.at("p95_us").get<SimTime>();
    group.stats.p99 = g.at("p99_us").get<SimTime>();
    group.stats.max = g.at("max_us").get<SimTime>();
    report.latency.push_back(std::move(group));
  }
  const auto& bw = j.at("bandwidth");
  report.sustained_bandwidth_bytes_per_s = bw.at("sustained_bytes_per_s").get<double>();
  report.bytes_read = bw.at("bytes_read").get<std::uint64_t>();
  report.bytes_written = bw.at("bytes_written").get<std::uint64_t>();
  report.read_span = bw.at("read_span_us").get<SimTime>();
  const auto& cache = j.at("cache");
  report.cache.hits = cache.at("hits").get<std::uint64_t>();
  report.cache.misses = cache.at("misses").get<std::uint64_t>();
  report.cache.hit_rate = cache.at("hit_rate").get<double>();
  report.mount_count = j.at("tape").at("mount_count").get<std::uint64_t>();
  report.max_mounted_tapes = j.at("tape").at("max_mounted_tapes").get<std::uint32_t>();
  report.cost = CostFromJson(j.at("cost"));
  report.get_requests_billed = j.at("billing").at("get_requests").get<std::uint64_t>();
  report.bytes_retrieved_billed = j.at("billing").at("bytes_retrieved").get<std::uint64_t>();
  report.config = j.at("config");
  report.seed = j.at("seed").get<std::uint64_t>();
  report.notes = j.at("notes").get<std::vector<std::string>>();
  return report;
}

std::string ReportToJsonText(const BenchReport& report) { return ReportToJson(report).dump(2) + "\n"; }

std::vector<std::pair<std::string, std::string>> ReportScalars(const BenchReport& report) {
  std::vector<std::pair<std::string, std::string>> rows;
  auto add = [&rows](std::string key, std::string value) { rows.emplace_back(std::move(key), std::move(value)); };
  add("format", std::string(kReportFormat));
  add("empty", report.empty ? "true" : "false");
  add("seed", std::to_string(report.seed));
  add("request_count", std::to_string(report.request_count));
  add("failed_count", std::to_string(report.failed_count));
  for (const LatencyGroup& g : report.latency) {
    const std::string prefix = fmt::format("latency.{}.{}.", g.op, g.priority);
    add(prefix + "count", std::to_string(g.stats.count));
    add(prefix + "mean_us", fmt::format("{}", g.stats.mean_us));
    add(prefix + "p50_us", std::to_string(g.stats.p50));
    add(prefix + "p95_us", std::to_string(g.stats.p95));
    add(prefix + "p99_us", std::to_string(g.stats.p99));
    add(prefix + "max_us", std::to_string(g.stats.max));
  }
  add("bandwidth.sustained_bytes_per_s", fmt::format("{}", report.sustained_bandwidth_bytes_per_s));
  add("bandwidth.bytes_read", std::to_string(report.bytes_read));
  add("bandwidth.bytes_written", std::to_string(report.bytes_written));
  add("bandwidth.read_span_us", std::to_string(report.read_span));
  add("cache.hits", std::to_string(report.cache.hits));
  add("cache.misses", std::to_string(report.cache.misses));
  add("cache.hit_rate", fmt::format("{}", report.cache.hit_rate));
  add("tape.mount_count", std::to_string(report.mount_count));
  add("tape.max_mounted_tapes", std::to_string(report.max_mounted_tapes));
  add("cost.storage_cents", std::to_string(report.cost.storage_cost.cents()));
  add("cost.retrieval_cents", std::to_string(report.cost.retrieval_cost.cents()));
  add("cost.request_cents", std::to_string(report.cost.request_cost.cents()));
  add("cost.egress_cents", std::to_string(report.cost.egress_cost.cents()));
  add("cost.total_cents", std::to_string(report.cost.total.cents()));
  add("cost.storage_fraction", fmt::format("{}", report.cost.storage_fraction));
  add("cost.access_fraction", fmt::format("{}", report.cost.access_fraction));
  add("billing.get_requests", std::to_string(report.get_requests_billed));
  add("billing.bytes_retrieved", std::to_string(report.bytes_retrieved_billed));
  for (std::size_t i = 0; i < report.notes.size(); ++i) add(fmt::format("notes.{}", i), report.notes[i]);
  return rows;
}

std::string ReportToCsv(const BenchReport& report) {
  std::string out = "key,value\n";
  for (const auto& [key, value] : ReportScalars(report)) {
    const bool quote = value.find_first_of(",\"\n") != std::string::npos;
    if (quote) {
      std::string escaped;
      for (char c : value) {
        if (c == '"') escaped += '"';
        escaped += c;
      }
      out += fmt::format("{},\"{}\"\n", key, escaped);
    } else {
      out += fmt::format("{},{}\n", key, value);
    }
  }
  return out;
}

}  // namespace coldbench

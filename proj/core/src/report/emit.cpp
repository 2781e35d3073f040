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

#include <algorithm>
#include <fstream>
#include <stdexcept>

#include <fmt/format.h>
#include <fmt/ostream.h>

#include "coldbench/report/report.hpp"

namespace coldbench {

EmitFormat ParseEmitFormat(std::string_view text) {
  if (text == "json") return EmitFormat::kJson;
  if (text == "csv") return EmitFormat::kCsv;
  if (text == "plot-data" || text == "plot") return EmitFormat::kPlotData;
  throw std::invalid_argument(fmt::format("unknown report format '{}' (json, csv, plot-data)", text));
}

std::vector<std::pair<double, double>> LatencyCdf(const std::vector<Measurement>& measurements) {
  std::vector<SimTime> latencies;
  for (const Measurement& m : measurements) {
    if (m.ok) latencies.push_back(m.latency());
  }
  std::sort(latencies.begin(), latencies.end());
  std::vector<std::pair<double, double>> rows;
  const auto n = static_cast<double>(latencies.size());
  for (std::size_t i = 0; i < latencies.size(); ++i) {
    // One point per distinct latency, at its highest rank.
    if (i + 1 < latencies.size() && latencies[i + 1] == latencies[i]) continue;
    rows.emplace_back(sim_time::ToSeconds(latencies[i]), static_cast<double>(i + 1) / n);
  }
  return rows;
}

std::vector<std::pair<double, double>> BandwidthTimeline(const std::vector<Measurement>& measurements,
                                                         SimTime bucket) {
  if (bucket <= 0) throw std::invalid_argument("timeline bucket must be > 0");
  std::vector<std::pair<double, double>> rows;
  bool any = false;
  SimTime start = 0;
  SimTime end = 0;
  for (const Measurement& m : measurements) {
    if (!m.ok || m.op != Op::kGet) continue;
    start = any ? std::min(start, m.issue_time) : m.issue_time;
    end = any ? std::max(end, m.completion_time) : m.completion_time;
    any = true;
  }
  if (!any) return rows;
  const auto buckets = static_cast<std::size_t>((end - start) / bucket + 1);
  std::vector<double> bytes(buckets, 0.0);
  // Bytes are credited to the bucket in which the request completes.
  for (const Measurement& m : measurements) {
    if (!m.ok || m.op != Op::kGet) continue;
    bytes[static_cast<std::size_t>((m.completion_time - start) / bucket)] += static_cast<double>(m.bytes);
  }
  const double seconds = sim_time::ToSeconds(bucket);
  for (std::size_t i = 0; i < buckets; ++i) {
    rows.emplace_back(sim_time::ToSeconds(static_cast<SimTime>(i) * bucket), bytes[i] / seconds);
  }
  return rows;
}

std::vector<std::pair<std::string, double>> CostBreakdownRows(const CostReport& cost) {
  return {{"storage", 100.0 * cost.storage_fraction}, {"retrieval", 100.0 * cost.access_fraction}};
}

namespace {

std::ofstream OpenOut(const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error(fmt::format("cannot write {}", path.string()));
  return out;
}

void Finish(std::ofstream& out, const std::filesystem::path& path) {
  out.flush();
  if (!out) throw std::runtime_error(fmt::format("error writing {}", path.string()));
}

}  // namespace

void WriteSeriesCsv(const std::filesystem::path& path, std::string_view x_name, std::string_view y_name,
                    const std::vector<std::pair<double, double>>& rows) {
  std::ofstream out = OpenOut(path);
  fmt::print(out, "{},{}\n", x_name, y_name);
  for (const auto& [x, y] : rows) fmt::print(out, "{},{}\n", x, y);
  Finish(out, path);
}

void WriteCostBreakdownCsv(const std::filesystem::path& path, const std::vector<std::pair<std::string, double>>& rows) {
  std::ofstream out = OpenOut(path);
  fmt::print(out, "component,percent\n");
  for (const auto& [name, percent] : rows) fmt::print(out, "{},{:.2f}\n", name, percent);
  Finish(out, path);
}

std::vector<std::filesystem::path> Emit(const BenchReport& report, const std::vector<Measurement>& measurements,
                                        EmitFormat format, const std::filesystem::path& dir) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw std::runtime_error(fmt::format("cannot create {}: {}", dir.string(), ec.message()));
  std::vector<std::filesystem::path> written;
  switch (format) {
    case EmitFormat::kJson: {
      const auto path = dir / "report.json";
      std::ofstream out = OpenOut(path);
      out << ReportToJsonText(report);
      Finish(out, path);
      written.push_back(path);
      break;
    }
    case EmitFormat::kCsv: {
      const auto path = dir / "report.csv";
      std::ofstream out = OpenOut(path);
      out << ReportToCsv(report);
      Finish(out, path);
      written.push_back(path);
      break;
    }
    case EmitFormat::kPlotData: {
      written.push_back(dir / "latency_cdf.csv");
      WriteSeriesCsv(written.back(), "latency_s", "fraction", LatencyCdf(measurements));
      written.push_back(dir / "bandwidth_timeline.csv");
      SimTime bucket = sim_time::kSecond;
      // Aim for at most a few hundred points.
      while (report.read_span / bucket > 500) bucket *= 10;
      WriteSeriesCsv(written.back(), "time_s", "bytes_per_s", BandwidthTimeline(measurements, bucket));
      written.push_back(dir / "cost_breakdown.csv");
      WriteCostBreakdownCsv(written.back(), CostBreakdownRows(report.cost));
      break;
    }
  }
  return written;
}

}  // namespace coldbench

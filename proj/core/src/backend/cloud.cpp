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

#include "coldbench/backend/cloud.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include <fmt/format.h>

#include "coldbench/units.hpp"

namespace coldbench {

void CloudTierConfig::Validate() const {
  pricing.Validate();
  const bool hours_class = pricing.nominal_latency.kind == NominalLatency::Kind::kHours;
  if (hours_class != (latency_model == LatencyModel::kRehydration)) {
    throw std::invalid_argument(fmt::format(
        "tier '{}': {} latency class needs the {} latency model", pricing.tier_name,
        hours_class ? "hour" : "online", hours_class ? "rehydration" : "constant or lognormal"));
  }
  if (nominal_latency < 0) throw std::invalid_argument("cloud nominal latency must be >= 0");
  if (!(lognormal_sigma >= 0.0)) throw std::invalid_argument("lognormal sigma must be >= 0");
  if (rehydration_min <= 0 || rehydration_max < rehydration_min) {
    throw std::invalid_argument("rehydration window must satisfy 0 < min <= max");
  }
  if (!(bandwidth_mb_s >= 0.0)) throw std::invalid_argument("cloud bandwidth must be >= 0");
  if (!(egress_per_gb >= 0.0)) throw std::invalid_argument("egress price must be >= 0");
}

CloudTierConfig CloudTierConfig::ForTier(const TierPricing& pricing) {
  CloudTierConfig config;
  config.pricing = pricing;
  if (pricing.nominal_latency.kind == NominalLatency::Kind::kHours) {
    config.latency_model = LatencyModel::kRehydration;
  } else {
    config.latency_model = LatencyModel::kConstant;
    config.nominal_latency = pricing.nominal_latency.fixed;
  }
  return config;
}

CloudTierConfig::LatencyModel ParseLatencyModel(std::string_view text) {
  if (text == "constant") return CloudTierConfig::LatencyModel::kConstant;
  if (text == "lognormal") return CloudTierConfig::LatencyModel::kLognormal;
  if (text == "rehydration") return CloudTierConfig::LatencyModel::kRehydration;
  throw std::invalid_argument(fmt::format("unknown latency model '{}' (constant, lognormal, rehydration)", text));
}

CloudBackend::CloudBackend(Simulator& sim, CloudTierConfig config, std::uint64_t seed, std::string name)
    : StorageBackend(sim, name.empty() ? "cloud:" + config.pricing.tier_name : std::move(name)),
      config_(std::move(config)),
      rng_(seed, "backend/" + this->name()),
      ledger_(config_.pricing) {
  config_.Validate();
}

std::uint64_t CloudBackend::SizeOf(FileId file) const {
  const auto it = sizes_.find(file);
  if (it == sizes_.end()) throw std::out_of_range(fmt::format("file {} is not in {}", file, name()));
  return it->second;
}

std::vector<FileId> CloudBackend::StoredFiles() const {
  std::vector<FileId> files;
  files.reserve(sizes_.size());
  for (const auto& [file, size] : sizes_) files.push_back(file);
  std::sort(files.begin(), files.end());
  return files;
}

BackendStats CloudBackend::Stats() const {
  BackendStats stats;
  stats.cloud_gets = gets_;
  stats.bytes_read = bytes_read_;
  stats.bytes_written = bytes_written_;
  return stats;
}

void CloudBackend::DoPreload(std::span<const FileRecord> files) {
  std::uint64_t total = 0;
  for (const FileRecord& record : files) {
    if (!sizes_.emplace(record.file_id, record.size_bytes).second) {
      throw std::invalid_argument(fmt::format("duplicate file {} in preload", record.file_id));
    }
    total += record.size_bytes;
  }
  ledger_.AdjustStored(sim_.Now(), static_cast<std::int64_t>(total));
}

SimTime CloudBackend::DrawLatency(std::uint64_t size) {
  SimTime first_byte = 0;
  switch (config_.latency_model) {
    case CloudTierConfig::LatencyModel::kConstant:
      first_byte = config_.nominal_latency;
      break;
    case CloudTierConfig::LatencyModel::kLognormal:
      first_byte = static_cast<SimTime>(
          std::llround(static_cast<double>(config_.nominal_latency) * std::exp(config_.lognormal_sigma * rng_.Normal())));
      break;
    case CloudTierConfig::LatencyModel::kRehydration:
      first_byte = static_cast<SimTime>(rng_.UniformInt(static_cast<std::uint64_t>(config_.rehydration_min),
                                                        static_cast<std::uint64_t>(config_.rehydration_max)));
      break;
  }
  if (config_.bandwidth_mb_s > 0.0) {
    first_byte += sim_time::FromSeconds(static_cast<double>(size) / (config_.bandwidth_mb_s * kBytesPerMB));
  }
  return first_byte;
}

void CloudBackend::Get(FileId file, std::string_view priority, CompletionFn done) {
  (void)priority;
  const auto it = sizes_.find(file);
  if (it == sizes_.end()) {
    Fail(std::move(done), fmt::format("file {} is not in {}", file, name()), "get", file);
    return;
  }
  const std::uint64_t size = it->second;
  Completion c;
  c.issue_time = sim_.Now();
  c.completion_time = c.issue_time + DrawLatency(size);
  c.bytes = size;
  c.file_count = 1;
  c.cost_delta = ledger_.ChargeGet(size);
  if (config_.charge_egress) c.cost_delta += ledger_.ChargeEgress(size, config_.egress_per_gb);
  ++gets_;
  bytes_read_ += size;
  Deliver(std::move(done), c, "get", file);
}

void CloudBackend::Put(FileId file, std::uint64_t size, CompletionFn done) {
  if (Contains(file)) {
    Fail(std::move(done), fmt::format("file {} is already in {}", file, name()), "put", file);
    return;
  }
  Completion c;
  c.issue_time = sim_.Now();
  c.completion_time = c.issue_time;
  if (config_.latency_model != CloudTierConfig::LatencyModel::kRehydration) c.completion_time += config_.nominal_latency;
  if (config_.bandwidth_mb_s > 0.0) {
    c.completion_time += sim_time::FromSeconds(static_cast<double>(size) / (config_.bandwidth_mb_s * kBytesPerMB));
  }
  c.bytes = size;
  c.file_count = 1;
  // The object becomes visible (and billable) once the upload lands.
  sim_.ScheduleAt(c.completion_time, [this, file, size]() {
    if (!sizes_.emplace(file, size).second) return;
    bytes_written_ += size;
    ledger_.AdjustStored(sim_.Now(), static_cast<std::int64_t>(size));
  });
  Deliver(std::move(done), c, "put", file);
}

}  // namespace coldbench

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
#include <string_view>
#include <unordered_map>

#include "coldbench/backend/storage_api.hpp"
#include "coldbench/sim/rng.hpp"

namespace coldbench {

struct CloudTierConfig {
  enum class LatencyModel { kConstant, kLognormal, kRehydration };

  TierPricing pricing;
  LatencyModel latency_model = LatencyModel::kConstant;
  // First-byte latency for constant and lognormal models; the lognormal median.
  SimTime nominal_latency = 0;
  double lognormal_sigma = 0.25;
  SimTime rehydration_min = 1 * sim_time::kHour;
  SimTime rehydration_max = 15 * sim_time::kHour;
  // Per-request transfer cap in MB/s; 0 leaves transfers untimed.
  double bandwidth_mb_s = 0.0;
  // Egress is off unless a scenario asks for it.
  bool charge_egress = false;
  double egress_per_gb = 0.05;

  // Rejects latency models that contradict the tier's latency class.
  void Validate() const;

  // Constant nominal latency for online tiers, rehydration for hour-class tiers.
  static CloudTierConfig ForTier(const TierPricing& pricing);
};

CloudTierConfig::LatencyModel ParseLatencyModel(std::string_view text);

/*
 * One cloud storage tier. Requests are independent (no queueing); each GET is charged retrieval
 * and request fees when issued. Stored bytes accrue storage cost continuously in simulated time.
 */
class CloudBackend final : public StorageBackend {
 public:
  CloudBackend(Simulator& sim, CloudTierConfig config, std::uint64_t seed = 0, std::string name = "");

  void Get(FileId file, std::string_view priority, CompletionFn done) override;
  void Put(FileId file, std::uint64_t size, CompletionFn done) override;

  bool Contains(FileId file) const override { return sizes_.count(file) != 0; }
  std::uint64_t SizeOf(FileId file) const override;
  std::vector<FileId> StoredFiles() const override;
  BackendStats Stats() const override;
  LedgerTotals Ledger(SimTime now) const override { return ledger_.Totals(now); }

  const CloudTierConfig& config() const { return config_; }
  const CostLedger& ledger() const { return ledger_; }

 private:
  void DoPreload(std::span<const FileRecord> files) override;
  SimTime DrawLatency(std::uint64_t size);

  CloudTierConfig config_;
  RngStream rng_;
  CostLedger ledger_;
  std::unordered_map<FileId, std::uint64_t> sizes_;
  std::uint64_t gets_ = 0;
  std::uint64_t bytes_read_ = 0;
  std::uint64_t bytes_written_ = 0;
};

}  // namespace coldbench

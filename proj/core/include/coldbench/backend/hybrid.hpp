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

#include <memory>
#include <optional>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "coldbench/backend/cache.hpp"
#include "coldbench/backend/cloud.hpp"
#include "coldbench/backend/tape.hpp"

namespace coldbench {

struct HybridConfig {
  enum class ScrubTarget { kLocal, kCloud };

  TapeConfig tape;
  // Without a cache section the local copy is the bare tape library.
  std::optional<CacheConfig> cache;
  std::vector<CloudTierConfig> cloud_copies;
  // 0 disables periodic scrubbing.
  SimTime scrub_interval = 0;
  ScrubTarget scrub_target = ScrubTarget::kLocal;

  void Validate() const;
};

HybridConfig::ScrubTarget ParseScrubTarget(std::string_view text);

/*
 * Two-tier archive: one local copy (tape, optionally behind a disk cache) plus one or more cloud
 * copies. Reads go to the local copy; the first cloud copy is the fallback when a file has been
 * lost locally. Writes land locally and are then uploaded to every cloud copy.
 */
class HybridBackend final : public StorageBackend {
 public:
  HybridBackend(Simulator& sim, HybridConfig config, std::uint64_t seed = 0, std::string name = "hybrid");

  void Get(FileId file, std::string_view priority, CompletionFn done) override;
  void Put(FileId file, std::uint64_t size, CompletionFn done) override;
  // Scrubs against the configured target.
  void Scrub(CompletionFn done) override { Scrub(config_.scrub_target, std::move(done)); }
  void Scrub(HybridConfig::ScrubTarget target, CompletionFn done);
  // Runs a scrub every scrub_interval until `horizon`. No-op when the interval is 0.
  void SchedulePeriodicScrubs(SimTime horizon);
  void RecordBatchParts(bool on) override;

  bool Contains(FileId file) const override;
  std::uint64_t SizeOf(FileId file) const override;
  std::vector<FileId> StoredFiles() const override;
  BackendStats Stats() const override;
  // Sum over all cloud copies; the local copy has no metered charges.
  LedgerTotals Ledger(SimTime now) const override;

  // Drops the local copy of a file, simulating media loss.
  void InjectLocalLoss(FileId file);
  bool LocallyAvailable(FileId file) const;

  TapeLibrary& tape() { return *tape_; }
  CloudBackend& cloud(std::size_t i) { return *clouds_.at(i); }
  std::size_t cloud_count() const { return clouds_.size(); }
  std::uint64_t scrubs_completed() const { return scrubs_completed_; }
  std::uint64_t fallback_reads() const { return fallback_reads_; }

 private:
  void DoPreload(std::span<const FileRecord> files) override;

  HybridConfig config_;
  std::unique_ptr<StorageBackend> local_;
  TapeLibrary* tape_ = nullptr;
  std::vector<std::unique_ptr<CloudBackend>> clouds_;
  std::unordered_set<FileId> lost_;
  std::uint64_t scrubs_completed_ = 0;
  std::uint64_t fallback_reads_ = 0;
};

}  // namespace coldbench

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

#include "coldbench/backend/hybrid.hpp"

#include <algorithm>
#include <stdexcept>

#include <fmt/format.h>

namespace coldbench {

void HybridConfig::Validate() const {
  tape.Validate();
  if (cache) cache->Validate();
  if (cloud_copies.empty()) throw std::invalid_argument("hybrid backend needs at least one cloud copy");
  for (const CloudTierConfig& copy : cloud_copies) copy.Validate();
  if (scrub_interval < 0) throw std::invalid_argument("scrub interval must be >= 0");
}

HybridConfig::ScrubTarget ParseScrubTarget(std::string_view text) {
  if (text == "local" || text == "local-only") return HybridConfig::ScrubTarget::kLocal;
  if (text == "cloud") return HybridConfig::ScrubTarget::kCloud;
  throw std::invalid_argument(fmt::format("unknown scrub target '{}' (local, cloud)", text));
}

HybridBackend::HybridBackend(Simulator& sim, HybridConfig config, std::uint64_t seed, std::string name)
    : StorageBackend(sim, std::move(name)), config_(std::move(config)) {
  config_.Validate();
  auto tape = std::make_unique<TapeLibrary>(sim, config_.tape, seed, this->name() + "/tape");
  tape_ = tape.get();
  if (config_.cache) {
    local_ = std::make_unique<CachedBackend>(sim, *config_.cache, std::move(tape), this->name() + "/cache");
  } else {
    local_ = std::move(tape);
  }
  for (std::size_t i = 0; i < config_.cloud_copies.size(); ++i) {
    const CloudTierConfig& copy = config_.cloud_copies[i];
    clouds_.push_back(std::make_unique<CloudBackend>(
        sim, copy, seed, fmt::format("{}/cloud{}:{}", this->name(), i, copy.pricing.tier_name)));
  }
}

void HybridBackend::DoPreload(std::span<const FileRecord> files) {
  local_->Preload(files);
  for (auto& cloud : clouds_) cloud->Preload(files);
}

bool HybridBackend::LocallyAvailable(FileId file) const { return local_->Contains(file) && !lost_.count(file); }

bool HybridBackend::Contains(FileId file) const {
  if (LocallyAvailable(file)) return true;
  return std::any_of(clouds_.begin(), clouds_.end(), [file](const auto& c) { return c->Contains(file); });
}

std::uint64_t HybridBackend::SizeOf(FileId file) const {
  if (local_->Contains(file)) return local_->SizeOf(file);
  for (const auto& cloud : clouds_) {
    if (cloud->Contains(file)) return cloud->SizeOf(file);
  }
  throw std::out_of_range(fmt::format("file {} is not in {}", file, name()));
}

std::vector<FileId> HybridBackend::StoredFiles() const {
  std::vector<FileId> files = local_->StoredFiles();
  for (const auto& cloud : clouds_) {
    const std::vector<FileId> more = cloud->StoredFiles();
    files.insert(files.end(), more.begin(), more.end());
  }
  std::sort(files.begin(), files.end());
  files.erase(std::unique(files.begin(), files.end()), files.end());
  return files;
}

BackendStats HybridBackend::Stats() const {
  BackendStats stats = local_->Stats();
  for (const auto& cloud : clouds_) stats += cloud->Stats();
  return stats;
}

LedgerTotals HybridBackend::Ledger(SimTime now) const {
  LedgerTotals totals;
  for (const auto& cloud : clouds_) totals += cloud->Ledger(now);
  return totals;
}

void HybridBackend::InjectLocalLoss(FileId file) {
  if (!local_->Contains(file)) throw std::out_of_range(fmt::format("file {} has no local copy", file));
  lost_.insert(file);
}

void HybridBackend::Get(FileId file, std::string_view priority, CompletionFn done) {
  if (LocallyAvailable(file)) {
    local_->Get(file, priority, std::move(done));
    return;
  }
  // Only the first cloud copy serves fallbacks.
  CloudBackend& fallback = *clouds_.front();
  if (fallback.Contains(file)) {
    ++fallback_reads_;
    fallback.Get(file, priority, std::move(done));
    return;
  }
  Fail(std::move(done), fmt::format("file {} is absent from all copies", file), "get", file);
}

void HybridBackend::Put(FileId file, std::uint64_t size, CompletionFn done) {
  if (Contains(file)) {
    Fail(std::move(done), fmt::format("file {} is already stored", file), "put", file);
    return;
  }
  // The client is acknowledged by the local write; cloud uploads follow in the background.
  local_->Put(file, size, [this, file, size, done = std::move(done)](const Completion& local) {
    if (local.ok) {
      for (auto& cloud : clouds_) cloud->Put(file, size, nullptr);
    }
    if (done) done(local);
  });
}

void HybridBackend::Scrub(HybridConfig::ScrubTarget target, CompletionFn done) {
  auto count = [this, done = std::move(done)](const Completion& c) {
    ++scrubs_completed_;
    if (done) done(c);
  };
  if (target == HybridConfig::ScrubTarget::kCloud) {
    clouds_.front()->Scrub(std::move(count));
    return;
  }
  // Local scrubs verify the tape copy itself, so they bypass the cache.
  std::vector<FileId> files = tape_->StoredFiles();
  std::erase_if(files, [this](FileId f) { return lost_.count(f) != 0; });
  tape_->BatchGet(files, "low", std::move(count));
}

void HybridBackend::RecordBatchParts(bool on) {
  StorageBackend::RecordBatchParts(on);
  local_->RecordBatchParts(on);
  for (auto& cloud : clouds_) cloud->RecordBatchParts(on);
}

void HybridBackend::SchedulePeriodicScrubs(SimTime horizon) {
  if (config_.scrub_interval <= 0) return;
  for (SimTime at = sim_.Now() + config_.scrub_interval; at <= horizon; at += config_.scrub_interval) {
    sim_.ScheduleAt(at, [this]() { Scrub(nullptr); });
  }
}

}  // namespace coldbench

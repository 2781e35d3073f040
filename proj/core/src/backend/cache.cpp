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

#include "coldbench/backend/cache.hpp"

#include <algorithm>
#include <stdexcept>

#include <fmt/format.h>

#include "coldbench/units.hpp"

namespace coldbench {

void CacheConfig::Validate() const {
  if (disk_latency < 0) throw std::invalid_argument("cache disk latency must be >= 0");
  if (!(disk_rate_mb_s > 0.0)) throw std::invalid_argument("cache disk rate must be > 0");
}

CacheConfig::Policy ParseCachePolicy(std::string_view text) {
  if (text == "lru") return CacheConfig::Policy::kLru;
  if (text == "fifo") return CacheConfig::Policy::kFifo;
  throw std::invalid_argument(fmt::format("unknown cache policy '{}' (lru, fifo)", text));
}

FileCache::FileCache(std::uint64_t capacity_bytes, CacheConfig::Policy policy)
    : capacity_(capacity_bytes), policy_(policy) {}

void FileCache::Touch(FileId file) {
  if (policy_ != CacheConfig::Policy::kLru) return;
  const auto it = index_.find(file);
  if (it == index_.end()) return;
  order_.splice(order_.end(), order_, it->second);
}

bool FileCache::Admit(FileId file, std::uint64_t size, std::vector<FileId>* evicted) {
  if (size > capacity_) return false;
  if (Contains(file)) {
    Erase(file);
  }
  while (resident_ + size > capacity_) {
    const Entry victim = order_.front();
    order_.pop_front();
    index_.erase(victim.file);
    resident_ -= victim.size;
    if (evicted != nullptr) evicted->push_back(victim.file);
  }
  order_.push_back(Entry{file, size});
  index_[file] = std::prev(order_.end());
  resident_ += size;
  return true;
}

void FileCache::Erase(FileId file) {
  const auto it = index_.find(file);
  if (it == index_.end()) return;
  resident_ -= it->second->size;
  order_.erase(it->second);
  index_.erase(it);
}

CachedBackend::CachedBackend(Simulator& sim, CacheConfig config, std::unique_ptr<StorageBackend> backing,
                             std::string name)
    : StorageBackend(sim, std::move(name)),
      config_(config),
      backing_(std::move(backing)),
      cache_(config.capacity_bytes, config.policy) {
  config_.Validate();
  if (!backing_) throw std::invalid_argument("cache needs a backing store");
}

SimTime CachedBackend::DiskTime(std::uint64_t size) const {
  return config_.disk_latency + sim_time::FromSeconds(static_cast<double>(size) / (config_.disk_rate_mb_s * kBytesPerMB));
}

BackendStats CachedBackend::Stats() const {
  BackendStats stats = backing_->Stats();
  stats.cache_hits += hits_;
  stats.cache_misses += misses_;
  return stats;
}

void CachedBackend::AdmitAfterMiss(FileId file, std::uint64_t size) { cache_.Admit(file, size); }

void CachedBackend::Get(FileId file, std::string_view priority, CompletionFn done) {
  if (!backing_->Contains(file)) {
    Fail(std::move(done), fmt::format("file {} is not stored", file), "get", file);
    return;
  }
  const std::uint64_t size = backing_->SizeOf(file);
  const SimTime issued = sim_.Now();
  if (cache_.Contains(file)) {
    ++hits_;
    cache_.Touch(file);
    Completion c;
    c.issue_time = issued;
    c.completion_time = issued + DiskTime(size);
    c.bytes = size;
    c.file_count = 1;
    Deliver(std::move(done), c, "cache_hit", file);
    return;
  }
  if (size > cache_.capacity_bytes() && !config_.bypass_oversize) {
    Fail(std::move(done), fmt::format("file {} ({} bytes) exceeds the cache capacity", file, size), "get", file);
    return;
  }
  ++misses_;
  backing_->Get(file, priority, [this, done = std::move(done), file, size](const Completion& fetched) {
    if (fetched.ok) AdmitAfterMiss(file, size);
    if (done) done(fetched);
  });
}

void CachedBackend::BatchGet(std::span<const FileId> files, std::string_view priority, CompletionFn done) {
  if (files.empty()) {
    StorageBackend::BatchGet(files, priority, std::move(done));
    return;
  }
  std::vector<FileId> hits;
  std::vector<FileId> misses;
  std::vector<FileId> rejected;
  for (FileId file : files) {
    if (!backing_->Contains(file)) {
      rejected.push_back(file);
    } else if (cache_.Contains(file)) {
      hits.push_back(file);
    } else if (backing_->SizeOf(file) > cache_.capacity_bytes() && !config_.bypass_oversize) {
      rejected.push_back(file);
    } else {
      misses.push_back(file);
    }
  }
  const std::size_t parts = hits.size() + rejected.size() + misses.size();
  auto join = BatchJoin::Make(parts, sim_.Now(), std::move(done), record_parts_);
  for (FileId file : rejected) {
    Fail(join, fmt::format("file {} cannot be served", file), "get", file);
  }
  for (FileId file : hits) {
    ++hits_;
    cache_.Touch(file);
    const std::uint64_t size = backing_->SizeOf(file);
    Completion c;
    c.issue_time = sim_.Now();
    c.completion_time = c.issue_time + DiskTime(size);
    c.bytes = size;
    c.file_count = 1;
    Deliver(join, c, "cache_hit", file);
  }
  if (misses.empty()) return;
  misses_ += misses.size();
  // Misses are forwarded one by one so each file is admitted as soon as it arrives.
  for (FileId file : misses) {
    const std::uint64_t size = backing_->SizeOf(file);
    backing_->Get(file, priority, [this, join, file, size](const Completion& fetched) {
      if (fetched.ok) AdmitAfterMiss(file, size);
      join(fetched);
    });
  }
}

void CachedBackend::Put(FileId file, std::uint64_t size, CompletionFn done) {
  if (backing_->Contains(file)) {
    Fail(std::move(done), fmt::format("file {} is already stored", file), "put", file);
    return;
  }
  if (!cache_.Admit(file, size)) {
    if (!config_.bypass_oversize) {
      Fail(std::move(done), fmt::format("file {} ({} bytes) exceeds the cache capacity", file, size), "put", file);
      return;
    }
    // Too large to buffer: write through.
    backing_->Put(file, size, std::move(done));
    return;
  }
  const SimTime issued = sim_.Now();
  const SimTime acked = issued + DiskTime(size);
  // Destage starts at the acknowledgement; the backing store knows the file from then on.
  ++pending_destages_;
  sim_.ScheduleAt(acked, [this, file, size]() {
    backing_->Put(file, size, [this](const Completion&) { --pending_destages_; });
  });
  Completion c;
  c.issue_time = issued;
  c.completion_time = acked;
  c.bytes = size;
  c.file_count = 1;
  Deliver(std::move(done), c, "put", file);
}

}  // namespace coldbench

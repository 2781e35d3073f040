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
#include <list>
#include <memory>
#include <unordered_map>
#include <vector>

#include "coldbench/backend/storage_api.hpp"

namespace coldbench {

struct CacheConfig {
  enum class Policy { kLru, kFifo };

  std::uint64_t capacity_bytes = 0;
  Policy policy = Policy::kLru;
  SimTime disk_latency = 10 * sim_time::kMillisecond;
  double disk_rate_mb_s = 150.0;
  // Files larger than the cache are served straight from the backing store instead of failing.
  bool bypass_oversize = true;

  void Validate() const;
};

CacheConfig::Policy ParseCachePolicy(std::string_view text);

// Byte-bounded file cache with LRU or FIFO eviction. Resident bytes never exceed capacity.
class FileCache {
 public:
  FileCache(std::uint64_t capacity_bytes, CacheConfig::Policy policy);

  bool Contains(FileId file) const { return index_.count(file) != 0; }
  // Counts as a use under LRU.
  void Touch(FileId file);
  // Inserts (or refreshes) a file, evicting as needed. Returns false, leaving the cache
  // unchanged, if the file is larger than the capacity.
  bool Admit(FileId file, std::uint64_t size, std::vector<FileId>* evicted = nullptr);
  void Erase(FileId file);

  std::uint64_t resident_bytes() const { return resident_; }
  std::uint64_t capacity_bytes() const { return capacity_; }
  std::size_t file_count() const { return index_.size(); }

 private:
  struct Entry {
    FileId file;
    std::uint64_t size;
  };

  std::uint64_t capacity_;
  CacheConfig::Policy policy_;
  std::uint64_t resident_ = 0;
  // Front is the next eviction victim.
  std::list<Entry> order_;
  std::unordered_map<FileId, std::list<Entry>::iterator> index_;
};

/*
 * Disk cache in front of a backing store (normally a tape library). Read misses are fetched from
 * the backing store and then admitted. Writes act as a burst buffer: they are acknowledged once on
 * disk and destaged to the backing store in the background.
 */
class CachedBackend final : public StorageBackend {
 public:
  CachedBackend(Simulator& sim, CacheConfig config, std::unique_ptr<StorageBackend> backing,
                std::string name = "cache");

  void Get(FileId file, std::string_view priority, CompletionFn done) override;
  void BatchGet(std::span<const FileId> files, std::string_view priority, CompletionFn done) override;
  void Put(FileId file, std::uint64_t size, CompletionFn done) override;
  void Scrub(CompletionFn done) override { backing_->Scrub(std::move(done)); }
  void RecordBatchParts(bool on) override {
    StorageBackend::RecordBatchParts(on);
    backing_->RecordBatchParts(on);
  }

  bool Contains(FileId file) const override { return backing_->Contains(file); }
  std::uint64_t SizeOf(FileId file) const override { return backing_->SizeOf(file); }
  std::vector<FileId> StoredFiles() const override { return backing_->StoredFiles(); }
  BackendStats Stats() const override;
  LedgerTotals Ledger(SimTime now) const override { return backing_->Ledger(now); }

  const FileCache& cache() const { return cache_; }
  StorageBackend& backing() { return *backing_; }
  std::uint64_t pending_destages() const { return pending_destages_; }

 private:
  void DoPreload(std::span<const FileRecord> files) override { backing_->Preload(files); }
  SimTime DiskTime(std::uint64_t size) const;
  void AdmitAfterMiss(FileId file, std::uint64_t size);

  CacheConfig config_;
  std::unique_ptr<StorageBackend> backing_;
  FileCache cache_;
  std::uint64_t hits_ = 0;
  std::uint64_t misses_ = 0;
  std::uint64_t pending_destages_ = 0;
};

}  // namespace coldbench

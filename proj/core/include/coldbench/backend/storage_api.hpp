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
#include <functional>
#include <span>
#include <string>
#include <string_view>

#include "coldbench/backend/cost_ledger.hpp"
#include "coldbench/backend/trace.hpp"
#include "coldbench/data/dataset.hpp"
#include "coldbench/sim/simulator.hpp"

namespace coldbench {

// One file of a batch, kept only when the backend records batch parts.
struct PartRecord {
  FileId file_id = 0;
  SimTime completion_time = 0;
  std::uint64_t bytes = 0;
  bool ok = true;

  friend bool operator==(const PartRecord&, const PartRecord&) = default;
};

struct Completion {
  bool ok = true;
  std::string error;
  SimTime issue_time = 0;
  SimTime completion_time = 0;
  std::uint64_t bytes = 0;
  std::uint32_t file_count = 0;
  // Dollars charged by this operation.
  double cost_delta = 0.0;
  // Set by Deliver for single-file operations.
  FileId file_id = 0;
  std::vector<PartRecord> parts;
};

using CompletionFn = std::function<void(const Completion&)>;

struct BackendStats {
  std::uint64_t cache_hits = 0;
  std::uint64_t cache_misses = 0;
  std::uint64_t tape_mounts = 0;
  std::uint32_t max_mounted_tapes = 0;
  std::uint64_t cloud_gets = 0;
  std::uint64_t bytes_read = 0;
  std::uint64_t bytes_written = 0;

  BackendStats& operator+=(const BackendStats& other);
};

// "urgent" > "normal" > "low"; unknown labels rank as normal.
int PriorityRank(std::string_view priority);

/*
 * GET/PUT interface of a simulated storage system. Operations return immediately; the completion
 * callback fires as a simulator event at the completion time, also for failures (which complete
 * at issue time with ok = false). Backends only mutate state from inside event dispatch.
 */
class StorageBackend {
 public:
  StorageBackend(Simulator& sim, std::string name) : sim_(sim), name_(std::move(name)) {}
  virtual ~StorageBackend() = default;
  StorageBackend(const StorageBackend&) = delete;
  StorageBackend& operator=(const StorageBackend&) = delete;

  const std::string& name() const { return name_; }
  Simulator& simulator() const { return sim_; }

  // Makes files resident without charging time or retrieval cost. Throws std::logic_error when
  // called twice.
  void Preload(std::span<const FileRecord> files);
  bool preloaded() const { return preloaded_; }

  virtual void Get(FileId file, std::string_view priority, CompletionFn done) = 0;
  // Completes once, when the last file has been read. The default issues one Get per file.
  virtual void BatchGet(std::span<const FileId> files, std::string_view priority, CompletionFn done);
  virtual void Put(FileId file, std::uint64_t size, CompletionFn done) = 0;
  // Reads every stored file once.
  virtual void Scrub(CompletionFn done);

  virtual bool Contains(FileId file) const = 0;
  // Throws std::out_of_range for unknown files.
  virtual std::uint64_t SizeOf(FileId file) const = 0;
  virtual std::vector<FileId> StoredFiles() const = 0;

  virtual BackendStats Stats() const = 0;
  // Accrued cloud charges through `now`; zero for purely local systems.
  virtual LedgerTotals Ledger(SimTime now) const { (void)now; return {}; }

  void SetTrace(TraceSink* trace) { trace_ = trace; }

  // Batch completions carry one PartRecord per file. Off by default: scrubs touch every file.
  virtual void RecordBatchParts(bool on) { record_parts_ = on; }

 protected:
  virtual void DoPreload(std::span<const FileRecord> files) = 0;

  // Schedules `done` at c.completion_time and traces the operation.
  void Deliver(CompletionFn done, Completion c, std::string_view op, FileId file);
  void Fail(CompletionFn done, std::string error, std::string_view op, FileId file);

  Simulator& sim_;
  bool record_parts_ = false;

 private:
  std::string name_;
  TraceSink* trace_ = nullptr;
  bool preloaded_ = false;
};

// Collects per-file completions of a fanned-out batch and fires one aggregate completion.
class BatchJoin {
 public:
  static std::function<void(const Completion&)> Make(std::size_t parts, SimTime issue_time, CompletionFn done,
                                                     bool record_parts = false);
};

}  // namespace coldbench

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
#include <optional>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "coldbench/backend/storage_api.hpp"
#include "coldbench/sim/rng.hpp"

namespace coldbench {

/*
 * Robotic tape library. Defaults approximate an LTO-class library; nothing in the benchmark's
 * conclusions should hinge on them.
 */
struct TapeConfig {
  enum class UnloadPolicy { kImmediate, kLazy };
  enum class Scheduler { kFifo, kPriority, kTapeBatched };
  enum class Placement { kMissionContiguous, kRandom };

  std::uint32_t drive_count = 4;
  SimTime robot_exchange = 15 * sim_time::kSecond;
  SimTime load_thread = 20 * sim_time::kSecond;
  // Seeking across the whole tape; shorter seeks scale linearly with distance.
  SimTime max_seek = 60 * sim_time::kSecond;
  double transfer_rate_mb_s = 250.0;
  UnloadPolicy unload_policy = UnloadPolicy::kLazy;
  SimTime idle_unload_timeout = 5 * sim_time::kMinute;
  Scheduler scheduler = Scheduler::kFifo;
  std::uint64_t tape_capacity_bytes = 12'000'000'000'000ULL;
  Placement placement = Placement::kMissionContiguous;

  void Validate() const;
};

std::string_view ToString(TapeConfig::Scheduler scheduler);
TapeConfig::Scheduler ParseTapeScheduler(std::string_view text);
TapeConfig::UnloadPolicy ParseUnloadPolicy(std::string_view text);
TapeConfig::Placement ParsePlacement(std::string_view text);

class TapeLibrary final : public StorageBackend {
 public:
  struct Location {
    std::uint32_t tape = 0;
    std::uint64_t offset = 0;
    std::uint64_t size = 0;
  };

  TapeLibrary(Simulator& sim, TapeConfig config, std::uint64_t seed = 0, std::string name = "tape");

  void Get(FileId file, std::string_view priority, CompletionFn done) override;
  // Enqueues every file at once so the scheduler can group them by tape.
  void BatchGet(std::span<const FileId> files, std::string_view priority, CompletionFn done) override;
  void Put(FileId file, std::uint64_t size, CompletionFn done) override;

  bool Contains(FileId file) const override { return locations_.count(file) != 0; }
  std::uint64_t SizeOf(FileId file) const override;
  std::vector<FileId> StoredFiles() const override;
  BackendStats Stats() const override;

  // Places a file at the end of `tape` (for custom layouts). Throws if the id exists.
  void PlaceFile(FileId file, std::uint64_t size, std::uint32_t tape);
  std::optional<Location> Locate(FileId file) const;

  std::uint64_t mount_count() const { return mounts_; }
  std::uint32_t mounted_tapes() const;
  std::uint32_t max_mounted_tapes() const { return max_mounted_; }
  std::size_t tape_count() const { return tape_fill_.size(); }
  std::size_t queued_jobs() const { return queue_.size(); }
  const TapeConfig& config() const { return config_; }

  // Pure service time for a job on a drive in the given state; exposed for tests.
  SimTime ServiceTime(bool needs_mount, std::uint64_t head_offset, const Location& target) const;

 private:
  struct Job {
    std::uint64_t seq = 0;
    FileId file = 0;
    Location location;
    int priority = 1;
    bool write = false;
    SimTime enqueued = 0;
    std::function<void(SimTime)> on_done;
  };
  struct Drive {
    std::optional<std::uint32_t> tape;
    bool busy = false;
    std::uint64_t head = 0;
    SimTime last_used = 0;
    std::optional<EventHandle> unload_event;
  };

  void DoPreload(std::span<const FileRecord> files) override;
  void Enqueue(FileId file, const Location& location, int priority, bool write, std::function<void(SimTime)> on_done);
  void Dispatch();
  std::list<Job>::iterator PickJob();
  std::size_t PickDrive(const Job& job, const std::vector<std::size_t>& idle_drives) const;
  void StartJob(std::size_t drive_index, Job job);
  void FinishJob(std::size_t drive_index, Job job, SimTime done_at);
  std::uint32_t NewTape();
  std::uint32_t AppendTape(std::uint32_t mission, std::uint64_t size);

  TapeConfig config_;
  RngStream rng_;
  std::vector<Drive> drives_;
  std::list<Job> queue_;
  std::unordered_map<FileId, Location> locations_;
  std::vector<std::uint64_t> tape_fill_;
  std::unordered_map<std::uint32_t, std::uint32_t> mission_tape_;
  std::optional<std::uint32_t> ingest_tape_;
  std::uint64_t next_seq_ = 0;
  std::uint64_t mounts_ = 0;
  std::uint32_t max_mounted_ = 0;
  std::uint64_t bytes_read_ = 0;
  std::uint64_t bytes_written_ = 0;
};

}  // namespace coldbench

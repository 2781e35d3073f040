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

#include "coldbench/backend/tape.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <unordered_set>

#include <fmt/format.h>

#include "coldbench/units.hpp"

namespace coldbench {

void TapeConfig::Validate() const {
  if (drive_count < 1) throw std::invalid_argument("tape library needs at least one drive");
  if (robot_exchange <= 0 || load_thread <= 0 || max_seek <= 0) {
    throw std::invalid_argument("tape exchange, load and seek durations must be > 0");
  }
  if (!(transfer_rate_mb_s > 0.0)) throw std::invalid_argument("tape transfer rate must be > 0");
  if (idle_unload_timeout <= 0) throw std::invalid_argument("tape idle unload timeout must be > 0");
  if (tape_capacity_bytes == 0) throw std::invalid_argument("tape capacity must be > 0");
}

std::string_view ToString(TapeConfig::Scheduler scheduler) {
  switch (scheduler) {
    case TapeConfig::Scheduler::kFifo: return "fifo";
    case TapeConfig::Scheduler::kPriority: return "priority";
    case TapeConfig::Scheduler::kTapeBatched: return "tape-batched";
  }
  return "fifo";
}

TapeConfig::Scheduler ParseTapeScheduler(std::string_view text) {
  if (text == "fifo") return TapeConfig::Scheduler::kFifo;
  if (text == "priority") return TapeConfig::Scheduler::kPriority;
  if (text == "tape-batched") return TapeConfig::Scheduler::kTapeBatched;
  throw std::invalid_argument(fmt::format("unknown tape scheduler '{}' (fifo, priority, tape-batched)", text));
}

TapeConfig::UnloadPolicy ParseUnloadPolicy(std::string_view text) {
  if (text == "immediate") return TapeConfig::UnloadPolicy::kImmediate;
  if (text == "lazy") return TapeConfig::UnloadPolicy::kLazy;
  throw std::invalid_argument(fmt::format("unknown unload policy '{}' (immediate, lazy)", text));
}

TapeConfig::Placement ParsePlacement(std::string_view text) {
  if (text == "mission-contiguous") return TapeConfig::Placement::kMissionContiguous;
  if (text == "random") return TapeConfig::Placement::kRandom;
  throw std::invalid_argument(fmt::format("unknown tape placement '{}' (mission-contiguous, random)", text));
}

TapeLibrary::TapeLibrary(Simulator& sim, TapeConfig config, std::uint64_t seed, std::string name)
    : StorageBackend(sim, std::move(name)), config_(config), rng_(seed, "backend/tape") {
  config_.Validate();
  drives_.resize(config_.drive_count);
}

std::uint64_t TapeLibrary::SizeOf(FileId file) const {
  const auto it = locations_.find(file);
  if (it == locations_.end()) throw std::out_of_range(fmt::format("file {} is not on tape", file));
  return it->second.size;
}

std::vector<FileId> TapeLibrary::StoredFiles() const {
  std::vector<FileId> files;
  files.reserve(locations_.size());
  for (const auto& [id, loc] : locations_) files.push_back(id);
  std::sort(files.begin(), files.end());
  return files;
}

BackendStats TapeLibrary::Stats() const {
  BackendStats stats;
  stats.tape_mounts = mounts_;
  stats.max_mounted_tapes = max_mounted_;
  stats.bytes_read = bytes_read_;
  stats.bytes_written = bytes_written_;
  return stats;
}

std::optional<TapeLibrary::Location> TapeLibrary::Locate(FileId file) const {
  const auto it = locations_.find(file);
  if (it == locations_.end()) return std::nullopt;
  return it->second;
}

std::uint32_t TapeLibrary::mounted_tapes() const {
  return static_cast<std::uint32_t>(
      std::count_if(drives_.begin(), drives_.end(), [](const Drive& d) { return d.tape.has_value(); }));
}

std::uint32_t TapeLibrary::NewTape() {
  tape_fill_.push_back(0);
  return static_cast<std::uint32_t>(tape_fill_.size() - 1);
}

void TapeLibrary::PlaceFile(FileId file, std::uint64_t size, std::uint32_t tape) {
  if (locations_.count(file) != 0) throw std::logic_error(fmt::format("file {} is already on tape", file));
  while (tape_fill_.size() <= tape) NewTape();
  locations_[file] = Location{tape, tape_fill_[tape], size};
  tape_fill_[tape] += size;
}

std::uint32_t TapeLibrary::AppendTape(std::uint32_t mission, std::uint64_t size) {
  const auto it = mission_tape_.find(mission);
  if (it != mission_tape_.end() && tape_fill_[it->second] + size <= config_.tape_capacity_bytes) {
    return it->second;
  }
  const std::uint32_t tape = NewTape();
  mission_tape_[mission] = tape;
  return tape;
}

void TapeLibrary::DoPreload(std::span<const FileRecord> files) {
  if (config_.placement == TapeConfig::Placement::kMissionContiguous) {
    for (const FileRecord& r : files) {
      PlaceFile(r.file_id, r.size_bytes, AppendTape(r.mission, r.size_bytes));
    }
    return;
  }
  // Random placement over as many tapes as the contiguous layout would use.
  std::unordered_map<std::uint32_t, std::pair<std::uint64_t, std::uint64_t>> per_mission;  // tapes, fill
  for (const FileRecord& r : files) {
    auto& [tapes, fill] = per_mission[r.mission];
    if (tapes == 0 || fill + r.size_bytes > config_.tape_capacity_bytes) {
      ++tapes;
      fill = 0;
    }
    fill += r.size_bytes;
  }
  std::uint64_t tape_count = 0;
  for (const auto& [mission, usage] : per_mission) tape_count += usage.first;
  const std::uint32_t first = static_cast<std::uint32_t>(tape_fill_.size());
  for (std::uint64_t i = 0; i < tape_count; ++i) NewTape();
  for (const FileRecord& r : files) {
    const auto start = static_cast<std::uint32_t>(rng_.UniformIndex(tape_count));
    std::optional<std::uint32_t> chosen;
    for (std::uint64_t probe = 0; probe < tape_count; ++probe) {
      const std::uint32_t tape = first + static_cast<std::uint32_t>((start + probe) % tape_count);
      if (tape_fill_[tape] + r.size_bytes <= config_.tape_capacity_bytes) {
        chosen = tape;
        break;
      }
    }
    PlaceFile(r.file_id, r.size_bytes, chosen ? *chosen : NewTape());
  }
}

SimTime TapeLibrary::ServiceTime(bool needs_mount, std::uint64_t head_offset, const Location& target) const {
  SimTime t = 0;
  std::uint64_t head = head_offset;
  if (needs_mount) {
    t += config_.robot_exchange + config_.load_thread;
    head = 0;
  }
  const double distance = static_cast<double>(target.offset > head ? target.offset - head : head - target.offset);
  const double seek_fraction = std::min(1.0, distance / static_cast<double>(config_.tape_capacity_bytes));
  t += static_cast<SimTime>(std::llround(seek_fraction * static_cast<double>(config_.max_seek)));
  t += sim_time::FromSeconds(static_cast<double>(target.size) / (config_.transfer_rate_mb_s * kBytesPerMB));
  return t;
}

void TapeLibrary::Enqueue(FileId file, const Location& location, int priority, bool write,
                          std::function<void(SimTime)> on_done) {
  Job job;
  job.seq = next_seq_++;
  job.file = file;
  job.location = location;
  job.priority = priority;
  job.write = write;
  job.enqueued = sim_.Now();
  job.on_done = std::move(on_done);
  queue_.push_back(std::move(job));
}

void TapeLibrary::Get(FileId file, std::string_view priority, CompletionFn done) {
  const auto location = Locate(file);
  if (!location) {
    Fail(std::move(done), fmt::format("file {} is not on tape", file), "get", file);
    return;
  }
  const SimTime issued = sim_.Now();
  Enqueue(file, *location, PriorityRank(priority), false,
          [this, done = std::move(done), file, issued, size = location->size](SimTime finished) mutable {
            Completion c;
            c.issue_time = issued;
            c.completion_time = finished;
            c.bytes = size;
            c.file_count = 1;
            Deliver(std::move(done), c, "get", file);
          });
  Dispatch();
}

void TapeLibrary::BatchGet(std::span<const FileId> files, std::string_view priority, CompletionFn done) {
  if (files.empty()) {
    StorageBackend::BatchGet(files, priority, std::move(done));
    return;
  }
  const SimTime issued = sim_.Now();
  auto join = BatchJoin::Make(files.size(), issued, std::move(done), record_parts_);
  for (FileId file : files) {
    const auto location = Locate(file);
    if (!location) {
      Fail(join, fmt::format("file {} is not on tape", file), "get", file);
      continue;
    }
    Enqueue(file, *location, PriorityRank(priority), false, [this, join, file, issued, size = location->size](SimTime finished) {
      Completion c;
      c.issue_time = issued;
      c.completion_time = finished;
      c.bytes = size;
      c.file_count = 1;
      Deliver(join, c, "get", file);
    });
  }
  Dispatch();
}

void TapeLibrary::Put(FileId file, std::uint64_t size, CompletionFn done) {
  if (Contains(file)) {
    Fail(std::move(done), fmt::format("file {} is already on tape", file), "put", file);
    return;
  }
  if (size == 0) {
    Fail(std::move(done), "cannot store an empty file", "put", file);
    return;
  }
  // Ingested files go to a dedicated append tape, independent of missions.
  if (!ingest_tape_ || tape_fill_[*ingest_tape_] + size > config_.tape_capacity_bytes) {
    ingest_tape_ = NewTape();
  }
  PlaceFile(file, size, *ingest_tape_);
  const Location location = *Locate(file);
  const SimTime issued = sim_.Now();
  Enqueue(file, location, PriorityRank("normal"), true,
          [this, done = std::move(done), file, issued, size](SimTime finished) mutable {
            Completion c;
            c.issue_time = issued;
            c.completion_time = finished;
            c.bytes = size;
            c.file_count = 1;
            Deliver(std::move(done), c, "put", file);
          });
  Dispatch();
}

std::list<TapeLibrary::Job>::iterator TapeLibrary::PickJob() {
  std::unordered_set<std::uint32_t> busy_tapes;
  std::unordered_set<std::uint32_t> idle_mounted;
  for (const Drive& d : drives_) {
    if (d.tape) (d.busy ? busy_tapes : idle_mounted).insert(*d.tape);
  }
  const auto better = [](const Job& a, const Job& b) {
    return a.priority != b.priority ? a.priority > b.priority : a.seq < b.seq;
  };

  auto best = queue_.end();
  auto best_mounted = queue_.end();
  for (auto it = queue_.begin(); it != queue_.end(); ++it) {
    if (busy_tapes.count(it->location.tape) != 0) continue;  // the tape is in use elsewhere
    if (config_.scheduler == TapeConfig::Scheduler::kFifo) return it;
    if (best == queue_.end() || better(*it, *best)) best = it;
    if (config_.scheduler == TapeConfig::Scheduler::kTapeBatched && idle_mounted.count(it->location.tape) != 0 &&
        (best_mounted == queue_.end() || better(*it, *best_mounted))) {
      best_mounted = it;
    }
  }
  return best_mounted != queue_.end() ? best_mounted : best;
}

std::size_t TapeLibrary::PickDrive(const Job& job, const std::vector<std::size_t>& idle_drives) const {
  for (std::size_t i : idle_drives) {
    if (drives_[i].tape == job.location.tape) return i;
  }
  for (std::size_t i : idle_drives) {
    if (!drives_[i].tape) return i;
  }
  std::size_t chosen = idle_drives.front();
  for (std::size_t i : idle_drives) {
    if (drives_[i].last_used < drives_[chosen].last_used) chosen = i;
  }
  return chosen;
}

void TapeLibrary::Dispatch() {
  while (!queue_.empty()) {
    std::vector<std::size_t> idle;
    for (std::size_t i = 0; i < drives_.size(); ++i) {
      if (!drives_[i].busy) idle.push_back(i);
    }
    if (idle.empty()) return;
    const auto it = PickJob();
    if (it == queue_.end()) return;
    Job job = std::move(*it);
    queue_.erase(it);
    const std::size_t drive = PickDrive(job, idle);
    StartJob(drive, std::move(job));
  }
}

void TapeLibrary::StartJob(std::size_t drive_index, Job job) {
  Drive& drive = drives_[drive_index];
  if (drive.unload_event) {
    sim_.Cancel(*drive.unload_event);
    drive.unload_event.reset();
  }
  const bool needs_mount = drive.tape != job.location.tape;
  const SimTime service = ServiceTime(needs_mount, drive.head, job.location);
  if (needs_mount) {
    drive.tape = job.location.tape;
    ++mounts_;
    max_mounted_ = std::max(max_mounted_, mounted_tapes());
  }
  drive.busy = true;
  drive.head = job.location.offset + job.location.size;
  const SimTime done_at = sim_.Now() + service;
  sim_.ScheduleAt(done_at, [this, drive_index, job = std::move(job), done_at]() mutable {
    FinishJob(drive_index, std::move(job), done_at);
  });
}

void TapeLibrary::FinishJob(std::size_t drive_index, Job job, SimTime done_at) {
  Drive& drive = drives_[drive_index];
  drive.busy = false;
  drive.last_used = done_at;
  (job.write ? bytes_written_ : bytes_read_) += job.location.size;
  if (config_.unload_policy == TapeConfig::UnloadPolicy::kImmediate) {
    drive.tape.reset();
    drive.head = 0;
  } else {
    drive.unload_event = sim_.ScheduleAfter(config_.idle_unload_timeout, [this, drive_index]() {
      Drive& d = drives_[drive_index];
      d.unload_event.reset();
      if (!d.busy) {
        d.tape.reset();
        d.head = 0;
      }
    });
  }
  job.on_done(done_at);
  Dispatch();
}

}  // namespace coldbench

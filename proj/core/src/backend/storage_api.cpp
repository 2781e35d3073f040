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

#include "coldbench/backend/storage_api.hpp"

#include <algorithm>
#include <memory>
#include <stdexcept>
#include <tuple>

namespace coldbench {

BackendStats& BackendStats::operator+=(const BackendStats& other) {
  cache_hits += other.cache_hits;
  cache_misses += other.cache_misses;
  tape_mounts += other.tape_mounts;
  max_mounted_tapes = std::max(max_mounted_tapes, other.max_mounted_tapes);
  cloud_gets += other.cloud_gets;
  bytes_read += other.bytes_read;
  bytes_written += other.bytes_written;
  return *this;
}

int PriorityRank(std::string_view priority) {
  if (priority == "urgent" || priority == "high") return 2;
  if (priority == "low") return 0;
  return 1;
}

void StorageBackend::Preload(std::span<const FileRecord> files) {
  if (preloaded_) {
    throw std::logic_error("backend '" + name_ + "' was already preloaded");
  }
  preloaded_ = true;
  DoPreload(files);
}

void StorageBackend::BatchGet(std::span<const FileId> files, std::string_view priority, CompletionFn done) {
  if (files.empty()) {
    Completion c;
    c.issue_time = c.completion_time = sim_.Now();
    Deliver(std::move(done), c, "batch_get", 0);
    return;
  }
  auto join = BatchJoin::Make(files.size(), sim_.Now(), std::move(done), record_parts_);
  for (FileId file : files) {
    Get(file, priority, join);
  }
}

void StorageBackend::Scrub(CompletionFn done) {
  const std::vector<FileId> files = StoredFiles();
  BatchGet(files, "low", std::move(done));
}

void StorageBackend::Deliver(CompletionFn done, Completion c, std::string_view op, FileId file) {
  c.file_id = file;
  sim_.ScheduleAt(c.completion_time, [this, done = std::move(done), c, op = std::string(op), file]() {
    if (trace_ != nullptr) {
      trace_->Record(c.completion_time, name_, c.ok ? op : "error", file, c.completion_time - c.issue_time,
                     c.cost_delta);
    }
    if (done) done(c);
  });
}

void StorageBackend::Fail(CompletionFn done, std::string error, std::string_view op, FileId file) {
  Completion c;
  c.ok = false;
  c.error = std::move(error);
  c.issue_time = c.completion_time = sim_.Now();
  Deliver(std::move(done), std::move(c), op, file);
}

std::function<void(const Completion&)> BatchJoin::Make(std::size_t parts, SimTime issue_time, CompletionFn done,
                                                      bool record_parts) {
  struct State {
    std::size_t remaining;
    bool record_parts;
    Completion total;
    CompletionFn done;
  };
  auto state = std::make_shared<State>();
  state->remaining = parts;
  state->record_parts = record_parts;
  state->total.issue_time = issue_time;
  state->total.completion_time = issue_time;
  state->done = std::move(done);
  return [state](const Completion& part) {
    Completion& total = state->total;
    if (!part.ok && total.ok) {
      total.ok = false;
      total.error = part.error;
    }
    total.bytes += part.bytes;
    total.file_count += std::max<std::uint32_t>(part.file_count, 1);
    total.cost_delta += part.cost_delta;
    total.completion_time = std::max(total.completion_time, part.completion_time);
    if (state->record_parts) {
      // Nested joins (a cache splitting a batch) hand over their own parts.
      if (part.parts.empty()) {
        total.parts.push_back({part.file_id, part.completion_time, part.bytes, part.ok});
      } else {
        total.parts.insert(total.parts.end(), part.parts.begin(), part.parts.end());
      }
    }
    if (--state->remaining == 0 && state->done) {
      std::sort(total.parts.begin(), total.parts.end(), [](const PartRecord& a, const PartRecord& b) {
        return std::tie(a.completion_time, a.file_id) < std::tie(b.completion_time, b.file_id);
      });
      state->done(total);
    }
  };
}

}  // namespace coldbench

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
#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "coldbench/backend/storage_api.hpp"
#include "coldbench/data/dataset.hpp"
#include "coldbench/workload/workload.hpp"

namespace coldbench {

struct SessionConfig {
  std::uint32_t session_count = 1;
  // Shared by all sessions; each session draws its own sub-stream and dynamic-file share.
  WorkloadSpec workload;
  // Leading requests of every session that are issued but not measured.
  std::uint64_t warmup_requests = 0;
  // PUT each session's whole dynamic share at stratified positions instead of by read_fraction.
  bool interleave_ingest = false;
  // Power users: with s > 0 the session_count * request_count requests are split across sessions
  // by Zipf(s) over session index instead of evenly. 0 keeps every session at request_count.
  double load_skew_s = 0.0;
  // Also keep one sub-record per file of each measured batch GET.
  bool per_file_records = false;

  void Validate() const;
};

struct Measurement {
  std::uint64_t request_id = 0;
  std::uint32_t session = 0;
  Op op = Op::kGet;
  std::string priority;
  SimTime issue_time = 0;
  SimTime completion_time = 0;
  std::uint64_t bytes = 0;
  std::uint32_t file_count = 0;
  double cost_delta = 0.0;
  bool ok = true;
  std::string error;

  SimTime latency() const { return completion_time - issue_time; }
  friend bool operator==(const Measurement&, const Measurement&) = default;
};

// One file of a measured batch GET. Percentiles use the batch-level Measurement only.
struct BatchFileRecord {
  std::uint64_t request_id = 0;
  std::uint32_t session = 0;
  FileId file_id = 0;
  SimTime issue_time = 0;
  SimTime completion_time = 0;
  std::uint64_t bytes = 0;
  bool ok = true;

  friend bool operator==(const BatchFileRecord&, const BatchFileRecord&) = default;
};

struct RunResult {
  // Sorted by (issue_time, session, request_id).
  std::vector<Measurement> measurements;
  // Empty unless SessionConfig::per_file_records; sorted like measurements, then by completion.
  std::vector<BatchFileRecord> batch_files;
  // Latest completion of any request, warmups included. Storage accrues until here.
  SimTime end_time = 0;
  std::uint64_t issued_requests = 0;
  std::vector<std::string> warnings;
};

// Loads the manifest's static set into the backend, free of time and retrieval cost.
void Preload(StorageBackend& backend, const DatasetManifest& manifest);

// Requests per session under load_skew_s; largest-remainder rounding keeps the total exact.
std::vector<std::uint64_t> SessionRequestCounts(const SessionConfig& sessions);

/*
 * Runs every session's request stream against the backend on its simulator's virtual clock.
 * Closed-loop sessions keep one request outstanding and issue the next think_time after each
 * completion; open-loop sessions issue at their generated offsets. Deterministic for a given
 * backend state, manifest and config. Backend errors become failed measurements.
 *
 * Events scheduled by the backend itself (idle unloads, periodic scrubs) are drained before
 * returning.
 */
RunResult RunBenchmark(StorageBackend& backend, const DatasetManifest& manifest, const SessionConfig& sessions);

// One row per measurement:
// request_id,session,op,priority,issue_time_us,completion_time_us,latency_us,bytes,file_count,cost,ok,error
void WriteMeasurementsCsv(std::ostream& out, const std::vector<Measurement>& measurements);
void WriteMeasurementsCsv(const std::filesystem::path& path, const std::vector<Measurement>& measurements);
void WriteBatchFilesCsv(std::ostream& out, const std::vector<BatchFileRecord>& records);
void WriteBatchFilesCsv(const std::filesystem::path& path, const std::vector<BatchFileRecord>& records);

}  // namespace coldbench

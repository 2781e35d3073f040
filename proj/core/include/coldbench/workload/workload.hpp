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
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "coldbench/data/dataset.hpp"
#include "coldbench/sim/time.hpp"

namespace coldbench {

enum class Op { kGet, kPut };
std::string_view ToString(Op op);
Op ParseOp(std::string_view text);

struct BatchSize {
  std::uint32_t min = 2;
  std::uint32_t max = 16;
  friend bool operator==(const BatchSize&, const BatchSize&) = default;
};

struct PriorityClass {
  std::string name;
  double weight = 0.0;
  friend bool operator==(const PriorityClass&, const PriorityClass&) = default;
};

std::vector<PriorityClass> DefaultPriorities();

struct Arrival {
  enum class Kind { kClosed, kOpen };
  Kind kind = Kind::kClosed;
  // Closed loop: pause between a completion and the session's next request.
  SimTime think_time = 0;
  // Open loop: Poisson arrival rate per session.
  double rate_per_s = 1.0;
  friend bool operator==(const Arrival&, const Arrival&) = default;
};

// Restricts read targets to files with min_bytes <= size < max_bytes.
struct SizeFilter {
  std::uint64_t min_bytes = 0;
  std::optional<std::uint64_t> max_bytes;
  bool Accepts(std::uint64_t size) const { return size >= min_bytes && (!max_bytes || size < *max_bytes); }
  friend bool operator==(const SizeFilter&, const SizeFilter&) = default;
};

struct WorkloadSpec {
  std::uint64_t request_count = 1000;
  double read_fraction = 1.0;
  double batch_fraction = 0.0;
  BatchSize batch_size;
  std::vector<PriorityClass> priorities = DefaultPriorities();
  // Zipf exponent over missions for choosing a read target.
  double access_skew_s = 1.0;
  // Probability that a read targets the newest decile of its mission's files.
  double temporal_window = 0.5;
  // Share of static files that are never read.
  double never_read_fraction = 0.0;
  Arrival arrival;
  SizeFilter target_size;
  std::uint64_t seed = 0;

  // Throws std::invalid_argument.
  void Validate() const;
  friend bool operator==(const WorkloadSpec&, const WorkloadSpec&) = default;
};

struct Request {
  std::uint64_t request_id = 0;
  Op op = Op::kGet;
  std::vector<FileId> file_ids;
  std::string priority;
  // Open loop: microseconds from workload start. Closed loop: ordinal position.
  SimTime issue_offset = 0;

  bool IsBatch() const { return file_ids.size() > 1; }
  friend bool operator==(const Request&, const Request&) = default;
};

// Which slice of a multi-session run a stream belongs to. Each session draws from its own RNG
// sub-stream and ingests its own share of the dynamic set.
struct StreamContext {
  std::uint32_t session = 0;
  std::uint32_t session_count = 1;
};

// Static file ids reserved as never-read, sorted. Independent of the session.
std::vector<FileId> NeverReadPool(const DatasetManifest& manifest, const WorkloadSpec& spec);

/*
 * Request stream of exactly spec.request_count requests. Each slot is a GET with probability
 * read_fraction, otherwise a PUT of the session's next un-ingested dynamic file; once those are
 * used up, write slots become reads.
 *
 * A read picks a mission by Zipf(access_skew_s) over missions that have readable files, then a
 * file inside it: with probability temporal_window from the newest decile, otherwise from the
 * rest. Batch reads take a contiguous run of the mission's files starting at that file.
 */
std::vector<Request> GenerateWorkload(const DatasetManifest& manifest, const WorkloadSpec& spec,
                                      StreamContext context = {});

struct IngestStream {
  std::vector<Request> requests;
  std::vector<std::string> warnings;
};

// Like GenerateWorkload, but every dynamic file of the session is PUT exactly once, at stratified
// positions whose density follows the write share. The stream grows beyond request_count if the
// write share is too small to fit all PUTs. A zero write share leaves the dynamic set unused and
// reports a warning. Throws std::invalid_argument if the manifest has no dynamic files.
IngestStream InterleaveIngest(const DatasetManifest& manifest, const WorkloadSpec& spec, StreamContext context = {});

}  // namespace coldbench

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
#include <string_view>
#include <vector>

#include "coldbench/data/size_distribution.hpp"

namespace coldbench {

using FileId = std::uint64_t;

enum class FileSet { kStatic, kDynamic };
std::string_view ToString(FileSet set);
FileSet ParseFileSet(std::string_view text);

struct DatasetSpec {
  std::uint64_t total_files = 1;
  // Leading share of files populated before the run; the rest are ingested during it.
  double static_fraction = 1.0;
  FileSizeDistribution distribution = FileSizeDistribution::Fixed(kMiB);
  std::uint32_t mission_count = 1;
  double mission_skew_s = 0.0;
  std::uint64_t seed = 0;

  void Validate() const;
  std::uint64_t StaticCount() const;
  friend bool operator==(const DatasetSpec&, const DatasetSpec&) = default;
};

struct FileRecord {
  FileId file_id = 0;
  std::uint64_t size_bytes = 1;
  std::uint32_t mission = 0;
  FileSet set = FileSet::kStatic;

  friend bool operator==(const FileRecord&, const FileRecord&) = default;
};

struct ManifestSummary {
  std::uint64_t file_count = 0;
  std::uint64_t static_count = 0;
  std::uint64_t dynamic_count = 0;
  std::uint64_t total_bytes = 0;
  std::uint64_t max_size = 0;
  double mean_size = 0.0;
  // Histogram distributions only: files per bucket.
  std::vector<std::uint64_t> bucket_counts;
  std::vector<std::uint64_t> mission_counts;

  friend bool operator==(const ManifestSummary&, const ManifestSummary&) = default;
};

struct DatasetManifest {
  DatasetSpec spec;
  std::vector<FileRecord> records;
  ManifestSummary summary;

  std::uint64_t StaticBytes() const;
};

ManifestSummary Summarize(const DatasetSpec& spec, const std::vector<FileRecord>& records);

// Deterministic in spec.seed. Ids are 0..total-1; the first StaticCount() files are static.
// Missions follow Zipf(mission_skew_s) over mission_count. Throws std::invalid_argument.
DatasetManifest GenerateDataset(const DatasetSpec& spec);

// Spec with `target_file_count` files whose expected bucket shares equal the source weights.
// Throws std::invalid_argument if the target is below the number of buckets.
DatasetSpec ScaleDistribution(const FileSizeDistribution& dist, std::uint64_t target_file_count);
std::vector<double> ExpectedBucketCounts(const DatasetSpec& spec);

}  // namespace coldbench

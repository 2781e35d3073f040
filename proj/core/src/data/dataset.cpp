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

#include "coldbench/data/dataset.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include <fmt/format.h>

#include "coldbench/sim/zipf.hpp"

namespace coldbench {

std::string_view ToString(FileSet set) { return set == FileSet::kStatic ? "static" : "dynamic"; }

FileSet ParseFileSet(std::string_view text) {
  if (text == "static") return FileSet::kStatic;
  if (text == "dynamic") return FileSet::kDynamic;
  throw std::invalid_argument(fmt::format("unknown file set '{}'", text));
}

void DatasetSpec::Validate() const {
  if (total_files == 0) {
    throw std::invalid_argument("dataset needs at least one file");
  }
  if (!(static_fraction >= 0.0 && static_fraction <= 1.0)) {
    throw std::invalid_argument("static_fraction must lie in [0, 1]");
  }
  if (mission_count == 0) {
    throw std::invalid_argument("dataset needs at least one mission");
  }
  if (!(mission_skew_s >= 0.0) || !std::isfinite(mission_skew_s)) {
    throw std::invalid_argument("mission skew must be finite and >= 0");
  }
  distribution.Validate();
}

std::uint64_t DatasetSpec::StaticCount() const {
  // The epsilon keeps 0.7 * 10 at 7 rather than 8.
  const double exact = static_fraction * static_cast<double>(total_files);
  const auto count = static_cast<std::uint64_t>(std::ceil(exact - 1e-9 * std::max(1.0, exact)));
  return std::min(count, total_files);
}

std::uint64_t DatasetManifest::StaticBytes() const {
  std::uint64_t bytes = 0;
  for (const FileRecord& r : records) {
    if (r.set == FileSet::kStatic) bytes += r.size_bytes;
  }
  return bytes;
}

ManifestSummary Summarize(const DatasetSpec& spec, const std::vector<FileRecord>& records) {
  ManifestSummary s;
  s.file_count = records.size();
  const auto& dist = spec.distribution;
  if (dist.kind() == FileSizeDistribution::Kind::kHistogram) {
    s.bucket_counts.assign(dist.buckets().size(), 0);
  }
  s.mission_counts.assign(spec.mission_count, 0);
  for (const FileRecord& r : records) {
    (r.set == FileSet::kStatic ? s.static_count : s.dynamic_count) += 1;
    s.total_bytes += r.size_bytes;
    s.max_size = std::max(s.max_size, r.size_bytes);
    if (!s.bucket_counts.empty()) {
      if (const auto bucket = dist.BucketOf(r.size_bytes)) {
        ++s.bucket_counts[*bucket];
      }
    }
    if (r.mission < s.mission_counts.size()) {
      ++s.mission_counts[r.mission];
    }
  }
  s.mean_size = s.file_count == 0 ? 0.0 : static_cast<double>(s.total_bytes) / static_cast<double>(s.file_count);
  return s;
}

DatasetManifest GenerateDataset(const DatasetSpec& spec) {
  spec.Validate();
  RngStream sizes(spec.seed, "datagen/size");
  RngStream missions(spec.seed, "datagen/mission");
  const ZipfDistribution mission_law(spec.mission_count, spec.mission_skew_s);
  const std::uint64_t static_count = spec.StaticCount();

  DatasetManifest manifest;
  manifest.spec = spec;
  manifest.records.reserve(spec.total_files);
  for (std::uint64_t i = 0; i < spec.total_files; ++i) {
    FileRecord record;
    record.file_id = i;
    record.size_bytes = spec.distribution.Sample(sizes);
    record.mission = static_cast<std::uint32_t>(mission_law.Sample(missions));
    record.set = i < static_count ? FileSet::kStatic : FileSet::kDynamic;
    manifest.records.push_back(record);
  }
  manifest.summary = Summarize(spec, manifest.records);
  return manifest;
}

DatasetSpec ScaleDistribution(const FileSizeDistribution& dist, std::uint64_t target_file_count) {
  dist.Validate();
  const std::uint64_t non_empty =
      dist.kind() == FileSizeDistribution::Kind::kHistogram ? dist.buckets().size() : 1;
  if (target_file_count < non_empty) {
    throw std::invalid_argument(
        fmt::format("cannot scale a {}-bucket distribution to {} files", non_empty, target_file_count));
  }
  DatasetSpec spec;
  spec.total_files = target_file_count;
  spec.distribution = dist;
  return spec;
}

std::vector<double> ExpectedBucketCounts(const DatasetSpec& spec) {
  std::vector<double> expected = spec.distribution.BucketProbabilities();
  for (double& e : expected) {
    e *= static_cast<double>(spec.total_files);
  }
  return expected;
}

}  // namespace coldbench

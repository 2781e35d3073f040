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

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "coldbench/sim/rng.hpp"
#include "coldbench/units.hpp"

namespace coldbench {

// Half-open byte range [lo, hi). hi is unset for the open-ended top bucket.
struct SizeBucket {
  std::uint64_t lo_bytes = 0;
  std::optional<std::uint64_t> hi_bytes;
  double weight = 0.0;

  friend bool operator==(const SizeBucket&, const SizeBucket&) = default;
};

inline constexpr std::uint64_t kDefaultOpenBucketCap = 4 * kGiB;
inline constexpr std::uint64_t kSmallestGeneratedFile = kKiB;

/*
 * File-size law. Histograms pick a bucket with probability weight / sum(weights) and then draw
 * log-uniformly inside it, which keeps the small-file skew inside wide buckets. The open top
 * bucket is capped at `open_bucket_cap`.
 */
class FileSizeDistribution {
 public:
  enum class Kind { kHistogram, kLognormal, kFixed };

  static FileSizeDistribution Histogram(std::vector<SizeBucket> buckets,
                                        std::uint64_t open_bucket_cap = kDefaultOpenBucketCap);
  // mu and sigma of ln(bytes).
  static FileSizeDistribution Lognormal(double mu, double sigma);
  static FileSizeDistribution Fixed(std::uint64_t bytes);

  Kind kind() const { return kind_; }
  const std::vector<SizeBucket>& buckets() const { return buckets_; }
  std::uint64_t open_bucket_cap() const { return open_bucket_cap_; }
  double mu() const { return mu_; }
  double sigma() const { return sigma_; }
  std::uint64_t fixed_bytes() const { return fixed_bytes_; }

  // Throws std::invalid_argument for overlapping/unsorted buckets, non-positive weights, etc.
  void Validate() const;

  std::uint64_t Sample(RngStream& rng) const;

  // Upper bound (exclusive) of a histogram bucket, substituting the cap for the open bucket.
  std::uint64_t BucketUpper(std::size_t index) const;
  // Index of the bucket containing `size`, or nullopt if outside every bucket.
  std::optional<std::size_t> BucketOf(std::uint64_t size) const;
  // weight_i / sum(weights). Empty for non-histogram kinds.
  std::vector<double> BucketProbabilities() const;
  std::string BucketLabel(std::size_t index) const;

  friend bool operator==(const FileSizeDistribution&, const FileSizeDistribution&) = default;

 private:
  Kind kind_ = Kind::kFixed;
  std::vector<SizeBucket> buckets_;
  std::vector<double> cumulative_;
  std::uint64_t open_bucket_cap_ = kDefaultOpenBucketCap;
  double mu_ = 0.0;
  double sigma_ = 0.0;
  std::uint64_t fixed_bytes_ = 1;
};

// File counts per size bucket of the main product library of a multi-mission earth observation
// archive: 0-8, 8-16, ..., 1024-2048, 2048+ MB. The first bucket starts at 1 KiB.
FileSizeDistribution DsdaMainDistribution(std::uint64_t open_bucket_cap = kDefaultOpenBucketCap);

// Known preset names: "dsda-main". Throws std::out_of_range otherwise.
FileSizeDistribution DistributionPreset(std::string_view name, std::uint64_t open_bucket_cap = kDefaultOpenBucketCap);

}  // namespace coldbench

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

#include "coldbench/data/size_distribution.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include <fmt/format.h>

namespace coldbench {

FileSizeDistribution FileSizeDistribution::Histogram(std::vector<SizeBucket> buckets, std::uint64_t open_bucket_cap) {
  FileSizeDistribution dist;
  dist.kind_ = Kind::kHistogram;
  dist.buckets_ = std::move(buckets);
  dist.open_bucket_cap_ = open_bucket_cap;
  dist.Validate();
  double acc = 0.0;
  for (const SizeBucket& bucket : dist.buckets_) {
    acc += bucket.weight;
    dist.cumulative_.push_back(acc);
  }
  return dist;
}

FileSizeDistribution FileSizeDistribution::Lognormal(double mu, double sigma) {
  FileSizeDistribution dist;
  dist.kind_ = Kind::kLognormal;
  dist.mu_ = mu;
  dist.sigma_ = sigma;
  dist.Validate();
  return dist;
}

FileSizeDistribution FileSizeDistribution::Fixed(std::uint64_t bytes) {
  FileSizeDistribution dist;
  dist.kind_ = Kind::kFixed;
  dist.fixed_bytes_ = bytes;
  dist.Validate();
  return dist;
}

void FileSizeDistribution::Validate() const {
  switch (kind_) {
    case Kind::kFixed:
      if (fixed_bytes_ < 1) {
        throw std::invalid_argument("fixed file size must be >= 1 byte");
      }
      return;
    case Kind::kLognormal:
      if (!std::isfinite(mu_) || !std::isfinite(sigma_) || sigma_ < 0.0) {
        throw std::invalid_argument("lognormal needs finite mu and sigma >= 0");
      }
      return;
    case Kind::kHistogram:
      break;
  }
  if (buckets_.empty()) {
    throw std::invalid_argument("histogram needs at least one bucket");
  }
  for (std::size_t i = 0; i < buckets_.size(); ++i) {
    const SizeBucket& b = buckets_[i];
    if (!(b.weight > 0.0) || !std::isfinite(b.weight)) {
      throw std::invalid_argument(fmt::format("bucket {} weight must be > 0", i));
    }
    if (b.lo_bytes < 1) {
      throw std::invalid_argument(fmt::format("bucket {} must start at >= 1 byte", i));
    }
    if (!b.hi_bytes && i + 1 != buckets_.size()) {
      throw std::invalid_argument("only the last bucket may be open-ended");
    }
    if (BucketUpper(i) <= b.lo_bytes) {
      throw std::invalid_argument(fmt::format("bucket {} is empty or inverted", i));
    }
    if (i > 0 && b.lo_bytes < BucketUpper(i - 1)) {
      throw std::invalid_argument(fmt::format("bucket {} overlaps or precedes bucket {}", i, i - 1));
    }
  }
}

std::uint64_t FileSizeDistribution::BucketUpper(std::size_t index) const {
  const SizeBucket& b = buckets_.at(index);
  return b.hi_bytes ? *b.hi_bytes : open_bucket_cap_;
}

std::optional<std::size_t> FileSizeDistribution::BucketOf(std::uint64_t size) const {
  for (std::size_t i = 0; i < buckets_.size(); ++i) {
    if (size >= buckets_[i].lo_bytes && size < BucketUpper(i)) {
      return i;
    }
  }
  return std::nullopt;
}

std::vector<double> FileSizeDistribution::BucketProbabilities() const {
  std::vector<double> probs;
  if (kind_ != Kind::kHistogram) {
    return probs;
  }
  double total = 0.0;
  for (const SizeBucket& b : buckets_) total += b.weight;
  for (const SizeBucket& b : buckets_) probs.push_back(b.weight / total);
  return probs;
}

std::string FileSizeDistribution::BucketLabel(std::size_t index) const {
  const SizeBucket& b = buckets_.at(index);
  if (!b.hi_bytes) {
    return fmt::format("{}+", FormatBytes(b.lo_bytes));
  }
  return fmt::format("{}-{}", FormatBytes(b.lo_bytes), FormatBytes(*b.hi_bytes));
}

std::uint64_t FileSizeDistribution::Sample(RngStream& rng) const {
  switch (kind_) {
    case Kind::kFixed:
      return fixed_bytes_;
    case Kind::kLognormal: {
      const double value = std::exp(mu_ + sigma_ * rng.Normal());
      if (!(value >= 1.0)) return 1;
      if (value >= 1.8e19) return std::numeric_limits<std::uint64_t>::max();
      return static_cast<std::uint64_t>(value);
    }
    case Kind::kHistogram:
      break;
  }
  const double u = rng.Uniform01() * cumulative_.back();
  const auto it = std::upper_bound(cumulative_.begin(), cumulative_.end(), u);
  const std::size_t index = std::min(static_cast<std::size_t>(it - cumulative_.begin()), buckets_.size() - 1);
  const std::uint64_t lo = buckets_[index].lo_bytes;
  const std::uint64_t hi = BucketUpper(index);
  const double log_lo = std::log(static_cast<double>(lo));
  const double log_hi = std::log(static_cast<double>(hi));
  const double drawn = std::exp(log_lo + rng.Uniform01() * (log_hi - log_lo));
  const auto size = static_cast<std::uint64_t>(drawn);
  return std::clamp(size, lo, hi - 1);
}

FileSizeDistribution DsdaMainDistribution(std::uint64_t open_bucket_cap) {
  constexpr double kCounts[] = {77'540'744, 4'719'466, 2'387'125, 2'095'864, 2'748'315,
                                1'616'620,  1'991'281, 993'066,   1'586'496, 184'138};
  std::vector<SizeBucket> buckets;
  buckets.push_back({kSmallestGeneratedFile, 8 * kMiB, kCounts[0]});
  std::uint64_t lo = 8 * kMiB;
  for (int i = 1; i < 9; ++i) {
    buckets.push_back({lo, 2 * lo, kCounts[i]});
    lo *= 2;
  }
  buckets.push_back({lo, std::nullopt, kCounts[9]});
  return FileSizeDistribution::Histogram(std::move(buckets), open_bucket_cap);
}

FileSizeDistribution DistributionPreset(std::string_view name, std::uint64_t open_bucket_cap) {
  if (name == "dsda-main") {
    return DsdaMainDistribution(open_bucket_cap);
  }
  throw std::out_of_range(fmt::format("unknown size distribution preset '{}' (known: dsda-main)", name));
}

}  // namespace coldbench

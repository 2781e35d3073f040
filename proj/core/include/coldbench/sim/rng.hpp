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
#include <random>
#include <string>
#include <string_view>

namespace coldbench {

/*
 * Named, seedable random stream. The engine is std::mt19937_64, whose output sequence is fixed
 * by the C++ standard; all distributions on top of it are implemented here rather than taken from
 * <random>, because the standard distributions are implementation-defined. Together this makes
 * (seed, stream_id) produce the same draws on every conforming platform.
 *
 * Each module draws from its own stream so that changing how many numbers one module consumes
 * does not shift the draws of another.
 */
class RngStream {
 public:
  RngStream(std::uint64_t seed, std::string_view stream_id);

  // Derives an independent stream; equivalent to RngStream(seed, stream_id + "/" + label).
  RngStream Substream(std::string_view label) const;

  std::uint64_t NextU64() { return engine_(); }
  // Uniform in [0, 1) with 53 bits of resolution.
  double Uniform01();
  double Uniform(double lo, double hi) { return lo + (hi - lo) * Uniform01(); }
  // Uniform integer in [0, n). n must be positive.
  std::uint64_t UniformIndex(std::uint64_t n);
  // Uniform integer in [lo, hi], inclusive.
  std::uint64_t UniformInt(std::uint64_t lo, std::uint64_t hi);
  bool Bernoulli(double p) { return Uniform01() < p; }
  // Standard normal via Box-Muller.
  double Normal();
  double Exponential(double rate);

  std::uint64_t seed() const { return seed_; }
  const std::string& stream_id() const { return stream_id_; }

 private:
  std::uint64_t seed_;
  std::string stream_id_;
  std::mt19937_64 engine_;
  std::optional<double> spare_normal_;
};

// Seed mixing used to derive per-stream engine seeds: splitmix64 over seed ^ fnv1a(stream_id).
std::uint64_t DeriveStreamSeed(std::uint64_t seed, std::string_view stream_id);

}  // namespace coldbench

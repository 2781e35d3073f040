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

#include "coldbench/sim/rng.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace coldbench {
namespace {

std::uint64_t Fnv1a64(std::string_view text) {
  std::uint64_t hash = 0xcbf29ce484222325ULL;
  for (const char c : text) {
    hash ^= static_cast<unsigned char>(c);
    hash *= 0x100000001b3ULL;
  }
  return hash;
}

std::uint64_t SplitMix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

}  // namespace

std::uint64_t DeriveStreamSeed(std::uint64_t seed, std::string_view stream_id) {
  return SplitMix64(seed ^ Fnv1a64(stream_id));
}

RngStream::RngStream(std::uint64_t seed, std::string_view stream_id)
    : seed_(seed), stream_id_(stream_id), engine_(DeriveStreamSeed(seed, stream_id)) {}

RngStream RngStream::Substream(std::string_view label) const {
  std::string id = stream_id_;
  id += '/';
  id += label;
  return RngStream(seed_, id);
}

double RngStream::Uniform01() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

std::uint64_t RngStream::UniformIndex(std::uint64_t n) {
  if (n == 0) {
    throw std::invalid_argument("UniformIndex requires n > 0");
  }
  // Rejection sampling keeps the result unbiased for any n.
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % n;
  std::uint64_t x = engine_();
  while (x >= limit) {
    x = engine_();
  }
  return x % n;
}

std::uint64_t RngStream::UniformInt(std::uint64_t lo, std::uint64_t hi) {
  if (hi < lo) {
    throw std::invalid_argument("UniformInt requires lo <= hi");
  }
  if (lo == 0 && hi == std::numeric_limits<std::uint64_t>::max()) {
    return engine_();
  }
  return lo + UniformIndex(hi - lo + 1);
}

double RngStream::Normal() {
  if (spare_normal_) {
    const double value = *spare_normal_;
    spare_normal_.reset();
    return value;
  }
  double u1 = Uniform01();
  while (u1 <= 0.0) {
    u1 = Uniform01();
  }
  const double u2 = Uniform01();
  const double radius = std::sqrt(-2.0 * std::log(u1));
  const double angle = 2.0 * std::numbers::pi * u2;
  spare_normal_ = radius * std::sin(angle);
  return radius * std::cos(angle);
}

double RngStream::Exponential(double rate) {
  if (!(rate > 0.0)) {
    throw std::invalid_argument("exponential rate must be positive");
  }
  // 1 - U lies in (0, 1], so the log is finite.
  return -std::log(1.0 - Uniform01()) / rate;
}

}  // namespace coldbench

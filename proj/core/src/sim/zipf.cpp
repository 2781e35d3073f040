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

#include "coldbench/sim/zipf.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace coldbench {

ZipfDistribution::ZipfDistribution(std::size_t n, double s) : s_(s) {
  if (n == 0) {
    throw std::invalid_argument("Zipf distribution needs at least one rank");
  }
  if (!(s >= 0.0) || !std::isfinite(s)) {
    throw std::invalid_argument("Zipf exponent must be finite and >= 0");
  }
  cdf_.resize(n);
  double acc = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    acc += std::pow(static_cast<double>(k + 1), -s);
    cdf_[k] = acc;
  }
  for (double& c : cdf_) {
    c /= acc;
  }
  cdf_.back() = 1.0;
}

std::size_t ZipfDistribution::Sample(RngStream& rng) const {
  const double u = rng.Uniform01();
  const auto it = std::upper_bound(cdf_.begin(), cdf_.end(), u);
  return std::min(static_cast<std::size_t>(it - cdf_.begin()), cdf_.size() - 1);
}

double ZipfDistribution::Probability(std::size_t rank) const {
  if (rank >= cdf_.size()) {
    return 0.0;
  }
  return rank == 0 ? cdf_[0] : cdf_[rank] - cdf_[rank - 1];
}

}  // namespace coldbench

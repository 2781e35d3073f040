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

#include "coldbench/cost/money.hpp"

#include <cmath>
#include <cstdlib>
#include <limits>

#include <fmt/format.h>

namespace coldbench {

Money Money::FromDollars(long double dollars) {
  if (!std::isfinite(dollars)) {
    throw CostOverflow("currency value is not finite");
  }
  const long double cents = std::round(dollars * 100.0L);
  // 2^62 cents leaves headroom for summing a handful of components.
  constexpr long double kLimit = 4.611686018427387904e18L;
  if (std::fabs(cents) >= kLimit) {
    throw CostOverflow(fmt::format("currency value {} exceeds the representable range", static_cast<double>(dollars)));
  }
  return Money(static_cast<std::int64_t>(cents));
}

Money& Money::operator+=(Money other) {
  if (__builtin_add_overflow(cents_, other.cents_, &cents_)) {
    throw CostOverflow("currency sum overflows");
  }
  return *this;
}

std::string Money::ToString() const {
  const bool negative = cents_ < 0;
  const std::uint64_t magnitude = negative ? static_cast<std::uint64_t>(-(cents_ + 1)) + 1 : static_cast<std::uint64_t>(cents_);
  std::string whole = std::to_string(magnitude / 100);
  for (int pos = static_cast<int>(whole.size()) - 3; pos > 0; pos -= 3) {
    whole.insert(static_cast<std::size_t>(pos), ",");
  }
  return fmt::format("{}${}.{:02d}", negative ? "-" : "", whole, magnitude % 100);
}

}  // namespace coldbench

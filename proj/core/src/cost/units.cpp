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

#include "coldbench/units.hpp"

#include <array>
#include <cctype>
#include <charconv>
#include <cmath>
#include <stdexcept>
#include <utility>

#include <fmt/format.h>

namespace coldbench {
namespace {

struct Suffix {
  std::string_view name;
  int power;  // relative to bytes: 0 = B, 1 = K, ... 5 = P
  bool binary;
};

constexpr std::array<Suffix, 11> kSuffixes{{
    {"B", 0, false},
    {"KB", 1, false}, {"MB", 2, false}, {"GB", 3, false}, {"TB", 4, false}, {"PB", 5, false},
    {"KiB", 1, true}, {"MiB", 2, true}, {"GiB", 3, true}, {"TiB", 4, true}, {"PiB", 5, true},
}};

std::string_view Trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

// Splits "12.5 GiB" into (12.5, suffix). A missing suffix yields nullptr.
std::pair<double, const Suffix*> SplitQuantity(std::string_view text) {
  text = Trim(text);
  std::size_t split = 0;
  while (split < text.size() &&
         (std::isdigit(static_cast<unsigned char>(text[split])) || text[split] == '.' || text[split] == 'e' ||
          text[split] == 'E' || text[split] == '+' || text[split] == '-')) {
    // Stop before an 'E' that starts a unit rather than an exponent.
    if ((text[split] == 'e' || text[split] == 'E') &&
        (split + 1 >= text.size() || !(std::isdigit(static_cast<unsigned char>(text[split + 1])) ||
                                        text[split + 1] == '-' || text[split + 1] == '+'))) {
      break;
    }
    ++split;
  }
  const std::string number(text.substr(0, split));
  if (number.empty()) {
    throw std::invalid_argument(fmt::format("'{}' is not a quantity", text));
  }
  std::size_t consumed = 0;
  double value = 0.0;
  try {
    value = std::stod(number, &consumed);
  } catch (const std::exception&) {
    throw std::invalid_argument(fmt::format("'{}' is not a quantity", text));
  }
  if (consumed != number.size() || !std::isfinite(value) || value < 0.0) {
    throw std::invalid_argument(fmt::format("'{}' is not a non-negative quantity", text));
  }
  const std::string_view unit = Trim(text.substr(split));
  if (unit.empty()) {
    return {value, nullptr};
  }
  for (const Suffix& suffix : kSuffixes) {
    if (unit == suffix.name) {
      return {value, &suffix};
    }
  }
  throw std::invalid_argument(fmt::format("unknown size unit '{}'", unit));
}

}  // namespace

std::uint64_t ParseByteSize(std::string_view text) {
  const auto [value, suffix] = SplitQuantity(text);
  double bytes = value;
  if (suffix != nullptr) {
    bytes *= std::pow(suffix->binary ? 1024.0 : 1000.0, suffix->power);
  }
  if (bytes >= 1.8e19) {
    throw std::invalid_argument(fmt::format("size '{}' is too large", text));
  }
  return static_cast<std::uint64_t>(std::llround(bytes));
}

double ParseCapacityGb(std::string_view text) {
  const auto [value, suffix] = SplitQuantity(text);
  if (suffix == nullptr) {
    return value;
  }
  return value * std::pow(suffix->binary ? 1024.0 : 1000.0, suffix->power - 3);
}

std::string FormatBytes(std::uint64_t bytes) {
  constexpr std::array<std::string_view, 6> kNames{"B", "KiB", "MiB", "GiB", "TiB", "PiB"};
  double value = static_cast<double>(bytes);
  std::size_t unit = 0;
  while (value >= 1024.0 && unit + 1 < kNames.size()) {
    value /= 1024.0;
    ++unit;
  }
  return unit == 0 ? fmt::format("{} B", bytes) : fmt::format("{:.2f} {}", value, kNames[unit]);
}

}  // namespace coldbench

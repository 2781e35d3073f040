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
#include <string>
#include <string_view>

namespace coldbench {

// Wide accumulator for byte-time products and exact integer scaling (GCC/Clang extension).
__extension__ using UInt128 = unsigned __int128;

inline constexpr std::uint64_t kKiB = 1024ULL;
inline constexpr std::uint64_t kMiB = 1024ULL * kKiB;
inline constexpr std::uint64_t kGiB = 1024ULL * kMiB;
inline constexpr std::uint64_t kTiB = 1024ULL * kGiB;

inline constexpr double kBytesPerMB = 1e6;  // transfer rates are quoted in decimal MB/s

// Prices are per "GB". Object sizes are converted with a binary GB, the same convention under
// which one PiB is 2^20 billed GB.
inline constexpr double kBytesPerBilledGB = static_cast<double>(kGiB);
inline constexpr double kGbPerPiB = 1048576.0;
inline constexpr double kGbPerPB = 1e6;

inline double BytesToBilledGB(std::uint64_t bytes) { return static_cast<double>(bytes) / kBytesPerBilledGB; }

// Parses "256MiB", "4 GB", "1048576". Plain numbers are bytes; B/KB/MB/GB/TB/PB are decimal and
// KiB/MiB/GiB/TiB/PiB binary. Throws std::invalid_argument on malformed input.
std::uint64_t ParseByteSize(std::string_view text);

// Parses a capacity in billed GB. Prefixes scale within their family relative to GB, so "1PiB"
// is 2^20 GB, "1PB" is 10^6 GB, "512MiB" is 0.5 GB. Plain numbers are GB.
double ParseCapacityGb(std::string_view text);

std::string FormatBytes(std::uint64_t bytes);

}  // namespace coldbench

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

#include <cmath>
#include <cstdint>

namespace coldbench {

// Simulated time, in integer microseconds since simulation start.
using SimTime = std::int64_t;

namespace sim_time {

inline constexpr SimTime kMicrosecond = 1;
inline constexpr SimTime kMillisecond = 1'000;
inline constexpr SimTime kSecond = 1'000'000;
inline constexpr SimTime kMinute = 60 * kSecond;
inline constexpr SimTime kHour = 60 * kMinute;
inline constexpr SimTime kDay = 24 * kHour;
// Billing month used for storage accrual.
inline constexpr SimTime kMonth = 30 * kDay;

inline SimTime FromSeconds(double seconds) { return static_cast<SimTime>(std::llround(seconds * 1e6)); }
inline SimTime FromMillis(double millis) { return static_cast<SimTime>(std::llround(millis * 1e3)); }
inline double ToSeconds(SimTime t) { return static_cast<double>(t) / 1e6; }
inline double ToMonths(SimTime t) { return static_cast<double>(t) / static_cast<double>(kMonth); }

}  // namespace sim_time
}  // namespace coldbench

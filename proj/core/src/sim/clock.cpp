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

#include "coldbench/sim/clock.hpp"

#include <stdexcept>

namespace coldbench {

void VirtualClock::AdvanceTo(SimTime t) {
  if (t < now_) {
    throw std::logic_error("virtual clock cannot move backwards");
  }
  now_ = t;
}

SimTime WallClock::Now() const {
  const auto elapsed = std::chrono::steady_clock::now() - start_;
  return std::chrono::duration_cast<std::chrono::microseconds>(elapsed).count();
}

}  // namespace coldbench

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

#include <chrono>

#include "coldbench/sim/time.hpp"

namespace coldbench {

// Time source consumed by the driver. The virtual implementation is owned and
// advanced by a Simulator; the wall implementation reads a steady clock.
class Clock {
 public:
  virtual ~Clock() = default;
  virtual SimTime Now() const = 0;
  virtual bool IsVirtual() const = 0;
};

class VirtualClock final : public Clock {
 public:
  SimTime Now() const override { return now_; }
  bool IsVirtual() const override { return true; }

 private:
  friend class Simulator;
  void AdvanceTo(SimTime t);

  SimTime now_ = 0;
};

class WallClock final : public Clock {
 public:
  WallClock() : start_(std::chrono::steady_clock::now()) {}
  SimTime Now() const override;
  bool IsVirtual() const override { return false; }

 private:
  std::chrono::steady_clock::time_point start_;
};

}  // namespace coldbench

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
#include <ostream>
#include <string_view>

#include "coldbench/sim/time.hpp"

namespace coldbench {

// Event-level CSV trace: time_us,backend,op,file_id,latency_us,cost_cents.
// Rows are written at completion time in dispatch order.
class TraceSink {
 public:
  explicit TraceSink(std::ostream& out);
  void Record(SimTime time, std::string_view backend, std::string_view op, std::uint64_t file_id, SimTime latency,
              double cost_dollars);
  std::uint64_t rows() const { return rows_; }

 private:
  std::ostream& out_;
  std::uint64_t rows_ = 0;
};

}  // namespace coldbench

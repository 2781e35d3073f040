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

#include "coldbench/backend/trace.hpp"

#include <fmt/format.h>
#include <fmt/ostream.h>

namespace coldbench {

TraceSink::TraceSink(std::ostream& out) : out_(out) { out_ << "time_us,backend,op,file_id,latency_us,cost_cents\n"; }

void TraceSink::Record(SimTime time, std::string_view backend, std::string_view op, std::uint64_t file_id,
                       SimTime latency, double cost_dollars) {
  fmt::print(out_, "{},{},{},{},{},{:.6f}\n", time, backend, op, file_id, latency, cost_dollars * 100.0);
  ++rows_;
}

}  // namespace coldbench

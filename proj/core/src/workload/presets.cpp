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

#include "coldbench/workload/presets.hpp"

#include <stdexcept>

#include <fmt/format.h>

#include "coldbench/units.hpp"

namespace coldbench {

WorkloadSpec WorkloadOverrides::ApplyTo(WorkloadSpec base) const {
  if (read_fraction) base.read_fraction = *read_fraction;
  if (batch_fraction) base.batch_fraction = *batch_fraction;
  if (batch_size) base.batch_size = *batch_size;
  if (priorities) base.priorities = *priorities;
  if (access_skew_s) base.access_skew_s = *access_skew_s;
  if (target_size) base.target_size = *target_size;
  return base;
}

WorkloadOverrides Preset(std::string_view name) {
  WorkloadOverrides o;
  if (name == "cp1-skew") {
    o.read_fraction = 1.0;
    o.batch_fraction = 0.0;
    o.access_skew_s = 2.0;
  } else if (name == "cp2-batch") {
    o.read_fraction = 1.0;
    o.batch_fraction = 1.0;
    o.batch_size = BatchSize{100, 1000};
  } else if (name == "cp3-priority") {
    o.read_fraction = 1.0;
    o.priorities = std::vector<PriorityClass>{{"low", 0.3}, {"normal", 0.65}, {"urgent", 0.05}};
  } else if (name == "cp4-smallfile") {
    o.read_fraction = 1.0;
    o.batch_fraction = 0.0;
    o.target_size = SizeFilter{0, 8 * kMiB};
  } else {
    throw std::out_of_range(fmt::format("unknown workload preset '{}' (known: cp1-skew, cp2-batch, "
                                        "cp3-priority, cp4-smallfile)",
                                        name));
  }
  return o;
}

std::vector<std::string> PresetNames() { return {"cp1-skew", "cp2-batch", "cp3-priority", "cp4-smallfile"}; }

}  // namespace coldbench

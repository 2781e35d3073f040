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

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "coldbench/workload/workload.hpp"

namespace coldbench {

// Partial WorkloadSpec: set fields replace those of a base spec.
struct WorkloadOverrides {
  std::optional<double> read_fraction;
  std::optional<double> batch_fraction;
  std::optional<BatchSize> batch_size;
  std::optional<std::vector<PriorityClass>> priorities;
  std::optional<double> access_skew_s;
  std::optional<SizeFilter> target_size;

  WorkloadSpec ApplyTo(WorkloadSpec base) const;
};

/*
 * Choke-point presets:
 *   cp1-skew       heavily skewed single GETs (Zipf s = 2 over missions)
 *   cp2-batch      every request is a batch GET of 100-1000 files
 *   cp3-priority   low / normal / urgent classes with urgent rare
 *   cp4-smallfile  single GETs restricted to files below 8 MiB
 * Throws std::out_of_range for unknown names.
 */
WorkloadOverrides Preset(std::string_view name);
std::vector<std::string> PresetNames();

}  // namespace coldbench

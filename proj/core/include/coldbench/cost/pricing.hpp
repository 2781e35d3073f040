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

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "coldbench/sim/time.hpp"

namespace coldbench {

// Nominal access latency of a storage class. Archive tiers have no fixed figure; they are
// described as taking hours to rehydrate.
struct NominalLatency {
  enum class Kind { kFixed, kHours };
  Kind kind = Kind::kFixed;
  SimTime fixed = 0;

  static NominalLatency Fixed(SimTime t) { return {Kind::kFixed, t}; }
  static NominalLatency Hours() { return {Kind::kHours, 0}; }
  friend bool operator==(const NominalLatency&, const NominalLatency&) = default;
};

struct TierPricing {
  std::string tier_name;
  double storage_per_gb_month = 0.0;
  double retrieval_per_gb = 0.0;
  double get_per_10k_requests = 0.0;
  NominalLatency nominal_latency;
  // Free-form remark carried into reports (e.g. known differences to reference figures).
  std::string note;

  // Throws std::invalid_argument on negative or non-finite rates or an empty name.
  void Validate() const;
  friend bool operator==(const TierPricing&, const TierPricing&) = default;
};

struct PricingCatalog {
  std::string name;
  std::vector<TierPricing> tiers;

  // Throws std::out_of_range with the list of known tiers.
  const TierPricing& Find(std::string_view tier_name) const;
  void Validate() const;
};

inline constexpr std::string_view kDefaultCatalogName = "azure-2019";

// Azure Blob list prices for the archive, cool and hot tiers (2019).
PricingCatalog Azure2019Catalog();

// Loads a catalog from YAML:
//
//   name: my-catalog
//   tiers:
//     - name: archive
//       storage_per_gb_month: 0.0045
//       retrieval_per_gb: 0.02
//       get_per_10k: 0.5
//       latency: hours            # or latency_ms: 61.4
//
// Throws std::runtime_error on I/O or schema errors.
PricingCatalog LoadCatalog(const std::filesystem::path& path);
PricingCatalog ParseCatalog(std::string_view yaml_text);
std::string CatalogToYaml(const PricingCatalog& catalog);

}  // namespace coldbench

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

#include <span>
#include <string>
#include <vector>

#include "coldbench/cost/money.hpp"
#include "coldbench/cost/pricing.hpp"
#include "coldbench/units.hpp"

namespace coldbench {

/*
 * Lifetime cost of keeping `capacity_gb` in one storage class for `months` months and reading
 * all of it back `full_reads` times:
 *
 *   total = storage_rate * capacity * months
 *         + (retrieval_rate * capacity + get_rate / 10^4 * ceil(capacity / blob)) * full_reads
 *
 * Egress is billed separately by providers and is only added where explicitly requested.
 */
struct CostScenario {
  double capacity_gb = kGbPerPiB;
  double months = 12.0;
  double full_reads = 1.0;
  double blob_size_gb = 0.25;
  double egress_per_gb = 0.05;

  // Throws std::invalid_argument unless capacity > 0, months >= 0, full_reads >= 0, blob > 0.
  void Validate() const;
  // Number of objects a full read touches; a partial trailing blob is one more object.
  double BlobCount() const;
};

// One PiB for a year, read back once: the reference case for the default catalog.
CostScenario PibYearOneReadScenario();
// Monthly full scans (M == R == 12).
CostScenario PibMonthlyScanScenario();

struct CostReport {
  Money storage_cost;
  Money retrieval_cost;
  Money request_cost;
  Money egress_cost;
  Money total;
  double storage_fraction = 0.0;
  double access_fraction = 0.0;

  friend bool operator==(const CostReport&, const CostReport&) = default;
};

struct CostOptions {
  bool include_egress = false;
};

// Components are rounded to cents individually; total is their exact sum.
CostReport TotalCost(const TierPricing& pricing, const CostScenario& scenario, CostOptions options = {});

// Share of the (egress-free) total spent on reads: (retrieval + requests) / total.
// Throws std::invalid_argument if months or full_reads is zero and std::domain_error if the total is 0.
double AccessOverhead(const TierPricing& pricing, const CostScenario& scenario);

struct CostBreakdown {
  double storage_percent = 0.0;
  double access_percent = 0.0;
};
// Throws std::domain_error when the scenario costs nothing.
CostBreakdown BreakdownPercent(const TierPricing& pricing, const CostScenario& scenario);

// Storage months after which a single full read-out is `overhead` of the total, per GB:
//   months = (1 - overhead) / overhead * retrieval / storage.
double MonthsForMoveoutOverhead(const TierPricing& pricing, double overhead);
// Inverse of the above: overhead of one read-out after `months` of storage.
double MoveoutOverhead(const TierPricing& pricing, double months);

struct MoveoutPoint {
  double overhead = 0.0;
  double months = 0.0;
};
// Months for overheads 10%, 20%, ..., 90%.
std::vector<MoveoutPoint> MoveoutCurve(const TierPricing& pricing);

struct MigrationCost {
  Money cost;
  double equivalent_storage_months = 0.0;
};
// One full read-out of the archive, optionally including egress, and the number of months of
// storage it is worth.
MigrationCost ComputeMigrationCost(const TierPricing& pricing, const CostScenario& scenario, bool include_egress);

struct TierAdvice {
  TierPricing tier;
  CostReport report;
};
// Tiers ordered by ascending total; ties keep catalog order. Throws on an empty catalog.
std::vector<TierAdvice> AdviseTier(std::span<const TierPricing> catalog, const CostScenario& scenario);

}  // namespace coldbench

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

#include "coldbench/cost/cost_model.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include <fmt/format.h>

namespace coldbench {
namespace {

// Unrounded component values in dollars.
struct Components {
  long double storage = 0;
  long double retrieval = 0;
  long double requests = 0;
  long double egress = 0;
};

Components ComputeComponents(const TierPricing& pricing, const CostScenario& scenario, bool include_egress) {
  pricing.Validate();
  scenario.Validate();
  const long double capacity = scenario.capacity_gb;
  const long double reads = scenario.full_reads;
  Components c;
  c.storage = static_cast<long double>(pricing.storage_per_gb_month) * capacity * scenario.months;
  c.retrieval = static_cast<long double>(pricing.retrieval_per_gb) * capacity * reads;
  c.requests = static_cast<long double>(pricing.get_per_10k_requests) * scenario.BlobCount() / 10000.0L * reads;
  if (include_egress) {
    c.egress = static_cast<long double>(scenario.egress_per_gb) * capacity * reads;
  }
  return c;
}

}  // namespace

void CostScenario::Validate() const {
  if (!(capacity_gb > 0.0) || !std::isfinite(capacity_gb)) {
    throw std::invalid_argument("scenario capacity must be > 0 GB");
  }
  if (!(months >= 0.0) || !std::isfinite(months)) {
    throw std::invalid_argument("scenario months must be >= 0");
  }
  if (!(full_reads >= 0.0) || !std::isfinite(full_reads)) {
    throw std::invalid_argument("scenario full_reads must be >= 0");
  }
  if (!(blob_size_gb > 0.0) || !std::isfinite(blob_size_gb)) {
    throw std::invalid_argument("scenario blob size must be > 0 GB");
  }
  if (!(egress_per_gb >= 0.0) || !std::isfinite(egress_per_gb)) {
    throw std::invalid_argument("scenario egress rate must be >= 0");
  }
}

double CostScenario::BlobCount() const {
  const double ratio = capacity_gb / blob_size_gb;
  // Absorb floating-point noise such as 1048576 / 0.25 landing a hair above an integer.
  const double nearest = std::round(ratio);
  if (std::fabs(ratio - nearest) <= 1e-9 * std::max(1.0, nearest)) {
    return nearest;
  }
  return std::ceil(ratio);
}

CostScenario PibYearOneReadScenario() { return CostScenario{kGbPerPiB, 12.0, 1.0, 0.25, 0.05}; }

CostScenario PibMonthlyScanScenario() { return CostScenario{kGbPerPiB, 12.0, 12.0, 0.25, 0.05}; }

CostReport TotalCost(const TierPricing& pricing, const CostScenario& scenario, CostOptions options) {
  const Components c = ComputeComponents(pricing, scenario, options.include_egress);
  CostReport report;
  report.storage_cost = Money::FromDollars(c.storage);
  report.retrieval_cost = Money::FromDollars(c.retrieval);
  report.request_cost = Money::FromDollars(c.requests);
  report.egress_cost = Money::FromDollars(c.egress);
  report.total = report.storage_cost + report.retrieval_cost + report.request_cost + report.egress_cost;
  if (report.total.cents() > 0) {
    report.storage_fraction = static_cast<double>(report.storage_cost.cents()) / static_cast<double>(report.total.cents());
    report.access_fraction = 1.0 - report.storage_fraction;
  }
  return report;
}

double AccessOverhead(const TierPricing& pricing, const CostScenario& scenario) {
  if (!(scenario.months > 0.0) || !(scenario.full_reads > 0.0)) {
    throw std::invalid_argument("access overhead needs months > 0 and full_reads > 0");
  }
  const Components c = ComputeComponents(pricing, scenario, false);
  const long double total = c.storage + c.retrieval + c.requests;
  if (total <= 0.0L) {
    throw std::domain_error("access overhead is undefined for a zero-cost scenario");
  }
  return static_cast<double>((c.retrieval + c.requests) / total);
}

CostBreakdown BreakdownPercent(const TierPricing& pricing, const CostScenario& scenario) {
  const Components c = ComputeComponents(pricing, scenario, false);
  const long double total = c.storage + c.retrieval + c.requests;
  if (total <= 0.0L) {
    throw std::domain_error("cost breakdown is undefined for a zero-cost scenario");
  }
  const double storage = static_cast<double>(100.0L * c.storage / total);
  return CostBreakdown{storage, 100.0 - storage};
}

double MonthsForMoveoutOverhead(const TierPricing& pricing, double overhead) {
  pricing.Validate();
  if (!(overhead > 0.0 && overhead < 1.0)) {
    throw std::invalid_argument("move-out overhead must lie strictly between 0 and 1");
  }
  if (!(pricing.storage_per_gb_month > 0.0)) {
    throw std::invalid_argument(fmt::format("tier '{}' has no storage charge; move-out months are undefined",
                                            pricing.tier_name));
  }
  return (1.0 - overhead) / overhead * pricing.retrieval_per_gb / pricing.storage_per_gb_month;
}

double MoveoutOverhead(const TierPricing& pricing, double months) {
  pricing.Validate();
  if (!(months >= 0.0)) {
    throw std::invalid_argument("months must be >= 0");
  }
  const double read_out = pricing.retrieval_per_gb;
  const double total = read_out + pricing.storage_per_gb_month * months;
  if (!(total > 0.0)) {
    throw std::domain_error("move-out overhead is undefined for a zero-cost tier");
  }
  return read_out / total;
}

std::vector<MoveoutPoint> MoveoutCurve(const TierPricing& pricing) {
  std::vector<MoveoutPoint> curve;
  for (int percent = 10; percent <= 90; percent += 10) {
    const double overhead = percent / 100.0;
    curve.push_back({overhead, MonthsForMoveoutOverhead(pricing, overhead)});
  }
  return curve;
}

MigrationCost ComputeMigrationCost(const TierPricing& pricing, const CostScenario& scenario, bool include_egress) {
  CostScenario read_out = scenario;
  read_out.months = 0.0;
  read_out.full_reads = 1.0;
  const Components c = ComputeComponents(pricing, read_out, include_egress);
  const long double dollars = c.retrieval + c.requests + c.egress;
  MigrationCost result;
  result.cost = Money::FromDollars(dollars);
  const long double monthly = static_cast<long double>(pricing.storage_per_gb_month) * scenario.capacity_gb;
  result.equivalent_storage_months = monthly > 0.0L ? static_cast<double>(dollars / monthly) : INFINITY;
  return result;
}

std::vector<TierAdvice> AdviseTier(std::span<const TierPricing> catalog, const CostScenario& scenario) {
  if (catalog.empty()) {
    throw std::invalid_argument("tier advice needs a non-empty catalog");
  }
  std::vector<TierAdvice> ranked;
  ranked.reserve(catalog.size());
  for (const TierPricing& tier : catalog) {
    ranked.push_back({tier, TotalCost(tier, scenario)});
  }
  std::stable_sort(ranked.begin(), ranked.end(),
                   [](const TierAdvice& a, const TierAdvice& b) { return a.report.total < b.report.total; });
  return ranked;
}

}  // namespace coldbench

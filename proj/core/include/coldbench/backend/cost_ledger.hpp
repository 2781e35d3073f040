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

#include "coldbench/cost/cost_model.hpp"
#include "coldbench/cost/pricing.hpp"
#include "coldbench/sim/time.hpp"
#include "coldbench/units.hpp"

namespace coldbench {

// Unrounded accrued dollars; summable across backends.
struct LedgerTotals {
  long double storage = 0;
  long double retrieval = 0;
  long double requests = 0;
  long double egress = 0;
  std::uint64_t get_requests = 0;
  std::uint64_t bytes_retrieved = 0;

  LedgerTotals& operator+=(const LedgerTotals& other);
  // Rounds each component to cents, exactly like TotalCost.
  CostReport ToReport() const;
};

/*
 * Running bill of one cloud tier. Storage is integrated over simulated time as byte-microseconds
 * and converted with 1 month = 30 days; reads are charged per billed GB plus per request.
 */
class CostLedger {
 public:
  explicit CostLedger(TierPricing pricing) : pricing_(std::move(pricing)) {}

  // Changes the stored volume at `now`; earlier volume accrues up to `now` first.
  void AdjustStored(SimTime now, std::int64_t delta_bytes);
  // Returns the dollars charged for this GET.
  double ChargeGet(std::uint64_t bytes);
  double ChargeEgress(std::uint64_t bytes, double egress_per_gb);

  LedgerTotals Totals(SimTime now) const;
  std::uint64_t stored_bytes() const { return stored_bytes_; }
  const TierPricing& pricing() const { return pricing_; }

 private:
  TierPricing pricing_;
  std::uint64_t stored_bytes_ = 0;
  SimTime last_change_ = 0;
  UInt128 byte_micros_ = 0;
  LedgerTotals charges_;
};

}  // namespace coldbench

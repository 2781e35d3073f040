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

#include "coldbench/backend/cost_ledger.hpp"

#include <stdexcept>

#include "coldbench/units.hpp"

namespace coldbench {

LedgerTotals& LedgerTotals::operator+=(const LedgerTotals& other) {
  storage += other.storage;
  retrieval += other.retrieval;
  requests += other.requests;
  egress += other.egress;
  get_requests += other.get_requests;
  bytes_retrieved += other.bytes_retrieved;
  return *this;
}

CostReport LedgerTotals::ToReport() const {
  CostReport report;
  report.storage_cost = Money::FromDollars(storage);
  report.retrieval_cost = Money::FromDollars(retrieval);
  report.request_cost = Money::FromDollars(requests);
  report.egress_cost = Money::FromDollars(egress);
  report.total = report.storage_cost + report.retrieval_cost + report.request_cost + report.egress_cost;
  if (report.total.cents() > 0) {
    report.storage_fraction = static_cast<double>(report.storage_cost.cents()) / static_cast<double>(report.total.cents());
    report.access_fraction = 1.0 - report.storage_fraction;
  }
  return report;
}

void CostLedger::AdjustStored(SimTime now, std::int64_t delta_bytes) {
  if (now < last_change_) {
    throw std::logic_error("cost ledger updated out of time order");
  }
  byte_micros_ += static_cast<UInt128>(stored_bytes_) * static_cast<UInt128>(now - last_change_);
  last_change_ = now;
  if (delta_bytes < 0 && static_cast<std::uint64_t>(-delta_bytes) > stored_bytes_) {
    throw std::logic_error("cost ledger stored volume would go negative");
  }
  stored_bytes_ = static_cast<std::uint64_t>(static_cast<std::int64_t>(stored_bytes_) + delta_bytes);
}

double CostLedger::ChargeGet(std::uint64_t bytes) {
  const long double retrieval = static_cast<long double>(pricing_.retrieval_per_gb) * bytes / kBytesPerBilledGB;
  const long double request = static_cast<long double>(pricing_.get_per_10k_requests) / 10000.0L;
  charges_.retrieval += retrieval;
  charges_.requests += request;
  charges_.get_requests += 1;
  charges_.bytes_retrieved += bytes;
  return static_cast<double>(retrieval + request);
}

double CostLedger::ChargeEgress(std::uint64_t bytes, double egress_per_gb) {
  const long double egress = static_cast<long double>(egress_per_gb) * bytes / kBytesPerBilledGB;
  charges_.egress += egress;
  return static_cast<double>(egress);
}

LedgerTotals CostLedger::Totals(SimTime now) const {
  LedgerTotals totals = charges_;
  UInt128 byte_micros = byte_micros_;
  if (now > last_change_) {
    byte_micros += static_cast<UInt128>(stored_bytes_) * static_cast<UInt128>(now - last_change_);
  }
  const long double gb_months = static_cast<long double>(byte_micros) /
                                (static_cast<long double>(kBytesPerBilledGB) * static_cast<long double>(sim_time::kMonth));
  totals.storage = static_cast<long double>(pricing_.storage_per_gb_month) * gb_months;
  return totals;
}

}  // namespace coldbench

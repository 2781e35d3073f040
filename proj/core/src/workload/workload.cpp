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

#include "coldbench/workload/workload.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <unordered_set>

#include <fmt/format.h>

#include "coldbench/sim/rng.hpp"
#include "coldbench/sim/zipf.hpp"

namespace coldbench {

std::string_view ToString(Op op) { return op == Op::kGet ? "get" : "put"; }

Op ParseOp(std::string_view text) {
  if (text == "get") return Op::kGet;
  if (text == "put") return Op::kPut;
  throw std::invalid_argument(fmt::format("unknown op '{}'", text));
}

std::vector<PriorityClass> DefaultPriorities() { return {{"low", 0.2}, {"normal", 0.7}, {"urgent", 0.1}}; }

void WorkloadSpec::Validate() const {
  const auto in_unit = [](double v) { return v >= 0.0 && v <= 1.0; };
  if (!in_unit(read_fraction)) throw std::invalid_argument("read_fraction must lie in [0, 1]");
  if (!in_unit(batch_fraction)) throw std::invalid_argument("batch_fraction must lie in [0, 1]");
  if (!in_unit(temporal_window)) throw std::invalid_argument("temporal_window must lie in [0, 1]");
  if (!in_unit(never_read_fraction)) throw std::invalid_argument("never_read_fraction must lie in [0, 1]");
  if (batch_size.min < 2 || batch_size.max < batch_size.min) {
    throw std::invalid_argument("batch sizes need 2 <= min <= max");
  }
  if (!(access_skew_s >= 0.0) || !std::isfinite(access_skew_s)) {
    throw std::invalid_argument("access_skew_s must be finite and >= 0");
  }
  if (priorities.empty()) throw std::invalid_argument("at least one priority class is required");
  double total = 0.0;
  for (const PriorityClass& p : priorities) {
    if (p.name.empty() || p.name.find_first_of(",\n") != std::string::npos) {
      throw std::invalid_argument(fmt::format("invalid priority class name '{}'", p.name));
    }
    if (!(p.weight >= 0.0) || !std::isfinite(p.weight)) {
      throw std::invalid_argument(fmt::format("priority '{}' weight must be >= 0", p.name));
    }
    total += p.weight;
  }
  if (!(total > 0.0)) throw std::invalid_argument("priority weights must have a positive sum");
  if (arrival.kind == Arrival::Kind::kOpen && !(arrival.rate_per_s > 0.0)) {
    throw std::invalid_argument("open arrivals need a positive rate");
  }
  if (arrival.think_time < 0) throw std::invalid_argument("think time must be >= 0");
  if (target_size.max_bytes && *target_size.max_bytes <= target_size.min_bytes) {
    throw std::invalid_argument("target size filter is empty");
  }
  if (never_read_fraction >= 1.0 && read_fraction > 0.0) {
    throw std::invalid_argument("never_read_fraction = 1 leaves no files to read");
  }
}

std::vector<FileId> NeverReadPool(const DatasetManifest& manifest, const WorkloadSpec& spec) {
  std::vector<FileId> statics;
  for (const FileRecord& r : manifest.records) {
    if (r.set == FileSet::kStatic) statics.push_back(r.file_id);
  }
  const double exact = spec.never_read_fraction * static_cast<double>(statics.size());
  const auto reserved = std::min<std::size_t>(
      statics.size(), static_cast<std::size_t>(std::ceil(exact - 1e-9 * std::max(1.0, exact))));
  // Partial Fisher-Yates: the first `reserved` slots become the pool.
  RngStream rng(spec.seed, "workload/never-read");
  for (std::size_t i = 0; i < reserved; ++i) {
    const std::size_t j = i + rng.UniformIndex(statics.size() - i);
    std::swap(statics[i], statics[j]);
  }
  statics.resize(reserved);
  std::sort(statics.begin(), statics.end());
  return statics;
}

namespace {

// Per-session stream builder. Slot kinds are decided by the caller; this fills in targets.
class StreamBuilder {
 public:
  StreamBuilder(const DatasetManifest& manifest, const WorkloadSpec& spec, StreamContext context)
      : manifest_(manifest),
        spec_(spec),
        rng_(spec.seed, fmt::format("workload/session-{}", context.session)),
        arrivals_(rng_.Substream("arrivals")) {
    if (manifest.records.empty()) throw std::invalid_argument("workload needs a non-empty manifest");
    if (context.session_count == 0 || context.session >= context.session_count) {
      throw std::invalid_argument("invalid session context");
    }
    spec.Validate();

    const std::vector<FileId> reserved = NeverReadPool(manifest, spec);
    const std::unordered_set<FileId> never_read(reserved.begin(), reserved.end());

    std::uint32_t missions = manifest.spec.mission_count;
    for (const FileRecord& r : manifest.records) missions = std::max(missions, r.mission + 1);
    pools_.resize(missions);
    std::vector<bool> mission_has_files(missions, false);

    std::uint64_t dynamic_index = 0;
    for (const FileRecord& r : manifest.records) {
      if (r.set == FileSet::kStatic) {
        if (!never_read.count(r.file_id) && spec.target_size.Accepts(r.size_bytes)) {
          pools_[r.mission].push_back(r.file_id);
          mission_has_files[r.mission] = true;
        }
      } else if (dynamic_index++ % context.session_count == context.session) {
        pending_dynamic_.push_back(&r);
        if (spec.target_size.Accepts(r.size_bytes)) mission_has_files[r.mission] = true;
      }
    }
    for (std::uint32_t m = 0; m < missions; ++m) {
      if (mission_has_files[m]) active_missions_.push_back(m);
    }
    if (!active_missions_.empty()) {
      mission_law_.emplace(active_missions_.size(), spec.access_skew_s);
    }
    double total = 0.0;
    for (const PriorityClass& p : spec.priorities) {
      total += p.weight;
      priority_cdf_.push_back(total);
    }
  }

  std::size_t pending_dynamic() const { return pending_dynamic_.size() - next_dynamic_; }

  void AddGet() {
    if (!HasReadable()) {
      if (pending_dynamic() > 0) {
        AddPut();
        return;
      }
      throw std::invalid_argument("no readable files match the workload's filters");
    }
    Request request = NewRequest(Op::kGet);
    const std::uint32_t mission = PickMission();
    const std::vector<FileId>& pool = pools_[mission];
    const std::size_t start = PickIndexInMission(pool.size());
    if (rng_.Bernoulli(spec_.batch_fraction)) {
      const auto wanted = static_cast<std::size_t>(rng_.UniformInt(spec_.batch_size.min, spec_.batch_size.max));
      const std::size_t count = std::min(wanted, pool.size());
      for (std::size_t k = 0; k < count; ++k) {
        request.file_ids.push_back(pool[(start + k) % pool.size()]);
      }
    } else {
      request.file_ids.push_back(pool[start]);
    }
    requests_.push_back(std::move(request));
  }

  void AddPut() {
    if (pending_dynamic() == 0) {
      AddGet();
      return;
    }
    const FileRecord& record = *pending_dynamic_[next_dynamic_++];
    Request request = NewRequest(Op::kPut);
    request.file_ids.push_back(record.file_id);
    requests_.push_back(std::move(request));
    if (spec_.target_size.Accepts(record.size_bytes)) {
      // Ids grow with ingest order, so appending keeps each pool sorted oldest to newest.
      pools_[record.mission].push_back(record.file_id);
    }
  }

  std::vector<Request> Take() { return std::move(requests_); }
  RngStream& rng() { return rng_; }

 private:
  bool HasReadable() const {
    for (std::uint32_t m : active_missions_) {
      if (!pools_[m].empty()) return true;
    }
    return false;
  }

  Request NewRequest(Op op) {
    Request request;
    request.request_id = requests_.size();
    request.op = op;
    request.priority = PickPriority();
    if (spec_.arrival.kind == Arrival::Kind::kOpen) {
      if (!requests_.empty()) {
        elapsed_s_ += arrivals_.Exponential(spec_.arrival.rate_per_s);
      }
      request.issue_offset = sim_time::FromSeconds(elapsed_s_);
    } else {
      request.issue_offset = static_cast<SimTime>(requests_.size());
    }
    return request;
  }

  std::string PickPriority() {
    const double u = rng_.Uniform01() * priority_cdf_.back();
    const auto it = std::upper_bound(priority_cdf_.begin(), priority_cdf_.end(), u);
    const auto index = std::min<std::size_t>(it - priority_cdf_.begin(), priority_cdf_.size() - 1);
    return spec_.priorities[index].name;
  }

  std::uint32_t PickMission() {
    // A mission may be temporarily empty when all its readable files are still to be ingested.
    for (int attempt = 0; attempt < 64; ++attempt) {
      const std::uint32_t mission = active_missions_[mission_law_->Sample(rng_)];
      if (!pools_[mission].empty()) return mission;
    }
    for (std::uint32_t m : active_missions_) {
      if (!pools_[m].empty()) return m;
    }
    throw std::logic_error("no readable mission");
  }

  std::size_t PickIndexInMission(std::size_t n) {
    const std::size_t recent = (n + 9) / 10;
    const std::size_t older = n - recent;
    if (older == 0 || rng_.Bernoulli(spec_.temporal_window)) {
      return older + rng_.UniformIndex(recent);
    }
    return rng_.UniformIndex(older);
  }

  const DatasetManifest& manifest_;
  const WorkloadSpec& spec_;
  RngStream rng_;
  RngStream arrivals_;
  std::vector<std::vector<FileId>> pools_;
  std::vector<std::uint32_t> active_missions_;
  std::optional<ZipfDistribution> mission_law_;
  std::vector<const FileRecord*> pending_dynamic_;
  std::size_t next_dynamic_ = 0;
  std::vector<double> priority_cdf_;
  std::vector<Request> requests_;
  double elapsed_s_ = 0.0;
};

}  // namespace

std::vector<Request> GenerateWorkload(const DatasetManifest& manifest, const WorkloadSpec& spec,
                                      StreamContext context) {
  StreamBuilder builder(manifest, spec, context);
  RngStream ops = builder.rng().Substream("ops");
  for (std::uint64_t i = 0; i < spec.request_count; ++i) {
    if (ops.Bernoulli(spec.read_fraction)) {
      builder.AddGet();
    } else {
      builder.AddPut();
    }
  }
  return builder.Take();
}

IngestStream InterleaveIngest(const DatasetManifest& manifest, const WorkloadSpec& spec, StreamContext context) {
  StreamBuilder builder(manifest, spec, context);
  const std::size_t writes = builder.pending_dynamic();
  bool has_dynamic = false;
  for (const FileRecord& r : manifest.records) has_dynamic |= r.set == FileSet::kDynamic;
  if (!has_dynamic) {
    throw std::invalid_argument("interleaved ingest needs a manifest with a dynamic set");
  }

  IngestStream result;
  const double write_share = 1.0 - spec.read_fraction;
  if (write_share <= 0.0) {
    result.warnings.push_back(
        fmt::format("write share is 0; {} dynamic files of session {} are never ingested", writes, context.session));
    for (std::uint64_t i = 0; i < spec.request_count; ++i) builder.AddGet();
    result.requests = builder.Take();
    return result;
  }

  const auto needed = static_cast<std::uint64_t>(std::ceil(static_cast<double>(writes) / write_share - 1e-9));
  const std::uint64_t length = std::max<std::uint64_t>(spec.request_count, needed);
  // One PUT per stratum [floor(i * L / W), floor((i + 1) * L / W)); strata are disjoint and non-empty.
  std::vector<bool> is_put(length, false);
  RngStream placement = builder.rng().Substream("ingest");
  const auto stratum_start = [&](std::size_t i) {
    return static_cast<std::uint64_t>((static_cast<UInt128>(i) * length) / writes);
  };
  for (std::size_t i = 0; i < writes; ++i) {
    const std::uint64_t lo = stratum_start(i);
    const std::uint64_t hi = stratum_start(i + 1);
    is_put[lo + placement.UniformIndex(hi - lo)] = true;
  }
  for (std::uint64_t i = 0; i < length; ++i) {
    if (is_put[i]) {
      builder.AddPut();
    } else {
      builder.AddGet();
    }
  }
  result.requests = builder.Take();
  return result;
}

}  // namespace coldbench

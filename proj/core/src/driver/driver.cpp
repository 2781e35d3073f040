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

#include "coldbench/driver/driver.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <memory>
#include <stdexcept>
#include <tuple>
#include <unordered_map>

#include <fmt/format.h>
#include <fmt/ostream.h>

#include "coldbench/sim/zipf.hpp"

namespace coldbench {

void SessionConfig::Validate() const {
  if (session_count < 1) throw std::invalid_argument("session_count must be >= 1");
  if (!(load_skew_s >= 0.0)) throw std::invalid_argument("load_skew_s must be >= 0");
  workload.Validate();
}

void Preload(StorageBackend& backend, const DatasetManifest& manifest) {
  std::vector<FileRecord> statics;
  statics.reserve(manifest.summary.static_count);
  for (const FileRecord& record : manifest.records) {
    if (record.set == FileSet::kStatic) statics.push_back(record);
  }
  backend.Preload(statics);
}

std::vector<std::uint64_t> SessionRequestCounts(const SessionConfig& sessions) {
  const std::uint32_t n = sessions.session_count;
  const std::uint64_t per = sessions.workload.request_count;
  if (sessions.load_skew_s == 0.0) return std::vector<std::uint64_t>(n, per);
  const ZipfDistribution zipf(n, sessions.load_skew_s);
  const std::uint64_t total = per * n;
  std::vector<std::uint64_t> counts(n);
  std::vector<std::pair<double, std::uint32_t>> remainders;
  std::uint64_t assigned = 0;
  for (std::uint32_t i = 0; i < n; ++i) {
    const double exact = zipf.Probability(i) * static_cast<double>(total);
    counts[i] = static_cast<std::uint64_t>(std::floor(exact));
    assigned += counts[i];
    remainders.emplace_back(exact - std::floor(exact), i);
  }
  std::stable_sort(remainders.begin(), remainders.end(), [](const auto& a, const auto& b) { return a.first > b.first; });
  for (std::size_t k = 0; assigned < total; ++k, ++assigned) ++counts[remainders[k % n].second];
  return counts;
}

namespace {

// One session's event chain.
struct Session {
  std::uint32_t index = 0;
  std::vector<Request> requests;
  std::size_t next = 0;
};

class Runner {
 public:
  Runner(StorageBackend& backend, const DatasetManifest& manifest, const SessionConfig& config)
      : backend_(backend), sim_(backend.simulator()), config_(config) {
    sizes_.reserve(manifest.records.size());
    for (const FileRecord& record : manifest.records) sizes_.emplace(record.file_id, record.size_bytes);
    const std::vector<std::uint64_t> counts = SessionRequestCounts(config);
    for (std::uint32_t s = 0; s < config.session_count; ++s) {
      auto session = std::make_unique<Session>();
      session->index = s;
      const StreamContext context{s, config.session_count};
      WorkloadSpec spec = config.workload;
      spec.request_count = counts[s];
      if (config.interleave_ingest) {
        IngestStream stream = InterleaveIngest(manifest, spec, context);
        session->requests = std::move(stream.requests);
        for (std::string& w : stream.warnings) {
          if (s == 0) result_.warnings.push_back(std::move(w));
        }
      } else {
        session->requests = spec.request_count == 0 ? std::vector<Request>{}
                                                    : GenerateWorkload(manifest, spec, context);
      }
      sessions_.push_back(std::move(session));
    }
  }

  RunResult Run() {
    const SimTime start = sim_.Now();
    result_.end_time = start;
    const bool open = config_.workload.arrival.kind == Arrival::Kind::kOpen;
    if (config_.per_file_records) backend_.RecordBatchParts(true);
    for (auto& session : sessions_) {
      Session* s = session.get();
      if (open) {
        for (std::size_t i = 0; i < s->requests.size(); ++i) {
          sim_.ScheduleAt(start + s->requests[i].issue_offset, [this, s, i]() { Issue(*s, i, false); });
        }
      } else if (!s->requests.empty()) {
        sim_.ScheduleAt(start, [this, s]() { Issue(*s, 0, true); });
      }
    }
    sim_.Run();
    if (config_.per_file_records) backend_.RecordBatchParts(false);
    std::sort(result_.batch_files.begin(), result_.batch_files.end(),
              [](const BatchFileRecord& a, const BatchFileRecord& b) {
                return std::tie(a.issue_time, a.session, a.request_id, a.completion_time, a.file_id) <
                       std::tie(b.issue_time, b.session, b.request_id, b.completion_time, b.file_id);
              });
    std::sort(result_.measurements.begin(), result_.measurements.end(), [](const Measurement& a, const Measurement& b) {
      return std::tie(a.issue_time, a.session, a.request_id) < std::tie(b.issue_time, b.session, b.request_id);
    });
    return std::move(result_);
  }

 private:
  void Issue(Session& session, std::size_t i, bool closed) {
    const Request& request = session.requests[i];
    ++result_.issued_requests;
    const bool measured = i >= config_.warmup_requests;
    auto on_done = [this, &session, i, closed, measured](const Completion& c) {
      const Request& r = session.requests[i];
      result_.end_time = std::max(result_.end_time, c.completion_time);
      if (measured) {
        Measurement m;
        m.request_id = r.request_id;
        m.session = session.index;
        m.op = r.op;
        m.priority = r.priority;
        m.issue_time = c.issue_time;
        m.completion_time = c.completion_time;
        m.bytes = c.bytes;
        m.file_count = c.file_count;
        m.cost_delta = c.cost_delta;
        m.ok = c.ok;
        m.error = c.error;
        result_.measurements.push_back(std::move(m));
        for (const PartRecord& p : c.parts) {
          result_.batch_files.push_back(
              {r.request_id, session.index, p.file_id, c.issue_time, p.completion_time, p.bytes, p.ok});
        }
      }
      if (closed && i + 1 < session.requests.size()) {
        const SimTime at = sim_.Now() + config_.workload.arrival.think_time;
        sim_.ScheduleAt(at, [this, &session, i]() { Issue(session, i + 1, true); });
      }
    };
    if (request.op == Op::kPut) {
      const FileId file = request.file_ids.front();
      const auto it = sizes_.find(file);
      if (it == sizes_.end()) {
        Completion c;
        c.ok = false;
        c.error = fmt::format("file {} is not in the manifest", file);
        c.issue_time = c.completion_time = sim_.Now();
        on_done(c);
        return;
      }
      backend_.Put(file, it->second, std::move(on_done));
    } else if (request.IsBatch()) {
      backend_.BatchGet(request.file_ids, request.priority, std::move(on_done));
    } else {
      backend_.Get(request.file_ids.front(), request.priority, std::move(on_done));
    }
  }

  StorageBackend& backend_;
  Simulator& sim_;
  const SessionConfig& config_;
  std::unordered_map<FileId, std::uint64_t> sizes_;
  std::vector<std::unique_ptr<Session>> sessions_;
  RunResult result_;
};

}  // namespace

RunResult RunBenchmark(StorageBackend& backend, const DatasetManifest& manifest, const SessionConfig& sessions) {
  sessions.Validate();
  Runner runner(backend, manifest, sessions);
  return runner.Run();
}

void WriteMeasurementsCsv(std::ostream& out, const std::vector<Measurement>& measurements) {
  fmt::print(out, "request_id,session,op,priority,issue_time_us,completion_time_us,latency_us,bytes,file_count,cost,ok,error\n");
  for (const Measurement& m : measurements) {
    std::string error = m.error;
    std::replace(error.begin(), error.end(), ',', ';');
    fmt::print(out, "{},{},{},{},{},{},{},{},{},{:.6f},{},{}\n", m.request_id, m.session, ToString(m.op), m.priority,
               m.issue_time, m.completion_time, m.latency(), m.bytes, m.file_count, m.cost_delta, m.ok ? 1 : 0, error);
  }
}

void WriteMeasurementsCsv(const std::filesystem::path& path, const std::vector<Measurement>& measurements) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error(fmt::format("cannot write {}", path.string()));
  WriteMeasurementsCsv(out, measurements);
  if (!out) throw std::runtime_error(fmt::format("error writing {}", path.string()));
}

void WriteBatchFilesCsv(std::ostream& out, const std::vector<BatchFileRecord>& records) {
  fmt::print(out, "request_id,session,file_id,issue_time_us,completion_time_us,latency_us,bytes,ok\n");
  for (const BatchFileRecord& r : records) {
    fmt::print(out, "{},{},{},{},{},{},{},{}\n", r.request_id, r.session, r.file_id, r.issue_time, r.completion_time,
               r.completion_time - r.issue_time, r.bytes, r.ok ? 1 : 0);
  }
}

void WriteBatchFilesCsv(const std::filesystem::path& path, const std::vector<BatchFileRecord>& records) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error(fmt::format("cannot write {}", path.string()));
  WriteBatchFilesCsv(out, records);
  if (!out) throw std::runtime_error(fmt::format("error writing {}", path.string()));
}

}  // namespace coldbench

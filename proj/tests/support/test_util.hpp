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
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "coldbench/backend/storage_api.hpp"
#include "coldbench/data/dataset.hpp"

namespace coldbench::testing {

// Fresh directory under the system temp dir, removed on destruction.
class TempDir {
 public:
  TempDir() {
    std::random_device rd;
    path_ = std::filesystem::temp_directory_path() / ("coldbench-test-" + std::to_string(rd()) + std::to_string(rd()));
    std::filesystem::create_directories(path_);
  }
  ~TempDir() {
    std::error_code ec;
    std::filesystem::remove_all(path_, ec);
  }
  TempDir(const TempDir&) = delete;
  TempDir& operator=(const TempDir&) = delete;
  const std::filesystem::path& path() const { return path_; }

 private:
  std::filesystem::path path_;
};

// Manifest built from explicit records; summary is recomputed.
inline DatasetManifest ManifestOf(std::vector<FileRecord> records) {
  DatasetManifest m;
  m.spec.total_files = records.size();
  std::uint64_t statics = 0;
  std::uint32_t missions = 1;
  for (const FileRecord& r : records) {
    if (r.set == FileSet::kStatic) ++statics;
    missions = std::max(missions, r.mission + 1);
  }
  m.spec.static_fraction = records.empty() ? 1.0 : static_cast<double>(statics) / static_cast<double>(records.size());
  m.spec.mission_count = missions;
  m.records = std::move(records);
  m.summary = Summarize(m.spec, m.records);
  return m;
}

// Issues one operation, drains the simulator, and returns the completion.
template <typename Issue>
Completion RunOne(Simulator& sim, Issue&& issue) {
  std::optional<Completion> out;
  issue([&out](const Completion& c) { out = c; });
  sim.Run();
  if (!out) throw std::logic_error("operation never completed");
  return *out;
}

}  // namespace coldbench::testing

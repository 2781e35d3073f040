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
#include <iosfwd>
#include <string_view>

#include <json.hpp>

#include "coldbench/data/dataset.hpp"

namespace coldbench {

inline constexpr std::string_view kManifestFormat = "coldbench-manifest/1";

/*
 * On-disk manifest, format "coldbench-manifest/1":
 *
 *   <stem>.csv   header "file_id,size_bytes,mission,set", then one row per file in id order;
 *                set is "static" or "dynamic".
 *   <stem>.json  {"format": "coldbench-manifest/1", "spec": {...}, "summary": {...}}
 */
nlohmann::json DistributionToJson(const FileSizeDistribution& dist);
FileSizeDistribution DistributionFromJson(const nlohmann::json& j);
nlohmann::json DatasetSpecToJson(const DatasetSpec& spec);
DatasetSpec DatasetSpecFromJson(const nlohmann::json& j);
nlohmann::json SummaryToJson(const ManifestSummary& summary);

void WriteManifestCsv(const DatasetManifest& manifest, std::ostream& out);
std::vector<FileRecord> ReadManifestCsv(std::istream& in);

// Writes <dir>/manifest.csv and <dir>/manifest.json. Throws std::runtime_error on I/O failure.
void WriteManifest(const DatasetManifest& manifest, const std::filesystem::path& dir);
// Reads both files back and re-checks the summary against the records.
DatasetManifest ReadManifest(const std::filesystem::path& dir);

// Materializes every file as <dir>/<file_id>.bin filled with pseudo-random bytes derived from
// `seed` and the file id. For adapters that need real objects; the simulator never reads them.
// Throws std::invalid_argument if the manifest holds more than `max_total_bytes`.
void WritePayloads(const DatasetManifest& manifest, const std::filesystem::path& dir, std::uint64_t seed,
                   std::uint64_t max_total_bytes);

}  // namespace coldbench

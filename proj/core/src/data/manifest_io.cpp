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

#include "coldbench/data/manifest_io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include <fmt/format.h>

#include "coldbench/sim/rng.hpp"

namespace coldbench {
namespace {

std::uint64_t ParseU64(std::string_view field, std::size_t line) {
  std::uint64_t value = 0;
  const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
  if (ec != std::errc() || ptr != field.data() + field.size()) {
    throw std::runtime_error(fmt::format("manifest line {}: '{}' is not an unsigned integer", line, field));
  }
  return value;
}

}  // namespace

nlohmann::json DistributionToJson(const FileSizeDistribution& dist) {
  using Kind = FileSizeDistribution::Kind;
  nlohmann::json j;
  switch (dist.kind()) {
    case Kind::kFixed:
      j["kind"] = "fixed";
      j["bytes"] = dist.fixed_bytes();
      break;
    case Kind::kLognormal:
      j["kind"] = "lognormal";
      j["mu"] = dist.mu();
      j["sigma"] = dist.sigma();
      break;
    case Kind::kHistogram: {
      j["kind"] = "histogram";
      j["open_bucket_cap"] = dist.open_bucket_cap();
      nlohmann::json buckets = nlohmann::json::array();
      for (const SizeBucket& b : dist.buckets()) {
        nlohmann::json bucket{{"lo", b.lo_bytes}, {"weight", b.weight}};
        bucket["hi"] = b.hi_bytes ? nlohmann::json(*b.hi_bytes) : nlohmann::json(nullptr);
        buckets.push_back(std::move(bucket));
      }
      j["buckets"] = std::move(buckets);
      break;
    }
  }
  return j;
}

FileSizeDistribution DistributionFromJson(const nlohmann::json& j) {
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "fixed") {
    return FileSizeDistribution::Fixed(j.at("bytes").get<std::uint64_t>());
  }
  if (kind == "lognormal") {
    return FileSizeDistribution::Lognormal(j.at("mu").get<double>(), j.at("sigma").get<double>());
  }
  if (kind == "histogram") {
    std::vector<SizeBucket> buckets;
    for (const auto& b : j.at("buckets")) {
      SizeBucket bucket;
      bucket.lo_bytes = b.at("lo").get<std::uint64_t>();
      if (b.contains("hi") && !b.at("hi").is_null()) {
        bucket.hi_bytes = b.at("hi").get<std::uint64_t>();
      }
      bucket.weight = b.at("weight").get<double>();
      buckets.push_back(bucket);
    }
    return FileSizeDistribution::Histogram(std::move(buckets),
                                           j.value("open_bucket_cap", kDefaultOpenBucketCap));
  }
  throw std::invalid_argument(fmt::format("unknown distribution kind '{}'", kind));
}

nlohmann::json DatasetSpecToJson(const DatasetSpec& spec) {
  return nlohmann::json{{"total_files", spec.total_files},
                        {"static_fraction", spec.static_fraction},
                        {"distribution", DistributionToJson(spec.distribution)},
                        {"mission_count", spec.mission_count},
                        {"mission_skew_s", spec.mission_skew_s},
                        {"seed", spec.seed}};
}

DatasetSpec DatasetSpecFromJson(const nlohmann::json& j) {
  DatasetSpec spec;
  spec.total_files = j.at("total_files").get<std::uint64_t>();
  spec.static_fraction = j.at("static_fraction").get<double>();
  spec.distribution = DistributionFromJson(j.at("distribution"));
  spec.mission_count = j.at("mission_count").get<std::uint32_t>();
  spec.mission_skew_s = j.at("mission_skew_s").get<double>();
  spec.seed = j.at("seed").get<std::uint64_t>();
  return spec;
}

nlohmann::json SummaryToJson(const ManifestSummary& s) {
  return nlohmann::json{{"file_count", s.file_count},       {"static_count", s.static_count},
                        {"dynamic_count", s.dynamic_count}, {"total_bytes", s.total_bytes},
                        {"max_size", s.max_size},           {"mean_size", s.mean_size},
                        {"bucket_counts", s.bucket_counts}, {"mission_counts", s.mission_counts}};
}

void WriteManifestCsv(const DatasetManifest& manifest, std::ostream& out) {
  out << "file_id,size_bytes,mission,set\n";
  for (const FileRecord& r : manifest.records) {
    out << r.file_id << ',' << r.size_bytes << ',' << r.mission << ',' << ToString(r.set) << '\n';
  }
}

std::vector<FileRecord> ReadManifestCsv(std::istream& in) {
  std::vector<FileRecord> records;
  std::string line;
  std::size_t line_no = 0;
  if (!std::getline(in, line) || line != "file_id,size_bytes,mission,set") {
    throw std::runtime_error("manifest csv is missing its header");
  }
  ++line_no;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    std::string_view rest(line);
    std::string_view fields[4];
    for (int i = 0; i < 4; ++i) {
      const auto comma = rest.find(',');
      if ((i < 3) == (comma == std::string_view::npos)) {
        throw std::runtime_error(fmt::format("manifest line {}: expected 4 fields", line_no));
      }
      fields[i] = rest.substr(0, comma);
      rest = comma == std::string_view::npos ? std::string_view{} : rest.substr(comma + 1);
    }
    FileRecord r;
    r.file_id = ParseU64(fields[0], line_no);
    r.size_bytes = ParseU64(fields[1], line_no);
    r.mission = static_cast<std::uint32_t>(ParseU64(fields[2], line_no));
    try {
      r.set = ParseFileSet(fields[3]);
    } catch (const std::invalid_argument& e) {
      throw std::runtime_error(fmt::format("manifest line {}: {}", line_no, e.what()));
    }
    if (r.size_bytes < 1) {
      throw std::runtime_error(fmt::format("manifest line {}: file size must be >= 1", line_no));
    }
    records.push_back(r);
  }
  return records;
}

void WriteManifest(const DatasetManifest& manifest, const std::filesystem::path& dir) {
  std::filesystem::create_directories(dir);
  {
    std::ofstream csv(dir / "manifest.csv");
    if (!csv) throw std::runtime_error(fmt::format("cannot write '{}'", (dir / "manifest.csv").string()));
    WriteManifestCsv(manifest, csv);
  }
  std::ofstream json(dir / "manifest.json");
  if (!json) throw std::runtime_error(fmt::format("cannot write '{}'", (dir / "manifest.json").string()));
  const nlohmann::json header{{"format", kManifestFormat},
                              {"spec", DatasetSpecToJson(manifest.spec)},
                              {"summary", SummaryToJson(manifest.summary)}};
  json << header.dump(2) << '\n';
}

DatasetManifest ReadManifest(const std::filesystem::path& dir) {
  std::ifstream json(dir / "manifest.json");
  if (!json) throw std::runtime_error(fmt::format("cannot read '{}'", (dir / "manifest.json").string()));
  nlohmann::json header;
  try {
    header = nlohmann::json::parse(json);
  } catch (const nlohmann::json::exception& e) {
    throw std::runtime_error(fmt::format("malformed manifest.json: {}", e.what()));
  }
  if (header.value("format", "") != kManifestFormat) {
    throw std::runtime_error(fmt::format("manifest.json is not in format {}", kManifestFormat));
  }
  std::ifstream csv(dir / "manifest.csv");
  if (!csv) throw std::runtime_error(fmt::format("cannot read '{}'", (dir / "manifest.csv").string()));

  DatasetManifest manifest;
  manifest.spec = DatasetSpecFromJson(header.at("spec"));
  manifest.records = ReadManifestCsv(csv);
  manifest.summary = Summarize(manifest.spec, manifest.records);
  if (manifest.records.size() != manifest.spec.total_files) {
    throw std::runtime_error("manifest record count does not match its spec");
  }
  if (SummaryToJson(manifest.summary) != header.at("summary")) {
    throw std::runtime_error("manifest summary does not match its records");
  }
  return manifest;
}

void WritePayloads(const DatasetManifest& manifest, const std::filesystem::path& dir, std::uint64_t seed,
                   std::uint64_t max_total_bytes) {
  if (manifest.summary.total_bytes > max_total_bytes) {
    throw std::invalid_argument(fmt::format("payload of {} bytes exceeds the limit of {} bytes",
                                            manifest.summary.total_bytes, max_total_bytes));
  }
  std::filesystem::create_directories(dir);
  const RngStream base(seed, "datagen/payload");
  std::vector<std::uint64_t> block(1 << 17);  // 1 MiB
  for (const FileRecord& r : manifest.records) {
    const auto path = dir / fmt::format("{}.bin", r.file_id);
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error(fmt::format("cannot write '{}'", path.string()));
    RngStream rng = base.Substream(std::to_string(r.file_id));
    for (std::uint64_t left = r.size_bytes; left > 0;) {
      const std::uint64_t n = std::min<std::uint64_t>(left, block.size() * sizeof(std::uint64_t));
      for (std::size_t i = 0; i < (n + 7) / 8; ++i) block[i] = rng.NextU64();
      out.write(reinterpret_cast<const char*>(block.data()), static_cast<std::streamsize>(n));
      left -= n;
    }
    if (!out) throw std::runtime_error(fmt::format("error writing '{}'", path.string()));
  }
}

}  // namespace coldbench

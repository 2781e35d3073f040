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

#include "coldbench/config/run_config.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <initializer_list>
#include <sstream>

#include <fmt/format.h>
#include <yaml-cpp/yaml.h>

#include "coldbench/backend/trace.hpp"
#include "coldbench/data/manifest_io.hpp"
#include "coldbench/data/size_distribution.hpp"
#include "coldbench/units.hpp"
#include "coldbench/workload/presets.hpp"

namespace coldbench {

DatasetSpec DefaultRunDataset() {
  DatasetSpec spec;
  spec.total_files = 10'000;
  spec.static_fraction = 1.0;
  spec.distribution = DsdaMainDistribution();
  spec.mission_count = 16;
  spec.mission_skew_s = 1.0;
  return spec;
}

namespace {

void CheckKeys(const YAML::Node& node, std::string_view section, std::initializer_list<std::string_view> allowed) {
  if (!node.IsMap()) throw ConfigError(fmt::format("'{}' must be a mapping", section));
  for (const auto& kv : node) {
    const auto key = kv.first.as<std::string>();
    if (std::find(allowed.begin(), allowed.end(), key) == allowed.end()) {
      throw ConfigError(fmt::format("unknown key '{}' in '{}'", key, section));
    }
  }
}

template <typename T>
T As(const YAML::Node& node, std::string_view what) {
  try {
    return node.as<T>();
  } catch (const YAML::Exception&) {
    throw ConfigError(fmt::format("invalid value for '{}'", what));
  }
}

template <typename T>
void Read(const YAML::Node& parent, const char* key, std::string_view section, T& out) {
  if (const YAML::Node node = parent[key]) out = As<T>(node, fmt::format("{}.{}", section, key));
}

std::uint64_t AsBytes(const YAML::Node& node, std::string_view what) {
  try {
    return ParseByteSize(As<std::string>(node, what));
  } catch (const std::invalid_argument& e) {
    throw ConfigError(fmt::format("invalid size for '{}': {}", what, e.what()));
  }
}

SimTime AsSeconds(const YAML::Node& node, std::string_view what, double scale = 1.0) {
  const double v = As<double>(node, what);
  if (!std::isfinite(v)) throw ConfigError(fmt::format("invalid duration for '{}'", what));
  return sim_time::FromSeconds(v * scale);
}

template <typename F>
auto Wrap(std::string_view what, F&& f) {
  try {
    return f();
  } catch (const std::invalid_argument& e) {
    throw ConfigError(fmt::format("{}: {}", what, e.what()));
  } catch (const std::out_of_range& e) {
    throw ConfigError(fmt::format("{}: {}", what, e.what()));
  }
}

std::filesystem::path Resolve(const std::filesystem::path& base, const std::string& p) {
  const std::filesystem::path path(p);
  return path.is_absolute() ? path : base / path;
}

void ParseDataset(const YAML::Node& node, const std::filesystem::path& base, DatasetSection& ds) {
  CheckKeys(node, "dataset",
            {"manifest", "preset", "files", "static_fraction", "missions", "mission_skew", "open_bucket_cap",
             "distribution"});
  if (node["manifest"]) ds.manifest_dir = Resolve(base, As<std::string>(node["manifest"], "dataset.manifest"));
  std::uint64_t cap = kDefaultOpenBucketCap;
  if (node["open_bucket_cap"]) cap = AsBytes(node["open_bucket_cap"], "dataset.open_bucket_cap");
  if (node["preset"] || node["open_bucket_cap"]) {
    Read(node, "preset", "dataset", ds.preset);
    ds.spec.distribution = Wrap("dataset.preset", [&] { return DistributionPreset(ds.preset, cap); });
  }
  if (const YAML::Node dist = node["distribution"]) {
    CheckKeys(dist, "dataset.distribution", {"kind", "size", "mu", "sigma"});
    const auto kind = As<std::string>(dist["kind"], "dataset.distribution.kind");
    if (kind == "fixed") {
      ds.spec.distribution = Wrap("dataset.distribution", [&] {
        return FileSizeDistribution::Fixed(AsBytes(dist["size"], "dataset.distribution.size"));
      });
    } else if (kind == "lognormal") {
      ds.spec.distribution = Wrap("dataset.distribution", [&] {
        return FileSizeDistribution::Lognormal(As<double>(dist["mu"], "dataset.distribution.mu"),
                                               As<double>(dist["sigma"], "dataset.distribution.sigma"));
      });
    } else {
      throw ConfigError(fmt::format("unknown distribution kind '{}' (fixed, lognormal)", kind));
    }
    ds.preset = "custom";
  }
  Read(node, "files", "dataset", ds.spec.total_files);
  Read(node, "static_fraction", "dataset", ds.spec.static_fraction);
  Read(node, "missions", "dataset", ds.spec.mission_count);
  Read(node, "mission_skew", "dataset", ds.spec.mission_skew_s);
}

void ParseWorkload(const YAML::Node& node, RunConfig& config) {
  CheckKeys(node, "workload",
            {"preset", "requests", "read_fraction", "batch_fraction", "batch_min", "batch_max", "priorities",
             "access_skew", "temporal_window", "never_read_fraction", "arrival", "think_time_ms", "rate_per_s",
             "min_size", "max_size"});
  if (node["preset"]) ApplyWorkloadPreset(config, As<std::string>(node["preset"], "workload.preset"));
  WorkloadSpec& w = config.sessions.workload;
  Read(node, "requests", "workload", w.request_count);
  Read(node, "read_fraction", "workload", w.read_fraction);
  Read(node, "batch_fraction", "workload", w.batch_fraction);
  Read(node, "batch_min", "workload", w.batch_size.min);
  Read(node, "batch_max", "workload", w.batch_size.max);
  if (const YAML::Node pri = node["priorities"]) {
    if (!pri.IsMap()) throw ConfigError("'workload.priorities' must map class names to weights");
    w.priorities.clear();
    for (const auto& kv : pri) {
      const auto name = kv.first.as<std::string>();
      w.priorities.push_back(PriorityClass{name, As<double>(kv.second, "workload.priorities." + name)});
    }
  }
  Read(node, "access_skew", "workload", w.access_skew_s);
  Read(node, "temporal_window", "workload", w.temporal_window);
  Read(node, "never_read_fraction", "workload", w.never_read_fraction);
  if (node["arrival"]) {
    const auto arrival = As<std::string>(node["arrival"], "workload.arrival");
    if (arrival == "closed") {
      w.arrival.kind = Arrival::Kind::kClosed;
    } else if (arrival == "open") {
      w.arrival.kind = Arrival::Kind::kOpen;
    } else {
      throw ConfigError(fmt::format("unknown arrival '{}' (closed, open)", arrival));
    }
  }
  if (node["think_time_ms"]) w.arrival.think_time = AsSeconds(node["think_time_ms"], "workload.think_time_ms", 1e-3);
  Read(node, "rate_per_s", "workload", w.arrival.rate_per_s);
  if (node["min_size"]) w.target_size.min_bytes = AsBytes(node["min_size"], "workload.min_size");
  if (node["max_size"]) w.target_size.max_bytes = AsBytes(node["max_size"], "workload.max_size");
}

void ParseSessions(const YAML::Node& node, SessionConfig& sessions) {
  CheckKeys(node, "sessions", {"count", "warmup", "interleave_ingest", "per_file_records", "load_skew"});
  Read(node, "count", "sessions", sessions.session_count);
  Read(node, "warmup", "sessions", sessions.warmup_requests);
  Read(node, "interleave_ingest", "sessions", sessions.interleave_ingest);
  Read(node, "per_file_records", "sessions", sessions.per_file_records);
  Read(node, "load_skew", "sessions", sessions.load_skew_s);
}

void ParseTape(const YAML::Node& node, TapeConfig& tape) {
  CheckKeys(node, "backend.tape",
            {"drives", "exchange_s", "load_s", "max_seek_s", "rate_mb_s", "unload", "idle_timeout_s", "scheduler",
             "capacity", "placement"});
  Read(node, "drives", "backend.tape", tape.drive_count);
  if (node["exchange_s"]) tape.robot_exchange = AsSeconds(node["exchange_s"], "backend.tape.exchange_s");
  if (node["load_s"]) tape.load_thread = AsSeconds(node["load_s"], "backend.tape.load_s");
  if (node["max_seek_s"]) tape.max_seek = AsSeconds(node["max_seek_s"], "backend.tape.max_seek_s");
  Read(node, "rate_mb_s", "backend.tape", tape.transfer_rate_mb_s);
  if (node["unload"]) {
    tape.unload_policy = Wrap("backend.tape.unload", [&] {
      return ParseUnloadPolicy(As<std::string>(node["unload"], "backend.tape.unload"));
    });
  }
  if (node["idle_timeout_s"]) {
    tape.idle_unload_timeout = AsSeconds(node["idle_timeout_s"], "backend.tape.idle_timeout_s");
  }
  if (node["scheduler"]) {
    tape.scheduler = Wrap("backend.tape.scheduler", [&] {
      return ParseTapeScheduler(As<std::string>(node["scheduler"], "backend.tape.scheduler"));
    });
  }
  if (node["capacity"]) tape.tape_capacity_bytes = AsBytes(node["capacity"], "backend.tape.capacity");
  if (node["placement"]) {
    tape.placement = Wrap("backend.tape.placement", [&] {
      return ParsePlacement(As<std::string>(node["placement"], "backend.tape.placement"));
    });
  }
}

void ParseCache(const YAML::Node& node, CacheSection& cache) {
  CheckKeys(node, "backend.cache", {"capacity", "ratio", "policy", "bypass_oversize", "latency_ms", "rate_mb_s"});
  if (node["capacity"]) {
    cache.config.capacity_bytes = AsBytes(node["capacity"], "backend.cache.capacity");
    cache.archive_ratio.reset();
  }
  if (node["ratio"]) cache.archive_ratio = As<double>(node["ratio"], "backend.cache.ratio");
  if (node["policy"]) {
    cache.config.policy =
        Wrap("backend.cache.policy", [&] { return ParseCachePolicy(As<std::string>(node["policy"], "policy")); });
  }
  Read(node, "bypass_oversize", "backend.cache", cache.config.bypass_oversize);
  if (node["latency_ms"]) cache.config.disk_latency = AsSeconds(node["latency_ms"], "backend.cache.latency_ms", 1e-3);
  Read(node, "rate_mb_s", "backend.cache", cache.config.disk_rate_mb_s);
}

void ParseCloud(const YAML::Node& node, CloudSection& cloud) {
  CheckKeys(node, "backend.cloud", {"tier", "latency_model", "sigma", "bandwidth_mb_s", "egress", "egress_per_gb"});
  Read(node, "tier", "backend.cloud", cloud.tier);
  if (node["latency_model"]) {
    cloud.latency_model = Wrap("backend.cloud.latency_model", [&] {
      return ParseLatencyModel(As<std::string>(node["latency_model"], "backend.cloud.latency_model"));
    });
  }
  Read(node, "sigma", "backend.cloud", cloud.lognormal_sigma);
  Read(node, "bandwidth_mb_s", "backend.cloud", cloud.bandwidth_mb_s);
  Read(node, "egress", "backend.cloud", cloud.charge_egress);
  Read(node, "egress_per_gb", "backend.cloud", cloud.egress_per_gb);
}

void ParseHybrid(const YAML::Node& node, BackendSection& backend) {
  CheckKeys(node, "backend.hybrid", {"tiers", "cache", "scrub_interval_days", "scrub_target", "scrub_horizon_days"});
  if (node["tiers"]) backend.hybrid_tiers = As<std::vector<std::string>>(node["tiers"], "backend.hybrid.tiers");
  Read(node, "cache", "backend.hybrid", backend.hybrid_cache);
  if (node["scrub_interval_days"]) {
    backend.scrub_interval = AsSeconds(node["scrub_interval_days"], "backend.hybrid.scrub_interval_days", 86400.0);
  }
  if (node["scrub_target"]) {
    backend.scrub_target = Wrap("backend.hybrid.scrub_target", [&] {
      return ParseScrubTarget(As<std::string>(node["scrub_target"], "backend.hybrid.scrub_target"));
    });
  }
  if (node["scrub_horizon_days"]) {
    backend.scrub_horizon = AsSeconds(node["scrub_horizon_days"], "backend.hybrid.scrub_horizon_days", 86400.0);
  }
}

void ParseBackend(const YAML::Node& node, const std::filesystem::path& base, BackendSection& backend) {
  CheckKeys(node, "backend", {"kind", "catalog", "tape", "cache", "cloud", "hybrid"});
  if (node["kind"]) ParseBackendLabel(As<std::string>(node["kind"], "backend.kind"), backend);
  if (node["catalog"]) {
    backend.catalog_path = Resolve(base, As<std::string>(node["catalog"], "backend.catalog"));
    try {
      backend.catalog = LoadCatalog(*backend.catalog_path);
    } catch (const std::exception& e) {
      throw ConfigError(fmt::format("backend.catalog: {}", e.what()));
    }
  }
  if (node["tape"]) ParseTape(node["tape"], backend.tape);
  if (node["cache"]) ParseCache(node["cache"], backend.cache);
  if (node["cloud"]) {
    const std::string tier = backend.cloud.tier;
    ParseCloud(node["cloud"], backend.cloud);
    // backend.kind names the tier when it is cloud:<tier>; a conflicting cloud.tier is an error.
    if (backend.kind == BackendSection::Kind::kCloud && node["kind"] && node["cloud"]["tier"] &&
        backend.cloud.tier != tier) {
      throw ConfigError(fmt::format("backend.kind selects tier '{}' but backend.cloud.tier is '{}'", tier,
                                    backend.cloud.tier));
    }
  }
  if (node["hybrid"]) ParseHybrid(node["hybrid"], backend);
}

void ParseOutput(const YAML::Node& node, const std::filesystem::path& base, OutputSection& output) {
  CheckKeys(node, "output", {"dir", "formats", "measurements", "trace"});
  if (node["dir"]) output.dir = Resolve(base, As<std::string>(node["dir"], "output.dir"));
  if (node["formats"]) {
    output.formats.clear();
    for (const auto& f : As<std::vector<std::string>>(node["formats"], "output.formats")) {
      output.formats.push_back(Wrap("output.formats", [&] { return ParseEmitFormat(f); }));
    }
  }
  Read(node, "measurements", "output", output.measurements_csv);
  Read(node, "trace", "output", output.trace);
}

std::string_view EmitFormatName(EmitFormat f) {
  switch (f) {
    case EmitFormat::kJson: return "json";
    case EmitFormat::kCsv: return "csv";
    case EmitFormat::kPlotData: return "plot-data";
  }
  return "json";
}

}  // namespace

std::string BackendSection::Label() const {
  switch (kind) {
    case Kind::kTape: return "tape";
    case Kind::kCacheTape: return "cache+tape";
    case Kind::kCloud: return "cloud:" + cloud.tier;
    case Kind::kHybrid: return "hybrid";
  }
  return "tape";
}

void ParseBackendLabel(std::string_view label, BackendSection& backend) {
  if (label == "tape") {
    backend.kind = BackendSection::Kind::kTape;
  } else if (label == "cache+tape") {
    backend.kind = BackendSection::Kind::kCacheTape;
  } else if (label == "hybrid") {
    backend.kind = BackendSection::Kind::kHybrid;
  } else if (label.starts_with("cloud:") && label.size() > 6) {
    backend.kind = BackendSection::Kind::kCloud;
    backend.cloud.tier = std::string(label.substr(6));
  } else {
    throw ConfigError(fmt::format("unknown backend '{}' (tape, cache+tape, cloud:<tier>, hybrid)", label));
  }
}

CloudTierConfig CloudSection::Resolve(const PricingCatalog& catalog, std::string_view tier_name) const {
  CloudTierConfig config = Wrap("cloud tier", [&] { return CloudTierConfig::ForTier(catalog.Find(tier_name)); });
  if (latency_model) config.latency_model = *latency_model;
  config.lognormal_sigma = lognormal_sigma;
  config.bandwidth_mb_s = bandwidth_mb_s;
  config.charge_egress = charge_egress;
  config.egress_per_gb = egress_per_gb;
  Wrap("cloud tier", [&] {
    config.Validate();
    return 0;
  });
  return config;
}

void ApplyWorkloadPreset(RunConfig& config, std::string_view name) {
  const WorkloadOverrides overrides = Wrap("workload preset", [&] { return Preset(name); });
  config.sessions.workload = overrides.ApplyTo(config.sessions.workload);
  config.workload_preset = std::string(name);
}

void RunConfig::Finalize() {
  dataset.spec.seed = seed;
  sessions.workload.seed = seed;
  Wrap("dataset", [&] {
    if (!dataset.manifest_dir) dataset.spec.Validate();
    return 0;
  });
  Wrap("sessions", [&] {
    sessions.Validate();
    return 0;
  });
  Wrap("backend", [&] {
    backend.catalog.Validate();
    backend.tape.Validate();
    backend.cache.config.Validate();
    if (backend.cache.archive_ratio && !(*backend.cache.archive_ratio > 0.0)) {
      throw std::invalid_argument("cache ratio must be > 0");
    }
    if (backend.kind == BackendSection::Kind::kCloud) backend.cloud.Resolve(backend.catalog, backend.cloud.tier);
    if (backend.kind == BackendSection::Kind::kHybrid) {
      if (backend.hybrid_tiers.empty()) throw std::invalid_argument("hybrid needs at least one cloud tier");
      for (const std::string& t : backend.hybrid_tiers) backend.cloud.Resolve(backend.catalog, t);
    }
    return 0;
  });
  if (dataset.manifest_dir && !std::filesystem::is_directory(*dataset.manifest_dir)) {
    throw ConfigError(fmt::format("manifest directory {} does not exist", dataset.manifest_dir->string()));
  }
  if (output.formats.empty() && !output.measurements_csv) throw ConfigError("output selects nothing to write");
}

nlohmann::json RunConfig::ToJson() const {
  nlohmann::json j;
  j["seed"] = seed;
  if (dataset.manifest_dir) {
    j["dataset"] = {{"manifest", dataset.manifest_dir->generic_string()}};
  } else {
    j["dataset"] = DatasetSpecToJson(dataset.spec);
    j["dataset"]["preset"] = dataset.preset;
  }
  const WorkloadSpec& w = sessions.workload;
  nlohmann::json priorities = nlohmann::json::array();
  for (const PriorityClass& p : w.priorities) priorities.push_back({{"name", p.name}, {"weight", p.weight}});
  j["workload"] = {
      {"preset", workload_preset.value_or("")},
      {"requests", w.request_count},
      {"read_fraction", w.read_fraction},
      {"batch_fraction", w.batch_fraction},
      {"batch_min", w.batch_size.min},
      {"batch_max", w.batch_size.max},
      {"priorities", priorities},
      {"access_skew", w.access_skew_s},
      {"temporal_window", w.temporal_window},
      {"never_read_fraction", w.never_read_fraction},
      {"arrival", w.arrival.kind == Arrival::Kind::kOpen ? "open" : "closed"},
      {"think_time_us", w.arrival.think_time},
      {"rate_per_s", w.arrival.rate_per_s},
      {"min_size", w.target_size.min_bytes},
      {"max_size", w.target_size.max_bytes ? nlohmann::json(*w.target_size.max_bytes) : nlohmann::json(nullptr)},
  };
  j["sessions"] = {{"count", sessions.session_count},
                   {"warmup", sessions.warmup_requests},
                   {"interleave_ingest", sessions.interleave_ingest},
                   {"per_file_records", sessions.per_file_records},
                   {"load_skew", sessions.load_skew_s}};
  const TapeConfig& t = backend.tape;
  nlohmann::json b = {{"kind", backend.Label()}, {"catalog", backend.catalog.name}};
  if (backend.kind != BackendSection::Kind::kCloud) {
    b["tape"] = {{"drives", t.drive_count},
                 {"exchange_us", t.robot_exchange},
                 {"load_us", t.load_thread},
                 {"max_seek_us", t.max_seek},
                 {"rate_mb_s", t.transfer_rate_mb_s},
                 {"unload", t.unload_policy == TapeConfig::UnloadPolicy::kLazy ? "lazy" : "immediate"},
                 {"idle_timeout_us", t.idle_unload_timeout},
                 {"scheduler", ToString(t.scheduler)},
                 {"capacity", t.tape_capacity_bytes},
                 {"placement",
                  t.placement == TapeConfig::Placement::kRandom ? "random" : "mission-contiguous"}};
  }
  const bool has_cache = backend.kind == BackendSection::Kind::kCacheTape ||
                         (backend.kind == BackendSection::Kind::kHybrid && backend.hybrid_cache);
  if (has_cache) {
    const CacheConfig& c = backend.cache.config;
    b["cache"] = {{"capacity", c.capacity_bytes},
                  {"ratio", backend.cache.archive_ratio ? nlohmann::json(*backend.cache.archive_ratio)
                                                        : nlohmann::json(nullptr)},
                  {"policy", c.policy == CacheConfig::Policy::kLru ? "lru" : "fifo"},
                  {"bypass_oversize", c.bypass_oversize},
                  {"latency_us", c.disk_latency},
                  {"rate_mb_s", c.disk_rate_mb_s}};
  }
  if (backend.kind == BackendSection::Kind::kCloud || backend.kind == BackendSection::Kind::kHybrid) {
    const CloudSection& c = backend.cloud;
    std::string model = "tier-default";
    if (c.latency_model) {
      switch (*c.latency_model) {
        case CloudTierConfig::LatencyModel::kConstant: model = "constant"; break;
        case CloudTierConfig::LatencyModel::kLognormal: model = "lognormal"; break;
        case CloudTierConfig::LatencyModel::kRehydration: model = "rehydration"; break;
      }
    }
    b["cloud"] = {{"latency_model", model},
                  {"sigma", c.lognormal_sigma},
                  {"bandwidth_mb_s", c.bandwidth_mb_s},
                  {"egress", c.charge_egress},
                  {"egress_per_gb", c.egress_per_gb}};
  }
  if (backend.kind == BackendSection::Kind::kHybrid) {
    b["hybrid"] = {{"tiers", backend.hybrid_tiers},
                   {"cache", backend.hybrid_cache},
                   {"scrub_interval_us", backend.scrub_interval},
                   {"scrub_target", backend.scrub_target == HybridConfig::ScrubTarget::kCloud ? "cloud" : "local"},
                   {"scrub_horizon_us", backend.scrub_horizon}};
  }
  j["backend"] = b;
  nlohmann::json formats = nlohmann::json::array();
  for (EmitFormat f : output.formats) formats.push_back(EmitFormatName(f));
  // The output directory is left out so that runs differing only in destination echo identically.
  j["output"] = {{"formats", formats}, {"measurements", output.measurements_csv}, {"trace", output.trace}};
  return j;
}

RunConfig ParseRunConfig(std::string_view yaml_text, const std::filesystem::path& base_dir) {
  YAML::Node root;
  try {
    root = YAML::Load(std::string(yaml_text));
  } catch (const YAML::Exception& e) {
    throw ConfigError(fmt::format("malformed config: {}", e.what()));
  }
  RunConfig config;
  if (!root || root.IsNull()) return config;
  CheckKeys(root, "config", {"seed", "dataset", "workload", "sessions", "backend", "output"});
  Read(root, "seed", "config", config.seed);
  if (root["dataset"]) ParseDataset(root["dataset"], base_dir, config.dataset);
  if (root["workload"]) ParseWorkload(root["workload"], config);
  if (root["sessions"]) ParseSessions(root["sessions"], config.sessions);
  if (root["backend"]) ParseBackend(root["backend"], base_dir, config.backend);
  if (root["output"]) ParseOutput(root["output"], base_dir, config.output);
  return config;
}

RunConfig LoadRunConfig(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError(fmt::format("cannot read config {}", path.string()));
  std::stringstream buffer;
  buffer << in.rdbuf();
  return ParseRunConfig(buffer.str(), path.parent_path().empty() ? "." : path.parent_path());
}

DatasetManifest MaterializeDataset(const RunConfig& config) {
  if (config.dataset.manifest_dir) return ReadManifest(*config.dataset.manifest_dir);
  return GenerateDataset(config.dataset.spec);
}

std::unique_ptr<StorageBackend> MakeBackend(Simulator& sim, const RunConfig& config, const DatasetManifest& manifest) {
  const BackendSection& b = config.backend;
  CacheConfig cache = b.cache.config;
  if (b.cache.archive_ratio) {
    cache.capacity_bytes =
        static_cast<std::uint64_t>(std::floor(static_cast<double>(manifest.StaticBytes()) / *b.cache.archive_ratio));
  }
  switch (b.kind) {
    case BackendSection::Kind::kTape:
      return std::make_unique<TapeLibrary>(sim, b.tape, config.seed);
    case BackendSection::Kind::kCacheTape:
      return std::make_unique<CachedBackend>(sim, cache, std::make_unique<TapeLibrary>(sim, b.tape, config.seed));
    case BackendSection::Kind::kCloud:
      return std::make_unique<CloudBackend>(sim, b.cloud.Resolve(b.catalog, b.cloud.tier), config.seed);
    case BackendSection::Kind::kHybrid: {
      HybridConfig hybrid;
      hybrid.tape = b.tape;
      if (b.hybrid_cache) hybrid.cache = cache;
      for (const std::string& tier : b.hybrid_tiers) hybrid.cloud_copies.push_back(b.cloud.Resolve(b.catalog, tier));
      hybrid.scrub_interval = b.scrub_interval;
      hybrid.scrub_target = b.scrub_target;
      auto backend = std::make_unique<HybridBackend>(sim, std::move(hybrid), config.seed);
      backend->SchedulePeriodicScrubs(sim.Now() + b.scrub_horizon);
      return backend;
    }
  }
  throw ConfigError("unknown backend kind");
}

RunOutcome ExecuteRun(const RunConfig& config, bool write) {
  const DatasetManifest manifest = MaterializeDataset(config);
  Simulator sim;
  std::unique_ptr<StorageBackend> backend = MakeBackend(sim, config, manifest);

  std::ofstream trace_file;
  std::unique_ptr<TraceSink> trace;
  if (write && config.output.trace) {
    std::filesystem::create_directories(config.output.dir);
    trace_file.open(config.output.dir / "trace.csv");
    if (!trace_file) throw std::runtime_error(fmt::format("cannot write {}", (config.output.dir / "trace.csv").string()));
    trace = std::make_unique<TraceSink>(trace_file);
    backend->SetTrace(trace.get());
  }

  Preload(*backend, manifest);
  RunOutcome outcome;
  outcome.result = RunBenchmark(*backend, manifest, config.sessions);
  outcome.report = Summarize(outcome.result.measurements, backend->Ledger(outcome.result.end_time), backend->Stats(),
                             config.ToJson(), config.seed);
  outcome.report.notes = outcome.result.warnings;
  std::vector<std::string> tiers;
  if (config.backend.kind == BackendSection::Kind::kCloud) tiers.push_back(config.backend.cloud.tier);
  if (config.backend.kind == BackendSection::Kind::kHybrid) tiers = config.backend.hybrid_tiers;
  for (const std::string& tier : tiers) {
    const TierPricing& pricing = config.backend.catalog.Find(tier);
    if (!pricing.note.empty()) outcome.report.notes.push_back(fmt::format("{}: {}", tier, pricing.note));
  }

  if (write) {
    for (EmitFormat f : config.output.formats) {
      const auto files = Emit(outcome.report, outcome.result.measurements, f, config.output.dir);
      outcome.files.insert(outcome.files.end(), files.begin(), files.end());
    }
    if (config.output.measurements_csv) {
      std::filesystem::create_directories(config.output.dir);
      const auto path = config.output.dir / "measurements.csv";
      WriteMeasurementsCsv(path, outcome.result.measurements);
      outcome.files.push_back(path);
    }
    if (config.sessions.per_file_records) {
      std::filesystem::create_directories(config.output.dir);
      const auto path = config.output.dir / "batch_files.csv";
      WriteBatchFilesCsv(path, outcome.result.batch_files);
      outcome.files.push_back(path);
    }
    if (trace) outcome.files.push_back(config.output.dir / "trace.csv");
  }
  return outcome;
}

}  // namespace coldbench

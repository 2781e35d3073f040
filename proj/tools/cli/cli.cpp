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

#include "cli/cli.hpp"

#include <optional>
#include <ostream>
#include <stdexcept>

#include <CLI11.hpp>
#include <fmt/format.h>
#include <fmt/ostream.h>
#include <json.hpp>

#include "coldbench/config/run_config.hpp"
#include "coldbench/cost/cost_model.hpp"
#include "coldbench/cost/pricing.hpp"
#include "coldbench/data/manifest_io.hpp"
#include "coldbench/data/size_distribution.hpp"
#include "coldbench/units.hpp"

namespace coldbench::cli {
namespace {

struct GenerateArgs {
  std::string config;
  std::string preset;
  std::uint64_t files = 0;
  double static_fraction = 1.0;
  std::uint32_t missions = 1;
  double mission_skew = 0.0;
  std::uint64_t seed = 0;
  std::string out = "manifest";
  bool payload = false;
  std::string payload_limit = "1GiB";
};

struct RunArgs {
  std::string config;
  std::string workload;
  std::string backend;
  std::uint64_t seed = 0;
  std::string out;
  std::uint32_t sessions = 1;
  std::uint64_t requests = 0;
  std::uint64_t files = 0;
  std::uint64_t warmup = 0;
  std::string manifest;
  std::vector<std::string> formats;
  std::string scheduler;
  double never_read = 0.0;
  bool trace = false;
};

struct CostArgs {
  std::string tier;
  std::string capacity = "1PiB";
  double months = 12.0;
  double reads = 1.0;
  std::string blob = "256MiB";
  std::string catalog;
  bool egress = false;
  double egress_rate = 0.05;
  bool moveout_curve = false;
  bool migrate = false;
};

PricingCatalog LoadCatalogArg(const std::string& path) {
  if (path.empty()) return Azure2019Catalog();
  try {
    return LoadCatalog(path);
  } catch (const std::exception& e) {
    throw ConfigError(e.what());
  }
}

CostScenario ScenarioFromArgs(const CostArgs& a) {
  CostScenario s;
  s.capacity_gb = ParseCapacityGb(a.capacity);
  s.months = a.months;
  s.full_reads = a.reads;
  s.blob_size_gb = ParseCapacityGb(a.blob);
  s.egress_per_gb = a.egress_rate;
  s.Validate();
  return s;
}

nlohmann::json ScenarioEcho(const std::string& command, const CostArgs& a, const PricingCatalog& catalog) {
  return {{"command", command},   {"catalog", catalog.name}, {"tier", a.tier},   {"capacity", a.capacity},
          {"months", a.months},   {"reads", a.reads},        {"blob", a.blob},   {"egress", a.egress},
          {"egress_rate", a.egress_rate}};
}

int CmdGenerate(const GenerateArgs& a, const CLI::App& cmd, std::ostream& out) {
  if (a.config.empty() && !cmd.count("--preset") && !cmd.count("--files")) {
    throw CLI::RequiredError("generate needs --config or --preset/--files");
  }
  RunConfig config = a.config.empty() ? RunConfig{} : LoadRunConfig(a.config);
  DatasetSection& ds = config.dataset;
  if (cmd.count("--preset")) {
    ds.preset = a.preset;
    try {
      ds.spec.distribution = DistributionPreset(a.preset);
    } catch (const std::exception& e) {
      throw ConfigError(e.what());
    }
  }
  if (cmd.count("--files")) ds.spec.total_files = a.files;
  if (cmd.count("--static-fraction")) ds.spec.static_fraction = a.static_fraction;
  if (cmd.count("--missions")) ds.spec.mission_count = a.missions;
  if (cmd.count("--mission-skew")) ds.spec.mission_skew_s = a.mission_skew;
  if (cmd.count("--seed")) config.seed = a.seed;
  if (ds.spec.total_files == 0) throw ConfigError("--files must be >= 1");
  config.Finalize();
  if (ds.manifest_dir) throw ConfigError("generate cannot use a config whose dataset is an existing manifest");

  const DatasetManifest manifest = GenerateDataset(ds.spec);
  WriteManifest(manifest, a.out);
  if (a.payload) {
    std::uint64_t limit = 0;
    try {
      limit = ParseByteSize(a.payload_limit);
      WritePayloads(manifest, std::filesystem::path(a.out) / "payload", config.seed, limit);
    } catch (const std::invalid_argument& e) {
      throw ConfigError(e.what());
    }
  }
  const ManifestSummary& s = manifest.summary;
  fmt::print(out, "wrote {} files ({} static, {} dynamic, {}) to {}\n", s.file_count, s.static_count, s.dynamic_count,
             FormatBytes(s.total_bytes), a.out);
  fmt::print(out, "mean size {:.0f} bytes, largest {}\n", s.mean_size, FormatBytes(s.max_size));
  const auto probs = ds.spec.distribution.BucketProbabilities();
  if (!probs.empty()) {
    fmt::print(out, "{:<20} {:>10} {:>9} {:>9}\n", "bucket", "files", "share%", "target%");
    for (std::size_t i = 0; i < probs.size(); ++i) {
      fmt::print(out, "{:<20} {:>10} {:>9.3f} {:>9.3f}\n", ds.spec.distribution.BucketLabel(i), s.bucket_counts[i],
                 100.0 * static_cast<double>(s.bucket_counts[i]) / static_cast<double>(s.file_count),
                 100.0 * probs[i]);
    }
  }
  return kExitOk;
}

int CmdRun(const RunArgs& a, const CLI::App& cmd, std::ostream& out) {
  RunConfig config = a.config.empty() ? RunConfig{} : LoadRunConfig(a.config);
  if (cmd.count("--workload")) ApplyWorkloadPreset(config, a.workload);
  if (cmd.count("--backend")) ParseBackendLabel(a.backend, config.backend);
  if (cmd.count("--seed")) config.seed = a.seed;
  if (cmd.count("--out")) config.output.dir = a.out;
  if (cmd.count("--sessions")) config.sessions.session_count = a.sessions;
  if (cmd.count("--requests")) config.sessions.workload.request_count = a.requests;
  if (cmd.count("--warmup")) config.sessions.warmup_requests = a.warmup;
  if (cmd.count("--never-read")) config.sessions.workload.never_read_fraction = a.never_read;
  if (cmd.count("--files")) {
    config.dataset.manifest_dir.reset();
    config.dataset.spec.total_files = a.files;
  }
  if (cmd.count("--manifest")) config.dataset.manifest_dir = std::filesystem::path(a.manifest);
  if (cmd.count("--scheduler")) {
    try {
      config.backend.tape.scheduler = ParseTapeScheduler(a.scheduler);
    } catch (const std::exception& e) {
      throw ConfigError(e.what());
    }
  }
  if (cmd.count("--format")) {
    config.output.formats.clear();
    for (const std::string& f : a.formats) {
      try {
        config.output.formats.push_back(ParseEmitFormat(f));
      } catch (const std::exception& e) {
        throw ConfigError(e.what());
      }
    }
  }
  if (cmd.count("--trace")) config.output.trace = a.trace;
  config.Finalize();

  const RunOutcome outcome = ExecuteRun(config);
  const BenchReport& r = outcome.report;
  const LatencyGroup* all = r.FindLatency("all", "all");
  const double p99_ms = all != nullptr ? static_cast<double>(all->stats.p99) / 1e3 : 0.0;
  fmt::print(out, "{}: {} requests ({} failed), p99 {:.3f} ms, bandwidth {:.3f} MB/s, total cost {}\n",
             config.backend.Label(), r.request_count, r.failed_count, p99_ms,
             r.sustained_bandwidth_bytes_per_s / kBytesPerMB, r.cost.total.ToString());
  for (const std::string& note : r.notes) fmt::print(out, "note: {}\n", note);
  fmt::print(out, "outputs in {}\n", config.output.dir.string());
  return kExitOk;
}

void PrintCostReport(std::ostream& out, const TierPricing& pricing, const CostScenario& s, const CostReport& r) {
  fmt::print(out, "tier {}: {} GB for {} months, {} full read(s), {} blobs of {} GB\n", pricing.tier_name,
             s.capacity_gb, s.months, s.full_reads, s.BlobCount(), s.blob_size_gb);
  fmt::print(out, "  {:<10} {:>16}\n", "storage", r.storage_cost.ToString());
  fmt::print(out, "  {:<10} {:>16}\n", "retrieval", r.retrieval_cost.ToString());
  fmt::print(out, "  {:<10} {:>16}\n", "requests", r.request_cost.ToString());
  fmt::print(out, "  {:<10} {:>16}\n", "egress", r.egress_cost.ToString());
  fmt::print(out, "  {:<10} {:>16}\n", "total", r.total.ToString());
  fmt::print(out, "  breakdown: storage {:.2f}%, access {:.2f}%\n", 100.0 * r.storage_fraction,
             100.0 * r.access_fraction);
  if (!pricing.note.empty()) fmt::print(out, "  note: {}\n", pricing.note);
}

int CmdCost(const CostArgs& a, std::ostream& out) {
  const PricingCatalog catalog = LoadCatalogArg(a.catalog);
  const TierPricing& pricing = catalog.Find(a.tier);
  const CostScenario scenario = ScenarioFromArgs(a);
  fmt::print(out, "# config {}\n", ScenarioEcho("cost", a, catalog).dump());
  if (a.moveout_curve) {
    fmt::print(out, "moving-out overhead for tier {}\n", pricing.tier_name);
    fmt::print(out, "{:>12} {:>12}\n", "overhead%", "months");
    for (const MoveoutPoint& p : MoveoutCurve(pricing)) {
      fmt::print(out, "{:>12.0f} {:>12.4f}\n", 100.0 * p.overhead, p.months);
    }
    return kExitOk;
  }
  if (a.migrate) {
    for (bool egress : {false, true}) {
      const MigrationCost m = ComputeMigrationCost(pricing, scenario, egress);
      fmt::print(out, "migration {:<16} {:>14}  = {:.2f} months of storage\n",
                 egress ? "with egress" : "without egress", m.cost.ToString(), m.equivalent_storage_months);
    }
    return kExitOk;
  }
  PrintCostReport(out, pricing, scenario, TotalCost(pricing, scenario, CostOptions{a.egress}));
  return kExitOk;
}

int CmdAdvise(const CostArgs& a, std::ostream& out) {
  const PricingCatalog catalog = LoadCatalogArg(a.catalog);
  const CostScenario scenario = ScenarioFromArgs(a);
  fmt::print(out, "# config {}\n", ScenarioEcho("advise", a, catalog).dump());
  fmt::print(out, "{:<4} {:<10} {:>16} {:>16} {:>16} {:>12}\n", "rank", "tier", "total", "storage", "retrieval",
             "requests");
  int rank = 1;
  for (const TierAdvice& advice : AdviseTier(catalog.tiers, scenario)) {
    const CostReport& r = advice.report;
    fmt::print(out, "{:<4} {:<10} {:>16} {:>16} {:>16} {:>12}\n", rank++, advice.tier.tier_name, r.total.ToString(),
               r.storage_cost.ToString(), r.retrieval_cost.ToString(), r.request_cost.ToString());
  }
  return kExitOk;
}

void AddScenarioOptions(CLI::App* cmd, CostArgs& a) {
  cmd->add_option("--capacity", a.capacity, "Stored volume, e.g. 1PiB, 500TB (plain numbers are GB)")
      ->capture_default_str();
  cmd->add_option("--months", a.months, "Months of storage (M)")->capture_default_str();
  cmd->add_option("--reads", a.reads, "Full read-outs over the period (R)")->capture_default_str();
  cmd->add_option("--blob", a.blob, "Object size")->capture_default_str();
  cmd->add_option("--catalog", a.catalog, "YAML pricing catalog (default: built-in azure-2019)")
      ->check(CLI::ExistingFile);
  cmd->add_option("--egress-rate", a.egress_rate, "Egress price per GB")->capture_default_str();
}

}  // namespace

int Main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Cold storage archive benchmark", "coldbench"};
  app.require_subcommand(1);

  GenerateArgs gen_args;
  CLI::App* gen = app.add_subcommand("generate", "Generate a synthetic dataset manifest");
  gen->add_option("--config", gen_args.config, "Run config file (its dataset and seed sections are used)")
      ->check(CLI::ExistingFile);
  gen->add_option("--preset", gen_args.preset, "Size distribution preset (dsda-main)");
  gen->add_option("--files", gen_args.files, "Number of files");
  gen->add_option("--static-fraction", gen_args.static_fraction, "Share of files loaded before the run");
  gen->add_option("--missions", gen_args.missions, "Number of missions");
  gen->add_option("--mission-skew", gen_args.mission_skew, "Zipf exponent of mission sizes");
  gen->add_option("--seed", gen_args.seed, "Random seed");
  gen->add_option("--out", gen_args.out, "Output directory")->capture_default_str();
  gen->add_flag("--payload", gen_args.payload, "Also write every file with seeded pseudo-random bytes under <out>/payload");
  gen->add_option("--payload-limit", gen_args.payload_limit, "Refuse payloads larger than this")->capture_default_str();

  RunArgs run_args;
  CLI::App* run = app.add_subcommand("run", "Run a benchmark against a simulated backend");
  run->add_option("--config", run_args.config, "Run config file")->check(CLI::ExistingFile);
  run->add_option("--workload", run_args.workload, "Workload preset (cp1-skew, cp2-batch, cp3-priority, cp4-smallfile)");
  run->add_option("--backend", run_args.backend, "tape, cache+tape, cloud:<tier> or hybrid");
  run->add_option("--seed", run_args.seed, "Random seed");
  run->add_option("--out", run_args.out, "Output directory");
  run->add_option("--sessions", run_args.sessions, "Concurrent sessions");
  run->add_option("--requests", run_args.requests, "Requests per session");
  run->add_option("--warmup", run_args.warmup, "Unmeasured leading requests per session");
  run->add_option("--never-read", run_args.never_read, "Share of static files never read");
  run->add_option("--files", run_args.files, "Generate a dataset of this many files");
  run->add_option("--manifest", run_args.manifest, "Use an existing manifest directory")->check(CLI::ExistingDirectory);
  run->add_option("--scheduler", run_args.scheduler, "Tape scheduler (fifo, priority, tape-batched)");
  run->add_option("--format", run_args.formats, "Report formats (json, csv, plot-data)");
  run->add_flag("--trace", run_args.trace, "Write an event trace");

  CostArgs cost_args;
  CLI::App* cost = app.add_subcommand("cost", "Cost of keeping and reading an archive in one cloud tier");
  cost->add_option("--tier", cost_args.tier, "Tier name from the catalog")->required();
  AddScenarioOptions(cost, cost_args);
  cost->add_flag("--egress", cost_args.egress, "Include egress charges");
  cost->add_flag("--moveout-curve", cost_args.moveout_curve, "Print months of storage per moving-out overhead");
  cost->add_flag("--migrate", cost_args.migrate, "Print the cost of reading everything out, with and without egress");

  CostArgs advise_args;
  CLI::App* advise = app.add_subcommand("advise", "Rank catalog tiers by total cost for a scenario");
  AddScenarioOptions(advise, advise_args);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*gen) return CmdGenerate(gen_args, *gen, out);
    if (*run) return CmdRun(run_args, *run, out);
    if (*cost) return CmdCost(cost_args, out);
    if (*advise) return CmdAdvise(advise_args, out);
  } catch (const CLI::Error& e) {
    fmt::print(err, "error: {}\n", e.what());
    return kExitUsage;
  } catch (const ConfigError& e) {
    fmt::print(err, "config error: {}\n", e.what());
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    fmt::print(err, "invalid argument: {}\n", e.what());
    return kExitUsage;
  } catch (const std::out_of_range& e) {
    fmt::print(err, "invalid argument: {}\n", e.what());
    return kExitUsage;
  } catch (const std::exception& e) {
    fmt::print(err, "error: {}\n", e.what());
    return kExitRuntime;
  }
  return kExitUsage;
}

}  // namespace coldbench::cli

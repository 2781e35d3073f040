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

#include "coldbench/cost/pricing.hpp"

#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <fmt/format.h>
#include <yaml-cpp/yaml.h>

namespace coldbench {
namespace {

void RequireRate(double value, std::string_view what, std::string_view tier) {
  if (!std::isfinite(value) || value < 0.0) {
    throw std::invalid_argument(fmt::format("tier '{}': {} must be a finite value >= 0", tier, what));
  }
}

}  // namespace

void TierPricing::Validate() const {
  if (tier_name.empty()) {
    throw std::invalid_argument("tier name must not be empty");
  }
  RequireRate(storage_per_gb_month, "storage_per_gb_month", tier_name);
  RequireRate(retrieval_per_gb, "retrieval_per_gb", tier_name);
  RequireRate(get_per_10k_requests, "get_per_10k", tier_name);
  if (nominal_latency.kind == NominalLatency::Kind::kFixed && nominal_latency.fixed < 0) {
    throw std::invalid_argument(fmt::format("tier '{}': latency must be >= 0", tier_name));
  }
}

const TierPricing& PricingCatalog::Find(std::string_view tier_name) const {
  for (const TierPricing& tier : tiers) {
    if (tier.tier_name == tier_name) {
      return tier;
    }
  }
  std::string known;
  for (const TierPricing& tier : tiers) {
    known += known.empty() ? tier.tier_name : ", " + tier.tier_name;
  }
  throw std::out_of_range(fmt::format("unknown tier '{}' in catalog '{}' (known: {})", tier_name, name, known));
}

void PricingCatalog::Validate() const {
  if (tiers.empty()) {
    throw std::invalid_argument(fmt::format("catalog '{}' has no tiers", name));
  }
  for (std::size_t i = 0; i < tiers.size(); ++i) {
    tiers[i].Validate();
    for (std::size_t j = 0; j < i; ++j) {
      if (tiers[i].tier_name == tiers[j].tier_name) {
        throw std::invalid_argument(fmt::format("catalog '{}' lists tier '{}' twice", name, tiers[i].tier_name));
      }
    }
  }
}

PricingCatalog Azure2019Catalog() {
  PricingCatalog catalog;
  catalog.name = std::string(kDefaultCatalogName);
  catalog.tiers = {
      TierPricing{"archive", 0.0045, 0.02, 0.5, NominalLatency::Hours(),
                  "reference totals for this tier ($79K/year, 71/29 storage/access split, $23K move-out) "
                  "imply about $0.022/GB retrieval; the list price of $0.02/GB is used here"},
      TierPricing{"cool", 0.0334, 0.01, 0.01, NominalLatency::Fixed(sim_time::FromMillis(61.4)), ""},
      TierPricing{"hot", 0.0422, 0.0, 0.004, NominalLatency::Fixed(sim_time::FromMillis(5.3)), ""},
  };
  return catalog;
}

PricingCatalog ParseCatalog(std::string_view yaml_text) {
  PricingCatalog catalog;
  try {
    const YAML::Node root = YAML::Load(std::string(yaml_text));
    catalog.name = root["name"] ? root["name"].as<std::string>() : "custom";
    const YAML::Node tiers = root["tiers"];
    if (!tiers || !tiers.IsSequence()) {
      throw std::runtime_error("catalog needs a 'tiers' list");
    }
    for (const YAML::Node& node : tiers) {
      TierPricing tier;
      tier.tier_name = node["name"].as<std::string>();
      tier.storage_per_gb_month = node["storage_per_gb_month"].as<double>();
      tier.retrieval_per_gb = node["retrieval_per_gb"] ? node["retrieval_per_gb"].as<double>() : 0.0;
      tier.get_per_10k_requests = node["get_per_10k"] ? node["get_per_10k"].as<double>() : 0.0;
      if (node["latency_ms"]) {
        tier.nominal_latency = NominalLatency::Fixed(sim_time::FromMillis(node["latency_ms"].as<double>()));
      } else if (node["latency"] && node["latency"].as<std::string>() == "hours") {
        tier.nominal_latency = NominalLatency::Hours();
      } else if (node["latency"]) {
        throw std::runtime_error(fmt::format("tier '{}': latency must be 'hours' or given as latency_ms",
                                             tier.tier_name));
      }
      if (node["note"]) {
        tier.note = node["note"].as<std::string>();
      }
      catalog.tiers.push_back(std::move(tier));
    }
  } catch (const YAML::Exception& e) {
    throw std::runtime_error(fmt::format("malformed pricing catalog: {}", e.what()));
  }
  try {
    catalog.Validate();
  } catch (const std::invalid_argument& e) {
    throw std::runtime_error(e.what());
  }
  return catalog;
}

PricingCatalog LoadCatalog(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::runtime_error(fmt::format("cannot open pricing catalog '{}'", path.string()));
  }
  std::ostringstream text;
  text << in.rdbuf();
  return ParseCatalog(text.str());
}

std::string CatalogToYaml(const PricingCatalog& catalog) {
  YAML::Emitter out;
  out << YAML::BeginMap << YAML::Key << "name" << YAML::Value << catalog.name;
  out << YAML::Key << "tiers" << YAML::Value << YAML::BeginSeq;
  for (const TierPricing& tier : catalog.tiers) {
    out << YAML::BeginMap;
    out << YAML::Key << "name" << YAML::Value << tier.tier_name;
    out << YAML::Key << "storage_per_gb_month" << YAML::Value << tier.storage_per_gb_month;
    out << YAML::Key << "retrieval_per_gb" << YAML::Value << tier.retrieval_per_gb;
    out << YAML::Key << "get_per_10k" << YAML::Value << tier.get_per_10k_requests;
    if (tier.nominal_latency.kind == NominalLatency::Kind::kHours) {
      out << YAML::Key << "latency" << YAML::Value << "hours";
    } else {
      out << YAML::Key << "latency_ms" << YAML::Value << static_cast<double>(tier.nominal_latency.fixed) / 1e3;
    }
    if (!tier.note.empty()) {
      out << YAML::Key << "note" << YAML::Value << tier.note;
    }
    out << YAML::EndMap;
  }
  out << YAML::EndSeq << YAML::EndMap;
  return out.c_str();
}

}  // namespace coldbench

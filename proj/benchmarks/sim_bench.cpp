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

#include <benchmark/benchmark.h>

#include "coldbench/data/dataset.hpp"
#include "coldbench/sim/rng.hpp"
#include "coldbench/sim/simulator.hpp"
#include "coldbench/sim/zipf.hpp"

namespace coldbench {
namespace {

// Schedule n events at pseudo-random times, then drain.
void BM_EventQueue(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    Simulator sim;
    RngStream rng(1, "bench/events");
    std::uint64_t fired = 0;
    for (std::size_t i = 0; i < n; ++i) {
      sim.ScheduleAt(static_cast<SimTime>(rng.UniformIndex(1'000'000'000)), [&fired] { ++fired; });
    }
    sim.Run();
    benchmark::DoNotOptimize(fired);
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_EventQueue)->Arg(1 << 10)->Arg(1 << 16)->Arg(1 << 20);

void BM_ZipfSample(benchmark::State& state) {
  const ZipfDistribution zipf(static_cast<std::size_t>(state.range(0)), 1.1);
  RngStream rng(2, "bench/zipf");
  for (auto _ : state) benchmark::DoNotOptimize(zipf.Sample(rng));
  state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_ZipfSample)->Arg(16)->Arg(100'000);

void BM_GenerateDataset(benchmark::State& state) {
  DatasetSpec spec = ScaleDistribution(DsdaMainDistribution(), static_cast<std::uint64_t>(state.range(0)));
  for (auto _ : state) {
    spec.seed++;
    benchmark::DoNotOptimize(GenerateDataset(spec).summary.total_bytes);
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_GenerateDataset)->Arg(10'000)->Arg(1'000'000)->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace coldbench

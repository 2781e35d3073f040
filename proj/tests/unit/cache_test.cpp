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

#include <gtest/gtest.h>

#include <memory>
#include <vector>

#include "coldbench/backend/cache.hpp"
#include "coldbench/backend/tape.hpp"
#include "coldbench/data/dataset.hpp"
#include "coldbench/driver/driver.hpp"
#include "support/test_util.hpp"

namespace coldbench {
namespace {

using testing::ManifestOf;
using testing::RunOne;

std::unique_ptr<CachedBackend> CacheOverTape(Simulator& sim, std::uint64_t capacity, bool bypass = true,
                                             CacheConfig::Policy policy = CacheConfig::Policy::kLru) {
  CacheConfig config;
  config.capacity_bytes = capacity;
  config.bypass_oversize = bypass;
  config.policy = policy;
  return std::make_unique<CachedBackend>(sim, config, std::make_unique<TapeLibrary>(sim, TapeConfig{}));
}

TEST(FileCache, LruEvictsLeastRecentlyUsed) {
  FileCache cache(30, CacheConfig::Policy::kLru);
  ASSERT_TRUE(cache.Admit(1, 10));
  ASSERT_TRUE(cache.Admit(2, 10));
  ASSERT_TRUE(cache.Admit(3, 10));
  cache.Touch(1);
  std::vector<FileId> evicted;
  ASSERT_TRUE(cache.Admit(4, 10, &evicted));
  EXPECT_EQ(evicted, (std::vector<FileId>{2}));
  EXPECT_TRUE(cache.Contains(1));
  EXPECT_EQ(cache.resident_bytes(), 30u);
}

TEST(FileCache, FifoIgnoresTouches) {
  FileCache cache(30, CacheConfig::Policy::kFifo);
  cache.Admit(1, 10);
  cache.Admit(2, 10);
  cache.Admit(3, 10);
  cache.Touch(1);
  std::vector<FileId> evicted;
  cache.Admit(4, 10, &evicted);
  EXPECT_EQ(evicted, (std::vector<FileId>{1}));
}

TEST(FileCache, OversizeIsRejectedWithoutSideEffects) {
  FileCache cache(30, CacheConfig::Policy::kLru);
  cache.Admit(1, 20);
  EXPECT_FALSE(cache.Admit(2, 31));
  EXPECT_TRUE(cache.Contains(1));
  EXPECT_EQ(cache.resident_bytes(), 20u);
  FileCache empty(0, CacheConfig::Policy::kLru);
  EXPECT_FALSE(empty.Admit(1, 1));
}

TEST(FileCache, ResidentBytesNeverExceedCapacity) {
  FileCache cache(1000, CacheConfig::Policy::kLru);
  RngStream rng(4, "test/cache");
  for (int i = 0; i < 20'000; ++i) {
    const FileId id = rng.UniformIndex(300);
    if (rng.Bernoulli(0.3)) {
      cache.Touch(id);
    } else {
      cache.Admit(id, 1 + rng.UniformIndex(400));
    }
    ASSERT_LE(cache.resident_bytes(), 1000u);
  }
  cache.Erase(cache.file_count() > 0 ? 0 : 1);
  EXPECT_LE(cache.resident_bytes(), 1000u);
}

TEST(FileCache, ReadmitRefreshesSize) {
  FileCache cache(100, CacheConfig::Policy::kLru);
  cache.Admit(1, 40);
  cache.Admit(1, 60);
  EXPECT_EQ(cache.resident_bytes(), 60u);
  EXPECT_EQ(cache.file_count(), 1u);
}

TEST(CachedBackend, RepeatedGetHitsAtDiskSpeed) {
  Simulator sim;
  auto cache = CacheOverTape(sim, 10 * kGiB);
  cache->Preload(ManifestOf({{0, 150'000'000, 0, FileSet::kStatic}}).records);
  const Completion miss = RunOne(sim, [&](CompletionFn done) { cache->Get(0, "normal", done); });
  const Completion hit = RunOne(sim, [&](CompletionFn done) { cache->Get(0, "normal", done); });
  ASSERT_TRUE(miss.ok && hit.ok);
  // 10 ms + 150 MB at 150 MB/s.
  EXPECT_EQ(hit.completion_time - hit.issue_time, 1'010 * sim_time::kMillisecond);
  EXPECT_GT(miss.completion_time - miss.issue_time, 30 * sim_time::kSecond);
  EXPECT_EQ(cache->Stats().cache_hits, 1u);
  EXPECT_EQ(cache->Stats().cache_misses, 1u);
  EXPECT_EQ(cache->Stats().tape_mounts, 1u);
}

TEST(CachedBackend, ZeroCapacityWithBypassNeverHits) {
  Simulator sim;
  auto cache = CacheOverTape(sim, 0);
  cache->Preload(ManifestOf({{0, 1000, 0, FileSet::kStatic}}).records);
  for (int i = 0; i < 5; ++i) {
    EXPECT_TRUE(RunOne(sim, [&](CompletionFn done) { cache->Get(0, "normal", done); }).ok);
  }
  EXPECT_EQ(cache->Stats().cache_hits, 0u);
  EXPECT_EQ(cache->Stats().cache_misses, 5u);
}

TEST(CachedBackend, OversizeWithoutBypassFails) {
  Simulator sim;
  auto cache = CacheOverTape(sim, 100, false);
  cache->Preload(ManifestOf({{0, 1000, 0, FileSet::kStatic}}).records);
  EXPECT_FALSE(RunOne(sim, [&](CompletionFn done) { cache->Get(0, "normal", done); }).ok);
  EXPECT_FALSE(RunOne(sim, [&](CompletionFn done) { cache->Put(5, 1000, done); }).ok);
}

TEST(CachedBackend, BurstBufferAcknowledgesBeforeDestage) {
  Simulator sim;
  auto cache = CacheOverTape(sim, kGiB);
  cache->Preload(ManifestOf({{0, 10, 0, FileSet::kStatic}}).records);
  Completion ack;
  cache->Put(9, 150'000'000, [&](const Completion& c) {
    ack = c;
    EXPECT_EQ(cache->pending_destages(), 1u);
  });
  sim.Run();
  EXPECT_EQ(ack.completion_time - ack.issue_time, 1'010 * sim_time::kMillisecond);
  EXPECT_EQ(cache->pending_destages(), 0u);
  EXPECT_TRUE(cache->Contains(9));
  EXPECT_EQ(cache->Stats().bytes_written, 150'000'000u);
  // The buffered copy serves reads.
  const Completion hit = RunOne(sim, [&](CompletionFn done) { cache->Get(9, "normal", done); });
  EXPECT_EQ(hit.completion_time - hit.issue_time, 1'010 * sim_time::kMillisecond);
}

TEST(CachedBackend, OversizePutWritesThrough) {
  Simulator sim;
  auto cache = CacheOverTape(sim, 100);
  cache->Preload(ManifestOf({{0, 10, 0, FileSet::kStatic}}).records);
  const Completion c = RunOne(sim, [&](CompletionFn done) { cache->Put(9, 250'000'000, done); });
  ASSERT_TRUE(c.ok);
  EXPECT_EQ(c.completion_time - c.issue_time, 36 * sim_time::kSecond);
}

TEST(CachedBackend, BatchMixesHitsAndMisses) {
  Simulator sim;
  auto cache = CacheOverTape(sim, kGiB);
  cache->Preload(ManifestOf({{0, 1000, 0, FileSet::kStatic}, {1, 1000, 0, FileSet::kStatic}}).records);
  RunOne(sim, [&](CompletionFn done) { cache->Get(0, "normal", done); });
  std::vector<FileId> ids{0, 1, 77};
  const Completion c = RunOne(sim, [&](CompletionFn done) { cache->BatchGet(ids, "normal", done); });
  EXPECT_FALSE(c.ok);  // 77 does not exist
  EXPECT_EQ(cache->Stats().cache_hits, 1u);
  EXPECT_EQ(cache->Stats().cache_misses, 2u);
  EXPECT_TRUE(cache->cache().Contains(1));
}

double HitRateAtRatio(const DatasetManifest& m, double ratio) {
  Simulator sim;
  const auto capacity = static_cast<std::uint64_t>(static_cast<double>(m.StaticBytes()) / ratio);
  auto cache = CacheOverTape(sim, capacity);
  Preload(*cache, m);
  SessionConfig sessions;
  sessions.workload.request_count = 3000;
  sessions.workload.access_skew_s = 1.1;
  sessions.workload.seed = 21;
  RunBenchmark(*cache, m, sessions);
  const BackendStats stats = cache->Stats();
  EXPECT_LE(cache->cache().resident_bytes(), capacity);
  return static_cast<double>(stats.cache_hits) / static_cast<double>(stats.cache_hits + stats.cache_misses);
}

TEST(CachedBackend, LargerCacheHitsMoreOnSameTrace) {
  DatasetSpec spec;
  spec.total_files = 3000;
  spec.distribution = DsdaMainDistribution();
  spec.mission_count = 20;
  spec.mission_skew_s = 0.5;
  spec.seed = 5;
  const DatasetManifest m = GenerateDataset(spec);
  const double at_17 = HitRateAtRatio(m, 17.0);
  const double at_30 = HitRateAtRatio(m, 30.0);
  EXPECT_GT(at_17, at_30);
  EXPECT_GT(at_30, 0.0);
}

TEST(CacheConfig, ParsesPolicies) {
  EXPECT_EQ(ParseCachePolicy("lru"), CacheConfig::Policy::kLru);
  EXPECT_EQ(ParseCachePolicy("fifo"), CacheConfig::Policy::kFifo);
  EXPECT_THROW(ParseCachePolicy("arc"), std::invalid_argument);
  CacheConfig config;
  config.disk_rate_mb_s = 0;
  EXPECT_THROW(config.Validate(), std::invalid_argument);
}

}  // namespace
}  // namespace coldbench

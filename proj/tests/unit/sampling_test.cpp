// Copyright 2026 The csmetric Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "csmetric/sampling.hpp"

#include <gtest/gtest.h>

#include <set>

#include "csmetric/error.hpp"
#include "csmetric/verdict.hpp"

namespace csm {
namespace {

TEST(SamplingTest, DyadicAxisOrder) {
  auto axis = grid_axis(PointDomain::interval(0.0, 1.0), 7);
  EXPECT_EQ(axis, (std::vector<double>{0.0, 1.0, 0.5, 0.25, 0.75, 0.125, 0.375}));
  auto shifted = grid_axis(PointDomain::interval(1.0, 100.0), 3);
  EXPECT_EQ(shifted, (std::vector<double>{1.0, 100.0, 50.5}));
}

TEST(SamplingTest, NaturalAxisIsDeduplicatedAndCapped) {
  auto axis = grid_axis(PointDomain::naturals(4), 100);
  ASSERT_EQ(axis.size(), 5u);
  EXPECT_EQ(std::set<double>(axis.begin(), axis.end()),
            (std::set<double>{0, 1, 2, 3, 4}));
  EXPECT_EQ(axis[0], 0.0);
  EXPECT_EQ(axis[1], 4.0);
}

TEST(SamplingTest, StratifiedGridCoversSmallNaturals) {
  SampleConfig cfg;
  cfg.strategy = SampleStrategy::stratified_grid;
  cfg.count = 20000;
  auto tuples = collect_tuples(PointDomain::naturals(10), 4, cfg);
  EXPECT_EQ(tuples.size(), 14641u);
  std::set<std::vector<double>> unique(tuples.begin(), tuples.end());
  EXPECT_EQ(unique.size(), 14641u);
}

TEST(SamplingTest, Deterministic) {
  SampleConfig cfg;
  cfg.count = 3000;
  cfg.seed = 99;
  for (auto s : {SampleStrategy::uniform_random, SampleStrategy::stratified_grid,
                 SampleStrategy::grid_plus_random}) {
    cfg.strategy = s;
    auto d = PointDomain::interval(-3.0, 2.0);
    EXPECT_EQ(collect_tuples(d, 3, cfg), collect_tuples(d, 3, cfg));
  }
}

TEST(SamplingTest, SeedChangesRandomPart) {
  SampleConfig a, b;
  a.strategy = b.strategy = SampleStrategy::uniform_random;
  a.count = b.count = 50;
  b.seed = a.seed + 1;
  auto d = PointDomain::interval(0.0, 1.0);
  EXPECT_NE(collect_tuples(d, 2, a), collect_tuples(d, 2, b));
}

// Doubling the sample count keeps the original sample as a prefix.
TEST(SamplingTest, MonotoneSupersetProperty) {
  for (auto s : {SampleStrategy::uniform_random, SampleStrategy::stratified_grid,
                 SampleStrategy::grid_plus_random}) {
    for (std::size_t n : {1u, 17u, 500u, 4000u}) {
      SampleConfig small;
      small.strategy = s;
      small.count = n;
      SampleConfig big = small;
      big.count = 2 * n;
      auto d = PointDomain::interval(0.0, 5.0);
      auto a = collect_tuples(d, 3, small);
      auto b = collect_tuples(d, 3, big);
      ASSERT_EQ(a.size(), n);
      ASSERT_EQ(b.size(), 2 * n);
      EXPECT_TRUE(std::equal(a.begin(), a.end(), b.begin())) << to_string(s) << n;
    }
  }
}

TEST(SamplingTest, SamplesStayInDomain) {
  SampleConfig cfg;
  cfg.count = 5000;
  for (const auto& d : {PointDomain::interval(1.0, 100.0), PointDomain::naturals(50),
                        PointDomain::finite_set({1.0, 5.0, 7.5})}) {
    for (const auto& t : collect_tuples(d, 4, cfg)) {
      for (double x : t) EXPECT_TRUE(d.contains(x)) << d.describe() << " " << x;
    }
  }
}

TEST(SamplingTest, PinnedTuplesComeFirst) {
  SampleConfig cfg;
  cfg.count = 10;
  cfg.pinned = {{4, 5, 1, 4}};
  auto tuples = collect_tuples(PointDomain::interval(1.0, 100.0), 4, cfg);
  ASSERT_EQ(tuples.size(), 11u);
  EXPECT_EQ(tuples[0], (std::vector<double>{4, 5, 1, 4}));
  cfg.pinned = {{4, 5}};
  EXPECT_THROW(collect_tuples(PointDomain::interval(1.0, 100.0), 4, cfg), ConfigError);
  cfg.pinned = {{0, 5, 1, 4}};
  EXPECT_THROW(collect_tuples(PointDomain::interval(1.0, 100.0), 4, cfg), DomainError);
}

TEST(SamplingTest, StrategyNames) {
  EXPECT_EQ(sample_strategy_from_string("stratified_grid"),
            SampleStrategy::stratified_grid);
  EXPECT_STREQ(to_string(SampleStrategy::grid_plus_random), "grid_plus_random");
  EXPECT_THROW(sample_strategy_from_string("sobol"), ConfigError);
}

TEST(VerdictTest, WitnessIsMostNegativeThenLexicographic) {
  VerdictBuilder b("t", 1);
  const double t1[] = {3.0}, t2[] = {2.0}, t3[] = {1.0}, t4[] = {0.0};
  b.add(t1, Slack{-1.0, 0.0, std::nullopt});
  b.add(t2, Slack{-5.0, 0.0, std::nullopt});
  b.add(t3, Slack{-5.0, 0.0, std::nullopt});
  b.add(t4, Slack{2.0, 0.0, std::nullopt});
  Verdict v = std::move(b).finish();
  EXPECT_FALSE(v.passed);
  EXPECT_EQ(v.checked, 4u);
  EXPECT_EQ(*v.witness, std::vector<double>{1.0});
  EXPECT_EQ(v.worst_margin, -5.0);
}

TEST(VerdictTest, ToleranceAbsorbsRoundoff) {
  VerdictBuilder b("t", 1);
  const double t[] = {0.0};
  b.add(t, Slack{-5e-10, 0.0, std::nullopt});
  b.add(t, Slack{-1e-7, 1e3, std::nullopt});
  Verdict v = std::move(b).finish();
  EXPECT_TRUE(v.passed);
  EXPECT_EQ(v.worst_margin, -1e-7);
}

TEST(VerdictTest, NanSlackIsViolation) {
  VerdictBuilder b("t", 1);
  const double t[] = {0.0};
  b.add(t, Slack{std::nan(""), 0.0, std::nullopt});
  EXPECT_FALSE(std::move(b).finish().passed);
}

TEST(VerdictTest, EmptySampleIsConfigError) {
  SampleConfig cfg;
  cfg.count = 0;
  EXPECT_THROW(run_sampled_check("x", PointDomain::interval(0, 1), 2, cfg,
                                 [](std::span<const double>) { return Slack{}; }),
               ConfigError);
}

}  // namespace
}  // namespace csm

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

#include "csmetric/axiom_audit.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "csmetric/error.hpp"
#include "csmetric/metric.hpp"

namespace csm {
namespace {

ComposedSpace custom_space(PointDomain d, TripleMetric m,
                           AlphaFunction a = AlphaFunction::identity()) {
  return ComposedSpace{std::move(d), std::move(m), std::move(a), false, {}};
}

SampleConfig grid(std::size_t count) {
  SampleConfig cfg;
  cfg.strategy = SampleStrategy::stratified_grid;
  cfg.count = count;
  return cfg;
}

TEST(AxiomAuditTest, BuiltinsSatisfyIdentityAxiom) {
  for (const char* name : {"squared_diff", "discrete_nat", "abs_sum", "app_metric"}) {
    auto v = check_identity_axiom(make_builtin_space(name), SampleConfig{});
    EXPECT_TRUE(v.passed) << name;
    EXPECT_FALSE(v.witness.has_value());
  }
}

TEST(AxiomAuditTest, DegenerateMetricFailsIdentity) {
  TripleMetric m{"qh", [](double q, double h, double) { return std::abs(q - h); }};
  auto s = custom_space(PointDomain::finite_set({1.0, 5.0}), m);
  auto v = check_identity_axiom(s, grid(100));
  EXPECT_FALSE(v.passed);
  ASSERT_TRUE(v.witness);
  EXPECT_EQ(*v.witness, (std::vector<double>{1, 1, 5}));
}

TEST(AxiomAuditTest, SquaredDiffClassicFailsComposedHolds) {
  auto s = make_builtin_space("squared_diff");
  auto c = classic_triangle_slack(s, 4, 5, 1, 4);
  EXPECT_DOUBLE_EQ(c.slack, -5.0);
  EXPECT_DOUBLE_EQ(c.rhs, 20.0);
  auto k = composed_triangle_slack(s, 4, 5, 1, 4);
  EXPECT_NEAR(k.rhs / (1.0 + std::exp(2.0) + std::exp(18.0)), 1.0, 1e-12);
  EXPECT_GT(k.slack, 0.0);

  SampleConfig cfg;
  cfg.pinned = {{4, 5, 1, 4}};
  auto classic = check_classic_triangle(s, cfg);
  EXPECT_FALSE(classic.passed);
  auto composed = check_composed_triangle(s, cfg);
  EXPECT_TRUE(composed.passed);
  EXPECT_EQ(composed.checked, 10001u);
}

TEST(AxiomAuditTest, DiscreteNatComposedHoldsClassicFails) {
  const double p[] = {10.0};
  auto s = make_builtin_space("discrete_nat", p);
  auto cfg = grid(20000);
  auto composed = check_composed_triangle(s, cfg);
  EXPECT_TRUE(composed.passed);
  EXPECT_EQ(composed.checked, 14641u);
  // (0,0,0,0) gives 0 against 3 alpha(0) = 3.
  EXPECT_DOUBLE_EQ(composed.worst_margin, 3.0);

  auto classic = check_classic_triangle(s, cfg);
  EXPECT_FALSE(classic.passed);
  EXPECT_EQ(*classic.witness, (std::vector<double>{8, 9, 10, 0}));
  EXPECT_DOUBLE_EQ(classic.worst_margin, -27.0);
  auto one = classic_triangle_slack(s, 1, 2, 3, 1);
  EXPECT_DOUBLE_EQ(one.rhs - one.slack, 12.0);
  EXPECT_DOUBLE_EQ(one.rhs, 7.0);
}

TEST(AxiomAuditTest, AsymmetricMetricFailsSymmetry) {
  TripleMetric m{"asym", [](double q, double h, double w) {
                   return std::abs(q - w) + std::abs(h - w) + std::max(0.0, w - q);
                 }};
  std::vector<double> pts;
  for (int i = 0; i < 10; ++i) pts.push_back(i);
  auto s = custom_space(PointDomain::finite_set(pts), m);
  auto v = check_symmetry(s, grid(100));
  EXPECT_FALSE(v.passed);
  EXPECT_EQ(*v.witness, (std::vector<double>{0, 9}));
  EXPECT_DOUBLE_EQ(v.worst_margin, -9.0);
}

TEST(AxiomAuditTest, BuiltinsAreSymmetric) {
  for (const char* name : {"squared_diff", "discrete_nat", "abs_sum", "app_metric"}) {
    EXPECT_TRUE(check_symmetry(make_builtin_space(name), SampleConfig{}).passed) << name;
  }
}

TEST(AxiomAuditTest, WitnessReallyViolates) {
  auto s = with_alpha(make_builtin_space("squared_diff"), AlphaFunction::identity());
  auto v = check_composed_triangle(s, SampleConfig{});
  ASSERT_FALSE(v.passed);
  const auto& w = *v.witness;
  auto sl = composed_triangle_slack(s, w[0], w[1], w[2], w[3]);
  EXPECT_EQ(sl.slack, v.worst_margin);
  EXPECT_LT(sl.slack, -SampleConfig{}.tolerance.bound(sl.rhs));
}

TEST(AxiomAuditTest, SameSeedSameVerdict) {
  auto s = with_alpha(make_builtin_space("abs_sum"), AlphaFunction::identity());
  SampleConfig cfg;
  cfg.seed = 1234;
  cfg.strategy = SampleStrategy::uniform_random;
  EXPECT_EQ(check_composed_triangle(s, cfg), check_composed_triangle(s, cfg));
}

TEST(AxiomAuditTest, AlphaZero) {
  EXPECT_TRUE(check_alpha_zero(AlphaFunction::two_sqrt()).passed);
  auto v = check_alpha_zero(AlphaFunction::affine(2, 1));
  EXPECT_FALSE(v.passed);
  EXPECT_EQ(*v.witness, (std::vector<double>{0.0, 1.0}));
}

TEST(AxiomAuditTest, Subhomogeneity) {
  EXPECT_TRUE(check_alpha_subhomogeneity(AlphaFunction::two_sqrt(), SampleConfig{}).passed);
  EXPECT_TRUE(check_alpha_subhomogeneity(AlphaFunction::linear(3.0), SampleConfig{}).passed);
  auto v = check_alpha_subhomogeneity(AlphaFunction::exponential(), SampleConfig{});
  EXPECT_FALSE(v.passed);
  // For k < 1 the square-root alpha breaks the inequality: 2 sqrt(0.01) vs 0.01 * 2.
  const double k = 0.01;
  const auto a = AlphaFunction::two_sqrt();
  EXPECT_NEAR(eval_alpha(a, k * 1.0 + 0.0), 0.2, 1e-15);
  EXPECT_NEAR(k * eval_alpha(a, 1.0) + eval_alpha(a, 0.0), 0.02, 1e-15);
  EXPECT_FALSE(check_alpha_subhomogeneity(a, SampleConfig{}, {0.01}).passed);
  EXPECT_THROW(check_alpha_subhomogeneity(a, SampleConfig{}, {}), ConfigError);
  EXPECT_THROW(check_alpha_subhomogeneity(a, SampleConfig{}, {-1.0}), ConfigError);
}

TEST(AxiomAuditTest, DominatesOrbit) {
  // Reflection on [1,100] from 1 keeps d_n = 2 * 99^2, far above 4.
  auto s = make_builtin_space("squared_diff");
  auto map = make_builtin_map("reflect", {}, s.domain);
  EXPECT_TRUE(check_alpha_dominates_orbit(with_alpha(s, AlphaFunction::two_sqrt()),
                                          map, 1.0, 10).passed);
  EXPECT_TRUE(check_alpha_dominates_orbit(with_alpha(s, AlphaFunction::identity()),
                                          map, 1.0, 10).passed);
  auto v = check_alpha_dominates_orbit(with_alpha(s, AlphaFunction::affine(2, 1)),
                                       map, 1.0, 10);
  EXPECT_FALSE(v.passed);
  EXPECT_EQ((*v.witness)[0], 0.0);
  // Small steps: 2 sqrt(d) > d once d < 4.
  auto app = make_builtin_space("app_metric");
  const double half[] = {0.5};
  EXPECT_FALSE(check_alpha_dominates_orbit(
      app, make_builtin_map("scale", half, app.domain), 1.0, 5).passed);
  EXPECT_THROW(check_alpha_dominates_orbit(s, map, 1.0, 0), ConfigError);
}

TEST(SeriesTailTest, IdentityHandValue) {
  EXPECT_DOUBLE_EQ(series_tail(AlphaFunction::identity(), 0.5, 1.0, 0, 5), 0.75);
}

TEST(SeriesTailTest, TwoSqrtReferenceValue) {
  const double v = series_tail(AlphaFunction::two_sqrt(), 1.0 / 81.0, 2.0, 10, 14);
  EXPECT_NEAR(v, 0.0067087630046980977, 1e-15);
  const double closed =
      4.0 * std::pow(2.0, 1.75) * std::pow(2.0 * std::pow(3.0, -56.0), 0.125);
  EXPECT_NEAR(v / closed, 1.0, 1e-12);
}

// With alpha = identity every iterate is the identity and the sum is a
// geometric series with a closed form.
TEST(SeriesTailTest, IdentityClosedFormProperty) {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> ur(0.05, 0.45), uc(0.0, 10.0);
  for (int i = 0; i < 300; ++i) {
    const double r = ur(rng), c0 = uc(rng);
    const std::size_t n = rng() % 30, m = n + 1 + rng() % 30;
    const double q = 2.0 * r;
    double expect = 0.0;
    if (m >= n + 5) {
      const double a = static_cast<double>(n + 3), b = static_cast<double>(m - 1);
      expect = c0 * std::pow(2.0, -static_cast<double>(n) - 1.0) *
               (std::pow(q, a) - std::pow(q, b)) / (1.0 - q);
    }
    expect += std::pow(2.0, static_cast<double>(m - n) - 2.0) *
              std::pow(r, static_cast<double>(m)) * c0;
    const double got = series_tail(AlphaFunction::identity(), r, c0, n, m);
    EXPECT_NEAR(got, expect, 1e-12 * std::max(1.0, std::abs(expect)))
        << r << " " << c0 << " " << n << " " << m;
  }
}

TEST(SeriesTailTest, DerivationFormTrailingTerm) {
  const auto id = AlphaFunction::identity();
  const double stmt = series_tail(id, 0.5, 1.0, 0, 5, TailForm::statement);
  const double der = series_tail(id, 0.5, 1.0, 0, 5, TailForm::derivation);
  // 2^2 r^4 replaces 2^3 r^5 in the trailing term.
  EXPECT_DOUBLE_EQ(der - stmt, 4.0 / 16.0 - 8.0 / 32.0);
  EXPECT_DOUBLE_EQ(series_tail(id, 0.25, 1.0, 0, 5, TailForm::derivation) -
                       series_tail(id, 0.25, 1.0, 0, 5, TailForm::statement),
                   4.0 / 256.0 - 8.0 / 1024.0);
}

TEST(SeriesTailTest, Errors) {
  const auto id = AlphaFunction::identity();
  EXPECT_THROW(series_tail(id, 1.0, 1.0, 0, 5), DomainError);
  EXPECT_THROW(series_tail(id, 0.0, 1.0, 0, 5), DomainError);
  EXPECT_THROW(series_tail(id, 0.5, -1.0, 0, 5), DomainError);
  EXPECT_THROW(series_tail(id, 0.5, 1.0, 5, 5), DomainError);
}

TEST(SeriesVanishingTest, GapFiveDecreasesToZero) {
  auto rep = check_series_vanishing(AlphaFunction::two_sqrt(), 1.0 / 81.0, 2.0,
                                    {5}, {5, 10, 20, 40, 80}, 1e-6);
  EXPECT_TRUE(rep.verdict.passed);
  ASSERT_EQ(rep.points.size(), 5u);
  const double expect[] = {3.668, 0.929, 0.0596, 2.45e-4, 4.15e-9};
  for (std::size_t i = 0; i < 5; ++i) {
    EXPECT_NEAR(rep.points[i].value / expect[i], 1.0, 2e-3) << i;
    if (i > 0) EXPECT_LT(rep.points[i].value, rep.points[i - 1].value);
  }
}

TEST(SeriesVanishingTest, LargeGapIsMonotoneButSlow) {
  auto rep = check_series_vanishing(AlphaFunction::two_sqrt(), 1.0 / 81.0, 2.0,
                                    {8}, {5, 10, 20, 40, 80}, 1e-6);
  EXPECT_FALSE(rep.verdict.passed);
  for (std::size_t i = 1; i < rep.points.size(); ++i) {
    EXPECT_LT(rep.points[i].value, rep.points[i - 1].value);
  }
  EXPECT_NEAR(rep.points.back().value, 19.24, 0.01);
}

TEST(SeriesVanishingTest, UnderflowPointsAreSkipped) {
  const double r = 1.0 / 81.0;
  const std::size_t cap = series_underflow_cap(r, 2.0, 6);
  EXPECT_GT(cap, 100u);
  auto rep = check_series_vanishing(AlphaFunction::two_sqrt(), r, 2.0, {6},
                                    {5, cap, cap + 1}, 1e-6);
  EXPECT_EQ(rep.skipped.size(), 1u);
  EXPECT_EQ(rep.points.back().n, cap);
  EXPECT_TRUE(rep.verdict.passed);
  EXPECT_EQ(rep.verdict.checked, 2u);
}

TEST(SeriesVanishingTest, Errors) {
  const auto a = AlphaFunction::two_sqrt();
  EXPECT_THROW(check_series_vanishing(a, 0.5, 1.0, {4}, {5}, 1e-6), ConfigError);
  EXPECT_THROW(check_series_vanishing(a, 0.5, 1.0, {5}, {10, 5}, 1e-6), ConfigError);
  EXPECT_THROW(check_series_vanishing(a, 0.5, 1.0, {}, {5}, 1e-6), ConfigError);
  EXPECT_THROW(check_series_vanishing(a, 0.5, 1.0, {5}, {5000}, 1e-6), ConfigError);
}

}  // namespace
}  // namespace csm

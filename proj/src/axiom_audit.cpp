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

#include <algorithm>
#include <cfloat>
#include <cmath>
#include <limits>

#include "csmetric/error.hpp"
#include "csmetric/fixed_point.hpp"

namespace csm {

namespace {

Slack triangle_slack(const ComposedSpace& space, const AlphaFunction* alpha,
                     double q, double h, double w, double u) {
  const auto& C = space.metric;
  const double lhs = C(q, h, w);
  const double a = C(q, q, u);
  const double b = C(h, h, u);
  const double c = C(w, w, u);
  const double rhs = alpha ? eval_alpha(*alpha, a) + eval_alpha(*alpha, b) +
                                 eval_alpha(*alpha, c)
                           : a + b + c;
  return {rhs - lhs, rhs, std::nullopt};
}

}  // namespace

Slack composed_triangle_slack(const ComposedSpace& space, double q, double h,
                              double w, double u) {
  return triangle_slack(space, &space.alpha, q, h, w, u);
}

Slack classic_triangle_slack(const ComposedSpace& space, double q, double h,
                             double w, double u) {
  return triangle_slack(space, nullptr, q, h, w, u);
}

Slack symmetry_slack(const ComposedSpace& space, double q, double h) {
  const double a = space.metric(q, q, h);
  const double b = space.metric(h, h, q);
  return {-std::abs(a - b), std::max(std::abs(a), std::abs(b)), std::nullopt};
}

Verdict check_identity_axiom(const ComposedSpace& space,
                             const SampleConfig& cfg) {
  VerdictBuilder b("identity_axiom", cfg.seed, cfg.tolerance);
  sample_tuples(space.domain, 3, cfg, [&](std::span<const double> t) {
    const double q = t[0], h = t[1], w = t[2];
    const double diag[] = {q, q, q};
    const double self = space.metric(q, q, q);
    b.add(diag, Slack{-std::abs(self), 0.0, self != 0.0});
    if (q == h && h == w) return;
    const double c = space.metric(q, h, w);
    b.add(t, Slack{c, c, !(c > 0.0)});
  });
  Verdict v = std::move(b).finish();
  if (v.checked == 0) throw ConfigError("identity_axiom: empty sample");
  return v;
}

Verdict check_composed_triangle(const ComposedSpace& space,
                                const SampleConfig& cfg) {
  return run_sampled_check(
      "composed_triangle", space.domain, 4, cfg,
      [&](std::span<const double> t) {
        return composed_triangle_slack(space, t[0], t[1], t[2], t[3]);
      });
}

Verdict check_classic_triangle(const ComposedSpace& space,
                               const SampleConfig& cfg) {
  return run_sampled_check(
      "classic_triangle", space.domain, 4, cfg,
      [&](std::span<const double> t) {
        return classic_triangle_slack(space, t[0], t[1], t[2], t[3]);
      });
}

Verdict check_symmetry(const ComposedSpace& space, const SampleConfig& cfg) {
  return run_sampled_check(
      "symmetry", space.domain, 2, cfg,
      [&](std::span<const double> t) { return symmetry_slack(space, t[0], t[1]); });
}

Verdict check_alpha_zero(const AlphaFunction& alpha) {
  VerdictBuilder b("alpha_zero", 0, Tolerance{0.0, 0.0});
  const double v = eval_alpha(alpha, 0.0);
  const double tuple[] = {0.0, v};
  b.add(tuple, Slack{-v, 0.0, v != 0.0});
  return std::move(b).finish();
}

std::vector<double> default_k_set() { return {1.0, 2.0, 4.0, 8.0}; }

Verdict check_alpha_subhomogeneity(const AlphaFunction& alpha,
                                   const SampleConfig& cfg,
                                   const std::vector<double>& k_set,
                                   const PointDomain& range) {
  if (k_set.empty()) throw ConfigError("alpha_subhomogeneity: empty k_set");
  for (double k : k_set) {
    if (!(k > 0.0) || !std::isfinite(k)) {
      throw ConfigError("alpha_subhomogeneity: every k must be positive");
    }
  }
  if (range.lo() < 0.0) {
    throw ConfigError("alpha_subhomogeneity: sample range must be nonnegative");
  }
  VerdictBuilder b("alpha_subhomogeneity", cfg.seed, cfg.tolerance);
  sample_tuples(range, 2, cfg, [&](std::span<const double> t) {
    const double s = t[0], u = t[1];
    for (double k : k_set) {
      const double lhs = eval_alpha(alpha, k * s + u);
      const double rhs = k * eval_alpha(alpha, s) + eval_alpha(alpha, u);
      const double tuple[] = {k, s, u};
      b.add(tuple, Slack{rhs - lhs, rhs, std::nullopt});
    }
  });
  Verdict v = std::move(b).finish();
  if (v.checked == 0) throw ConfigError("alpha_subhomogeneity: empty sample");
  return v;
}

Verdict check_alpha_dominates_orbit(const ComposedSpace& space,
                                    const SelfMap& map, double x0,
                                    std::size_t n_max) {
  if (n_max < 1) throw ConfigError("alpha_dominates_orbit: n_max must be >= 1");
  const Orbit orbit = build_orbit(space, map, x0, n_max + 1);
  VerdictBuilder b("alpha_dominates_orbit", 0);
  for (std::size_t n = 0; n < orbit.step_distances.size(); ++n) {
    const double d = orbit.step_distances[n];
    const double tuple[] = {static_cast<double>(n), d};
    b.add(tuple, Slack{d - eval_alpha(space.alpha, d), d, std::nullopt});
  }
  return std::move(b).finish();
}

double series_tail(const AlphaFunction& alpha, double r, double c0,
                   std::size_t n, std::size_t m, TailForm form) {
  if (!(r > 0.0 && r < 1.0)) {
    throw DomainError("series_tail: r must lie in (0, 1), got " +
                      std::to_string(r), r);
  }
  if (!(c0 >= 0.0)) throw DomainError("series_tail: c0 must be >= 0", c0);
  if (m <= n) {
    throw DomainError("series_tail: m must exceed n (n=" + std::to_string(n) +
                      ", m=" + std::to_string(m) + ")");
  }
  const auto rel = [n](std::size_t k) { return static_cast<int>(k - n); };
  double sum = 0.0;
  for (std::size_t k = n + 3; k + 2 <= m; ++k) {
    const double arg = std::pow(r, static_cast<double>(k)) * c0;
    sum += std::ldexp(iterate_alpha(alpha, k - n + 1, arg), rel(k) - 1);
  }
  const std::size_t j = m - n - 1;
  if (form == TailForm::statement) {
    const double arg = std::pow(r, static_cast<double>(m)) * c0;
    sum += std::ldexp(iterate_alpha(alpha, j, arg), rel(m) - 2);
  } else {
    const double arg = std::pow(r, static_cast<double>(m - 1)) * c0;
    sum += std::ldexp(iterate_alpha(alpha, j, arg), rel(m) - 3);
  }
  return sum;
}

std::size_t series_underflow_cap(double r, double c0, std::size_t gap) {
  if (!(r > 0.0 && r < 1.0)) {
    throw DomainError("series_underflow_cap: r must lie in (0, 1)", r);
  }
  if (c0 == 0.0) return std::numeric_limits<std::size_t>::max();
  std::size_t m = 0;
  while (std::pow(r, static_cast<double>(m + 1)) * c0 >= DBL_MIN) ++m;
  return m >= gap ? m - gap : 0;
}

SeriesReport check_series_vanishing(const AlphaFunction& alpha, double r,
                                    double c0,
                                    const std::vector<std::size_t>& gaps,
                                    const std::vector<std::size_t>& n_schedule,
                                    double tol, TailForm form) {
  if (gaps.empty()) throw ConfigError("series_vanishing: no gaps");
  if (n_schedule.empty()) throw ConfigError("series_vanishing: empty schedule");
  for (std::size_t g : gaps) {
    if (g < 5) throw ConfigError("series_vanishing: gaps must be >= 5");
  }
  for (std::size_t i = 1; i < n_schedule.size(); ++i) {
    if (n_schedule[i] <= n_schedule[i - 1]) {
      throw ConfigError("series_vanishing: n_schedule must be increasing");
    }
  }

  SeriesReport report;
  VerdictBuilder b("series_vanishing", 0, Tolerance{0.0, 0.0});
  for (std::size_t g : gaps) {
    std::optional<SeriesPoint> last;
    for (std::size_t n : n_schedule) {
      const std::size_t m = n + g;
      if (c0 > 0.0 && std::pow(r, static_cast<double>(m)) * c0 < DBL_MIN) {
        report.skipped.push_back({g, n, 0.0});
        continue;
      }
      SeriesPoint p{g, n, series_tail(alpha, r, c0, n, m, form)};
      report.points.push_back(p);
      last = p;
    }
    if (!last) {
      throw ConfigError("series_vanishing: gap " + std::to_string(g) +
                        " has no point above the underflow threshold");
    }
    const double tuple[] = {static_cast<double>(g),
                            static_cast<double>(last->n), last->value};
    b.add(tuple, Slack{tol - last->value, tol, !(last->value <= tol)});
  }
  report.verdict = std::move(b).finish();
  report.verdict.checked = report.points.size();
  return report;
}

}  // namespace csm

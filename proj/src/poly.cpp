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

#include "csmetric/poly.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "csmetric/error.hpp"

namespace csm::poly {

namespace {

void require_degree(unsigned m) {
  if (m < 3) {
    throw DomainError("polynomial problem is defined for m >= 3, got m = " +
                      std::to_string(m));
  }
}

double fourth(unsigned m) {
  const double d = m;
  return d * d * d * d;
}

}  // namespace

double residual(unsigned m, double v) {
  require_degree(m);
  if (!(v >= 0.0 && v <= 1.0)) {
    throw DomainError("residual: v must lie in [0, 1]", v);
  }
  const double m4 = fourth(m);
  // Coefficients from degree m + 1 down to 0.
  std::vector<double> c(m + 2, 0.0);
  c[0] = -(m4 - 1.0);
  c[1] = 1.0;
  c[m] = -m4;
  c[m + 1] = 1.0;
  double acc = 0.0;
  for (double coeff : c) acc = acc * v + coeff;
  return acc;
}

PolyProblem poly_map(unsigned m) {
  require_degree(m);
  const double m4 = fourth(m);
  const double e = m;
  auto space = make_builtin_space("app_metric");
  SelfMap map{"poly",
              {e},
              {},
              [m4, e](double p) {
                const double pm = std::pow(p, e);
                return (pm + 1.0) / ((m4 - 1.0) * pm + m4);
              },
              space.domain};
  return {m, std::move(map), std::move(space)};
}

double contraction_bound(unsigned m, BoundKind kind) {
  require_degree(m);
  if (kind == BoundKind::published_if_available && m == 3) return 1.0 / 81.0;
  return std::pow(static_cast<double>(m), -7.0);
}

double bisection_oracle(unsigned m, double tol) {
  if (!(tol > 0.0)) throw ConfigError("bisection_oracle: tol must be positive");
  double lo = 0.0;
  double hi = 1.0;
  if (!(residual(m, lo) > 0.0) || !(residual(m, hi) < 0.0)) {
    throw std::logic_error("bisection_oracle: no sign change on [0, 1]");
  }
  while (hi - lo > tol) {
    const double mid = lo + 0.5 * (hi - lo);
    if (mid <= lo || mid >= hi) break;
    const double r = residual(m, mid);
    if (r > 0.0) {
      lo = mid;
    } else if (r < 0.0) {
      hi = mid;
    } else {
      return mid;
    }
  }
  return lo + 0.5 * (hi - lo);
}

SolveResult solve_poly(unsigned m, double x0, double tol) {
  const auto problem = poly_map(m);
  return picard(problem.space, problem.map, x0, tol);
}

bool VerificationReport::all_passed() const {
  return std::all_of(hypotheses.begin(), hypotheses.end(),
                     [](const NamedVerdict& h) { return h.verdict.passed; });
}

VerificationReport verify_polynomial_fixed_point(unsigned m,
                                                 const VerifyOptions& opts) {
  const auto problem = poly_map(m);
  const auto& space = problem.space;

  VerificationReport report;
  report.m = m;
  report.contraction_factor = contraction_bound(m);
  const double r = report.contraction_factor;

  SampleConfig cfg;
  cfg.seed = opts.seed;
  cfg.count = opts.samples;

  auto add = [&](std::string name, Verdict v) {
    report.hypotheses.push_back({std::move(name), std::move(v)});
  };

  add("identity_axiom", check_identity_axiom(space, cfg));
  add("composed_triangle", check_composed_triangle(space, cfg));
  add("symmetry", check_symmetry(space, cfg));
  add("alpha_zero", check_alpha_zero(space.alpha));
  add("alpha_subhomogeneity",
      check_alpha_subhomogeneity(space.alpha, cfg, default_k_set(),
                                 space.domain));
  add("banach_contraction", check_banach(space, problem.map, r, cfg));

  report.solve = picard(space, problem.map, opts.x0, opts.tol);
  const double c0 = report.solve.orbit.step_distances.front();

  auto schedule = opts.series_schedule;
  std::size_t cap = std::numeric_limits<std::size_t>::max();
  for (std::size_t g : opts.series_gaps) {
    cap = std::min(cap, series_underflow_cap(r, c0, g));
  }
  // The last n before r^(n+gap) c0 underflows is the deepest point the
  // tail can be evaluated at; entries past it end up in skipped.
  if (cap != std::numeric_limits<std::size_t>::max() &&
      std::find(schedule.begin(), schedule.end(), cap) == schedule.end()) {
    schedule.insert(std::upper_bound(schedule.begin(), schedule.end(), cap), cap);
  }
  report.series = check_series_vanishing(space.alpha, r, c0, opts.series_gaps,
                                         schedule, opts.series_tol);
  add("series_vanishing", report.series.verdict);

  add("uniqueness", uniqueness_probe(space, problem.map, opts.starts,
                                     opts.uniqueness_tol, kDefaultMaxIter,
                                     opts.tol)
                        .verdict);

  report.root = report.solve.fixed_point;
  report.oracle_root = bisection_oracle(m, opts.tol);
  report.agreement = std::abs(report.root - report.oracle_root);
  {
    VerdictBuilder b("oracle_agreement", 0, Tolerance{0.0, 0.0});
    const double bound = 10.0 * opts.tol;
    const double tuple[] = {report.root, report.oracle_root};
    b.add(tuple, Slack{bound - report.agreement, bound,
                       !report.solve.converged || report.agreement > bound});
    add("oracle_agreement", std::move(b).finish());
  }
  return report;
}

}  // namespace csm::poly

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

#include "csmetric/fixed_point.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "csmetric/error.hpp"

namespace csm {

namespace {

double step(const ComposedSpace& space, const SelfMap& map, double x,
            double* next) {
  const double y = map(x);
  if (!space.domain.contains(y)) {
    std::ostringstream os;
    os.precision(17);
    os << "orbit left " << space.domain.describe() << ": F(" << x
       << ") = " << y;
    throw DomainError(os.str(), y);
  }
  const double d = space.metric(x, x, y);
  if (!std::isfinite(d) || d < 0.0) {
    std::ostringstream os;
    os.precision(17);
    os << "step distance C(" << x << ", " << x << ", " << y << ") = " << d;
    throw NumericError(os.str());
  }
  *next = y;
  return d;
}

void push_step(Orbit& orbit, double next, double d) {
  if (!orbit.step_distances.empty() && orbit.step_distances.back() > 0.0) {
    orbit.ratios.push_back(d / orbit.step_distances.back());
  }
  orbit.iterates.push_back(next);
  orbit.step_distances.push_back(d);
}

}  // namespace

SolveResult picard(const ComposedSpace& space, const SelfMap& map, double x0,
                   double tol, std::size_t max_iter) {
  if (!(tol > 0.0)) throw ConfigError("picard: tol must be positive");
  if (max_iter == 0) throw ConfigError("picard: max_iter must be >= 1");
  space.domain.require(x0, "start");

  SolveResult result;
  result.orbit.iterates.push_back(x0);
  double x = x0;
  for (std::size_t n = 0; n < max_iter; ++n) {
    double next = 0.0;
    const double d = step(space, map, x, &next);
    push_step(result.orbit, next, d);
    result.fixed_point = x;
    result.residual = d;
    result.iterations = n + 1;
    if (d <= tol) {
      result.converged = true;
      break;
    }
    x = next;
  }
  return result;
}

Orbit build_orbit(const ComposedSpace& space, const SelfMap& map, double x0,
                  std::size_t steps) {
  space.domain.require(x0, "start");
  Orbit orbit;
  orbit.iterates.push_back(x0);
  double x = x0;
  for (std::size_t n = 0; n < steps; ++n) {
    double next = 0.0;
    const double d = step(space, map, x, &next);
    push_step(orbit, next, d);
    x = next;
  }
  return orbit;
}

double cauchy_diameter(const ComposedSpace& space, const Orbit& orbit,
                       std::size_t from) {
  double worst = 0.0;
  const auto& it = orbit.iterates;
  for (std::size_t n = from; n < it.size(); ++n) {
    for (std::size_t m = n + 1; m < it.size(); ++m) {
      worst = std::max(worst, space.metric(it[n], it[n], it[m]));
    }
  }
  return worst;
}

Verdict verify_fixed_point(const ComposedSpace& space, const SelfMap& map,
                           double x, double tol) {
  space.domain.require(x);
  const double fx = map(x);
  const double residual = eval_metric(space, x, x, fx);
  VerdictBuilder b("fixed_point", 0, Tolerance{0.0, 0.0});
  const double tuple[] = {x, fx};
  b.add(tuple, Slack{tol - residual, tol, residual > tol});
  return std::move(b).finish();
}

UniquenessProbe uniqueness_probe(const ComposedSpace& space,
                                 const SelfMap& map,
                                 const std::vector<double>& starts, double tol,
                                 std::size_t max_iter, double solve_tol) {
  if (starts.empty()) throw ConfigError("uniqueness_probe: no starts");
  UniquenessProbe probe;
  VerdictBuilder b("uniqueness", 0, Tolerance{0.0, 0.0});
  for (double s : starts) {
    probe.runs.push_back(picard(space, map, s, solve_tol, max_iter));
    const auto& run = probe.runs.back();
    const double tuple[] = {s};
    b.add(tuple, Slack{solve_tol - run.residual, solve_tol, !run.converged});
  }
  for (std::size_t i = 0; i < probe.runs.size(); ++i) {
    for (std::size_t j = i + 1; j < probe.runs.size(); ++j) {
      const double a = probe.runs[i].fixed_point;
      const double c = probe.runs[j].fixed_point;
      const double d = space.metric(a, a, c);
      const double tuple[] = {a, c};
      b.add(tuple, Slack{tol - d, tol, d > tol});
    }
  }
  probe.verdict = std::move(b).finish();
  return probe;
}

}  // namespace csm

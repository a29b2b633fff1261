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

#ifndef CSMETRIC_FIXED_POINT_HPP_
#define CSMETRIC_FIXED_POINT_HPP_

#include <cstddef>
#include <vector>

#include "csmetric/space.hpp"
#include "csmetric/verdict.hpp"

namespace csm {

// Picard sequence I_n = F^n(I_0).
struct Orbit {
  std::vector<double> iterates;
  // d_n = C(I_n, I_n, I_{n+1}); one fewer than iterates.
  std::vector<double> step_distances;
  // d_{n+1} / d_n for every n with d_n > 0.
  std::vector<double> ratios;
};

struct SolveResult {
  double fixed_point = 0.0;
  // Number of applications of F that were evaluated.
  std::size_t iterations = 0;
  // C(x, x, F x) at the reported point.
  double residual = 0.0;
  bool converged = false;
  Orbit orbit;
};

inline constexpr double kDefaultSolveTol = 1e-12;
inline constexpr std::size_t kDefaultMaxIter = 10000;

// Iterates I_{n+1} = F(I_n) from x0 until d_n = C(I_n, I_n, I_{n+1}) <= tol or
// max_iter steps were taken.
//
// The reported point is the I_n whose step distance met the tolerance, so
// `residual` is exactly d_n = C(I_n, I_n, F I_n). The orbit keeps the final
// image I_{n+1} as well. Without convergence the last I_n with its d_n is
// reported.
//
// Throws ConfigError for tol <= 0 or max_iter == 0, DomainError (carrying
// the offending iterate) if the orbit leaves the domain, and NumericError on
// a non-finite or negative distance.
SolveResult picard(const ComposedSpace& space, const SelfMap& map, double x0,
                   double tol = kDefaultSolveTol,
                   std::size_t max_iter = kDefaultMaxIter);

// Exactly `steps` applications of F, no stopping rule.
Orbit build_orbit(const ComposedSpace& space, const SelfMap& map, double x0,
                  std::size_t steps);

// max C(I_n, I_n, I_m) over from <= n < m along the orbit. Small values
// indicate a Cauchy tail.
double cauchy_diameter(const ComposedSpace& space, const Orbit& orbit,
                       std::size_t from = 0);

// Passes iff C(x, x, F x) <= tol.
Verdict verify_fixed_point(const ComposedSpace& space, const SelfMap& map,
                           double x, double tol);

struct UniquenessProbe {
  Verdict verdict;
  std::vector<SolveResult> runs;
};

// Runs picard from every start (with solve_tol); passes iff every run
// converges and all pairwise distances C(x_i, x_i, x_j) between the limits
// are <= tol.
UniquenessProbe uniqueness_probe(const ComposedSpace& space,
                                 const SelfMap& map,
                                 const std::vector<double>& starts, double tol,
                                 std::size_t max_iter = kDefaultMaxIter,
                                 double solve_tol = kDefaultSolveTol);

}  // namespace csm

#endif  // CSMETRIC_FIXED_POINT_HPP_

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

#ifndef CSMETRIC_POLY_HPP_
#define CSMETRIC_POLY_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "csmetric/axiom_audit.hpp"
#include "csmetric/contraction.hpp"
#include "csmetric/fixed_point.hpp"
#include "csmetric/space.hpp"
#include "csmetric/verdict.hpp"

namespace csm::poly {

// The equation  v^m - (m^4 - 1) v^(m+1) - m^4 v + 1 = 0  on [0, 1], m >= 3,
// recast as the fixed point problem v = F(v) with
//   F(p) = (p^m + 1) / ((m^4 - 1) p^m + m^4)
// on the app_metric space ([0, 1], |p-s| + |s-q|, alpha = 2 sqrt(t)).
struct PolyProblem {
  unsigned m = 3;
  SelfMap map;
  ComposedSpace space;
};

// Left-hand side of the equation, evaluated in Horner order. Throws
// DomainError for m < 3 or v outside [0, 1].
double residual(unsigned m, double v);

// F for degree parameter m. Throws DomainError for m < 3.
PolyProblem poly_map(unsigned m);

enum class BoundKind {
  // 1/81 for m = 3 (the published factor), the mean-value bound otherwise.
  published_if_available,
  // m^-7, from |p^m - s^m| <= m |p - s| and a denominator product >= m^8.
  mean_value,
};

// A contraction factor r with C(Fp, Fs, Fq) <= r C(p, s, q).
double contraction_bound(unsigned m,
                         BoundKind kind = BoundKind::published_if_available);

// Root of `residual` in [0, 1] by bisection, bracket width <= tol. Kept
// deliberately simple: its only invariant is residual(lo) > 0 > residual(hi).
// Throws std::logic_error if the endpoints do not change sign.
double bisection_oracle(unsigned m, double tol);

// Picard iteration of poly_map(m) from x0.
SolveResult solve_poly(unsigned m, double x0, double tol = kDefaultSolveTol);

struct NamedVerdict {
  std::string name;
  Verdict verdict;
};

struct VerifyOptions {
  std::uint64_t seed = 42;
  std::size_t samples = 10000;
  double tol = kDefaultSolveTol;
  double x0 = 0.5;
  std::vector<double> starts{0.0, 0.1, 0.2, 0.3, 0.4, 0.5,
                             0.6, 0.7, 0.8, 0.9, 1.0};
  double uniqueness_tol = 1e-10;
  std::vector<std::size_t> series_gaps{5, 6};
  std::vector<std::size_t> series_schedule{5, 10, 20, 40, 80};
  double series_tol = 1e-6;
};

struct VerificationReport {
  unsigned m = 3;
  double contraction_factor = 0.0;
  // In evaluation order: identity_axiom, composed_triangle, symmetry,
  // alpha_zero, alpha_subhomogeneity, banach_contraction, series_vanishing,
  // uniqueness, oracle_agreement.
  std::vector<NamedVerdict> hypotheses;
  SeriesReport series;
  SolveResult solve;
  double root = 0.0;
  double oracle_root = 0.0;
  double agreement = 0.0;

  bool all_passed() const;
};

// Audits every hypothesis of the contraction theorem for poly_map(m), solves
// the fixed point problem and cross-checks it against the bisection oracle.
// Failures are reported as verdicts; only m < 3 throws (DomainError).
//
// The series schedule is extended with the last n before r^(n+gap) c0
// underflows, so the vanishing check sees the deepest evaluable tail.
VerificationReport verify_polynomial_fixed_point(unsigned m,
                                                 const VerifyOptions& opts = {});

}  // namespace csm::poly

#endif  // CSMETRIC_POLY_HPP_

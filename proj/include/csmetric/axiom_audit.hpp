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

#ifndef CSMETRIC_AXIOM_AUDIT_HPP_
#define CSMETRIC_AXIOM_AUDIT_HPP_

#include <cstddef>
#include <vector>

#include "csmetric/domain.hpp"
#include "csmetric/space.hpp"
#include "csmetric/verdict.hpp"

namespace csm {

// Sampling falsifiers for the composed S-metric axioms and for the
// hypotheses the fixed point theorems place on alpha. A pass means no
// counterexample was found in the sample, nothing more.

// Self-distance: C(x, x, x) == 0 for every sampled x, and C(q, h, w) > 0 for
// every sampled triple with unequal entries. Each sampled triple (q, h, w)
// also contributes its diagonal (q, q, q).
Verdict check_identity_axiom(const ComposedSpace& space, const SampleConfig& cfg);

// C(q, h, w) <= alpha(C(q, q, u)) + alpha(C(h, h, u)) + alpha(C(w, w, u))
// over sampled quadruples (q, h, w, u).
Verdict check_composed_triangle(const ComposedSpace& space, const SampleConfig& cfg);

// Same inequality with alpha = identity, i.e. the plain S-metric triangle.
Verdict check_classic_triangle(const ComposedSpace& space, const SampleConfig& cfg);

// |C(q, q, h) - C(h, h, q)| within tolerance over sampled pairs.
Verdict check_symmetry(const ComposedSpace& space, const SampleConfig& cfg);

// Single-tuple slacks, as used by the checks above.
Slack composed_triangle_slack(const ComposedSpace& space, double q, double h,
                              double w, double u);
Slack classic_triangle_slack(const ComposedSpace& space, double q, double h,
                             double w, double u);
Slack symmetry_slack(const ComposedSpace& space, double q, double h);

// alpha(0) == 0 exactly.
Verdict check_alpha_zero(const AlphaFunction& alpha);

// {1, 2, 4, 8}: the multipliers the contraction proofs actually use.
std::vector<double> default_k_set();

// alpha(k s + t) <= k alpha(s) + alpha(t) for sampled (s, t) in `range`
// and every k in k_set. Witness layout: (k, s, t).
Verdict check_alpha_subhomogeneity(
    const AlphaFunction& alpha, const SampleConfig& cfg,
    const std::vector<double>& k_set = default_k_set(),
    const PointDomain& range = PointDomain::interval(0.0, 10.0));

// alpha(d_n) <= d_n along the orbit for n = 0..n_max, where
// d_n = C(I_n, I_n, I_{n+1}). Witness layout: (n, d_n).
Verdict check_alpha_dominates_orbit(const ComposedSpace& space,
                                    const SelfMap& map, double x0,
                                    std::size_t n_max);

// Which trailing term to use in the iterated-alpha tail sum. The theorem
// statement has 2^(m-n-2) alpha^(m-n-1)(r^m c0); the derivation that leads
// to it ends in 2^(m-n-3) alpha^(m-n-1)(r^(m-1) c0).
enum class TailForm { statement, derivation };

// sum_{k=n+3}^{m-2} 2^(k-n-1) alpha^(k-n+1)(r^k c0)
//   + 2^(m-n-2) alpha^(m-n-1)(r^m c0)
// (trailing term per `form`). For m < n + 5 the sum is empty and only the
// trailing term remains. Throws DomainError for r outside (0, 1), c0 < 0 or
// m <= n.
double series_tail(const AlphaFunction& alpha, double r, double c0,
                   std::size_t n, std::size_t m,
                   TailForm form = TailForm::statement);

struct SeriesPoint {
  std::size_t gap = 0;
  std::size_t n = 0;
  double value = 0.0;
};

struct SeriesReport {
  Verdict verdict;
  // Evaluated points, grouped by gap in the given order, n ascending.
  std::vector<SeriesPoint> points;
  // (gap, n) pairs dropped because r^(n+gap) c0 underflows double
  // precision, which would turn every term into an artificial zero.
  std::vector<SeriesPoint> skipped;
};

// Evaluates series_tail(alpha, r, c0, n, n + gap) along n_schedule for every
// gap. Passes iff, for every gap, the value at the last evaluable n is
// <= tol. Witness layout: (gap, n, value).
//
// Throws ConfigError if a gap is < 5, the schedule is not strictly
// increasing, or a gap has no evaluable point.
SeriesReport check_series_vanishing(const AlphaFunction& alpha, double r,
                                    double c0,
                                    const std::vector<std::size_t>& gaps,
                                    const std::vector<std::size_t>& n_schedule,
                                    double tol,
                                    TailForm form = TailForm::statement);

// Largest n with r^(n + gap) c0 still a normal double, i.e. the end of the
// range where series_tail can be evaluated without underflow.
std::size_t series_underflow_cap(double r, double c0, std::size_t gap);

}  // namespace csm

#endif  // CSMETRIC_AXIOM_AUDIT_HPP_

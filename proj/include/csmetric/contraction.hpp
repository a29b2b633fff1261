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

#ifndef CSMETRIC_CONTRACTION_HPP_
#define CSMETRIC_CONTRACTION_HPP_

#include <array>
#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "csmetric/space.hpp"
#include "csmetric/verdict.hpp"

namespace csm {

// A control function M(t1, ..., t5) for generalized contractions
//   C(Fo, Fo, Fh) <= M(C(o,o,h), C(Fo,Fo,o), C(Fo,Fo,h), C(Fh,Fh,o), C(Fh,Fh,h)).
// Continuity is assumed, not audited.
struct MfFunction {
  std::string id;
  std::vector<double> params;
  std::function<double(const std::array<double, 5>&)> fn;

  double operator()(const std::array<double, 5>& t) const { return fn(t); }
  double operator()(double t1, double t2, double t3, double t4, double t5) const {
    return fn({t1, t2, t3, t4, t5});
  }
};

namespace mf {

// r * t1, 0 <= r < 1. Reduces the generalized contraction to the Banach one.
MfFunction banach(double r);
// a * (t2 + t5), 0 <= a < 1/2.
MfFunction kannan(double a);
// a * max(t2, t5), 0 <= a < 1.
MfFunction bianchini(double a);

}  // namespace mf

struct ContractionEstimate {
  double sup_ratio = 0.0;
  std::array<double, 3> argmax_tuple{};
  // Non-degenerate triples that entered the estimate.
  std::size_t samples = 0;
};

// Triples with C(q, h, w) below this are skipped by the ratio estimate.
inline constexpr double kDegenerateDistance = 1e-12;

// max C(Fq, Fh, Fw) / C(q, h, w) over sampled non-degenerate triples. The
// first triple attaining the maximum is reported. Throws ConfigError when
// every sampled triple is degenerate.
ContractionEstimate estimate_contraction_factor(const ComposedSpace& space,
                                                const SelfMap& map,
                                                const SampleConfig& cfg);

// C(Fq, Fh, Fw) <= r C(q, h, w) over sampled triples; r in (0, 1).
Verdict check_banach(const ComposedSpace& space, const SelfMap& map, double r,
                     const SampleConfig& cfg);

// The same inequality restricted to triples (o, o, h), sampled as pairs in
// the order check_mf_contraction uses.
Verdict check_banach_pairs(const ComposedSpace& space, const SelfMap& map,
                           double r, const SampleConfig& cfg);

// Premise guard of (M1). The definition uses w <= 2o + h; one of the
// corollary proofs uses w <= o + 2h.
enum class M1Guard { two_o_plus_h, o_plus_two_h };

// (M1): for sampled (o, h, w) in range^3 with h <= M(o, o, 0, w, h) and the
// guard on w, require h <= r o. Witness layout: (o, h, w).
Verdict check_m1(const MfFunction& m, double r, const SampleConfig& cfg,
                 M1Guard guard = M1Guard::two_o_plus_h,
                 const PointDomain& range = PointDomain::interval(0.0, 1.0));

// (M2): for sampled h in range with h <= M(h, 0, h, h, 0), require h == 0
// (within the absolute tolerance).
Verdict check_m2(const MfFunction& m, const SampleConfig& cfg,
                 const PointDomain& range = PointDomain::interval(0.0, 1.0));

// The generalized contraction inequality over sampled pairs (o, h). Throws
// PreconditionError unless space.symmetric_claim is set.
Verdict check_mf_contraction(const ComposedSpace& space, const SelfMap& map,
                             const MfFunction& m, const SampleConfig& cfg);

}  // namespace csm

#endif  // CSMETRIC_CONTRACTION_HPP_

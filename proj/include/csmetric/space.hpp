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

#ifndef CSMETRIC_SPACE_HPP_
#define CSMETRIC_SPACE_HPP_

#include <functional>
#include <span>
#include <string>
#include <vector>

#include "csmetric/alpha.hpp"
#include "csmetric/domain.hpp"
#include "csmetric/metric.hpp"

namespace csm {

// A composed S-metric space candidate: point set, triple metric, composing
// function, and whether the metric is claimed to satisfy
// C(q, q, h) == C(h, h, q).
//
// Nothing here proves the axioms; see axiom_audit.hpp for the checks.
struct ComposedSpace {
  PointDomain domain;
  TripleMetric metric;
  AlphaFunction alpha;
  bool symmetric_claim = false;
  // Parameters the space was built from (for serialization of built-ins).
  std::vector<double> params;
};

// Built-in spaces:
//   squared_diff  [lo, hi]  (q-w)^2 + (h-w)^2 on [lo, hi], alpha = e^t.
//                           Default [1, 100].
//   discrete_nat  [max]     piecewise metric on {0..max}, alpha = 2t + 1.
//                           Default max = 50.
//   abs_sum       [lo, hi]  |q-w| + |h-w| on [lo, hi], alpha = e^(2t).
//                           Default [1, 100].
//   app_metric    []        |p-s| + |s-q| on [0, 1], alpha = 2 sqrt(t).
// All four are symmetric. Throws ConfigError on an unknown name or bad
// parameter count.
ComposedSpace make_builtin_space(const std::string& name,
                                 std::span<const double> params = {});

// Same space, different composing function.
ComposedSpace with_alpha(ComposedSpace space, AlphaFunction alpha);

// C(q, h, w) after checking membership of all three points. Throws
// DomainError for a non-member and NumericError for a negative or non-finite
// value.
double eval_metric(const ComposedSpace& space, double q, double h, double w);

// A map F of the domain into itself.
struct SelfMap {
  std::string id;
  std::vector<double> params;
  std::string expression;  // source text for id "expr"
  std::function<double(double)> fn;
  PointDomain domain;

  double operator()(double x) const { return fn(x); }
};

// Built-in maps on `domain`:
//   identity          x
//   constant  [c]     c
//   scale     [a]     a * x
//   reflect           lo + hi - x
//   expr              expression in x
// Polynomial maps live in poly.hpp.
SelfMap make_builtin_map(const std::string& id, std::span<const double> params,
                         const PointDomain& domain,
                         const std::string& expression = {});

// F(x) after checking x and F(x) are in F.domain.
double apply_map(const SelfMap& map, double x);

}  // namespace csm

#endif  // CSMETRIC_SPACE_HPP_

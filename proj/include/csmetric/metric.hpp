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

#ifndef CSMETRIC_METRIC_HPP_
#define CSMETRIC_METRIC_HPP_

#include <functional>
#include <string>

namespace csm {

// A triple distance C(q, h, w) -> [0, inf).
struct TripleMetric {
  std::string id;
  std::function<double(double, double, double)> fn;

  double operator()(double q, double h, double w) const { return fn(q, h, w); }
};

namespace metrics {

// (q - w)^2 + (h - w)^2
TripleMetric squared_diff();

// On naturals: 0 on (c, c, c), 2(c + d + e) on pairwise distinct triples,
// and the sum of the two distinct values when exactly two entries coincide
// (which covers C(c, c, e) = c + e).
TripleMetric discrete_nat();

// |q - w| + |h - w|
TripleMetric abs_sum();

// |p - s| + |s - q|
TripleMetric app_metric();

}  // namespace metrics

}  // namespace csm

#endif  // CSMETRIC_METRIC_HPP_

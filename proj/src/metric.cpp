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

#include "csmetric/metric.hpp"

#include <cmath>

namespace csm::metrics {

TripleMetric squared_diff() {
  return {"squared_diff", [](double q, double h, double w) {
            const double a = q - w;
            const double b = h - w;
            return a * a + b * b;
          }};
}

TripleMetric discrete_nat() {
  return {"discrete_nat", [](double c, double d, double e) {
            if (c == d && d == e) return 0.0;
            if (c != d && d != e && c != e) return 2.0 * (c + d + e);
            if (c == d) return c + e;
            if (d == e) return c + d;
            return c + d;  // c == e
          }};
}

TripleMetric abs_sum() {
  return {"abs_sum", [](double q, double h, double w) {
            return std::abs(q - w) + std::abs(h - w);
          }};
}

TripleMetric app_metric() {
  return {"app_metric", [](double p, double s, double q) {
            return std::abs(p - s) + std::abs(s - q);
          }};
}

}  // namespace csm::metrics

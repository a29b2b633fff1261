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

#include "csmetric/space.hpp"

#include <cmath>
#include <sstream>

#include "csmetric/error.hpp"
#include "csmetric/expression.hpp"

namespace csm {

namespace {

void require_params(const std::string& name, std::span<const double> params,
                    std::size_t n) {
  if (params.size() != n) {
    throw ConfigError("'" + name + "' takes " + std::to_string(n) +
                      " parameter(s), got " + std::to_string(params.size()));
  }
}

std::vector<double> interval_params(const std::string& name,
                                    std::span<const double> params) {
  if (params.empty()) return {1.0, 100.0};
  require_params(name, params, 2);
  return {params[0], params[1]};
}

}  // namespace

ComposedSpace make_builtin_space(const std::string& name,
                                 std::span<const double> params) {
  if (name == "squared_diff") {
    auto p = interval_params(name, params);
    return {PointDomain::interval(p[0], p[1]), metrics::squared_diff(),
            AlphaFunction::exponential(), true, p};
  }
  if (name == "discrete_nat") {
    double max = 50.0;
    if (!params.empty()) {
      require_params(name, params, 1);
      max = params[0];
    }
    if (!(max >= 0.0) || std::floor(max) != max) {
      throw ConfigError("discrete_nat needs a natural max, got " +
                        std::to_string(max));
    }
    return {PointDomain::naturals(static_cast<std::uint64_t>(max)),
            metrics::discrete_nat(), AlphaFunction::affine(2.0, 1.0), true,
            {max}};
  }
  if (name == "abs_sum") {
    auto p = interval_params(name, params);
    return {PointDomain::interval(p[0], p[1]), metrics::abs_sum(),
            AlphaFunction::exponential_double(), true, p};
  }
  if (name == "app_metric") {
    require_params(name, params, 0);
    return {PointDomain::interval(0.0, 1.0), metrics::app_metric(),
            AlphaFunction::two_sqrt(), true, {}};
  }
  throw ConfigError("unknown space '" + name + "'");
}

ComposedSpace with_alpha(ComposedSpace space, AlphaFunction alpha) {
  space.alpha = std::move(alpha);
  return space;
}

double eval_metric(const ComposedSpace& space, double q, double h, double w) {
  space.domain.require(q);
  space.domain.require(h);
  space.domain.require(w);
  const double v = space.metric(q, h, w);
  if (!std::isfinite(v) || v < 0.0) {
    std::ostringstream os;
    os.precision(17);
    os << "metric '" << space.metric.id << "' produced " << v << " at (" << q
       << ", " << h << ", " << w << ")";
    throw NumericError(os.str());
  }
  return v;
}

SelfMap make_builtin_map(const std::string& id, std::span<const double> params,
                         const PointDomain& domain,
                         const std::string& expression) {
  std::vector<double> p(params.begin(), params.end());
  if (id == "identity") {
    require_params(id, params, 0);
    return {id, p, {}, [](double x) { return x; }, domain};
  }
  if (id == "constant") {
    require_params(id, params, 1);
    domain.require(p[0], "constant map value");
    const double c = p[0];
    return {id, p, {}, [c](double) { return c; }, domain};
  }
  if (id == "scale") {
    require_params(id, params, 1);
    const double a = p[0];
    return {id, p, {}, [a](double x) { return a * x; }, domain};
  }
  if (id == "reflect") {
    require_params(id, params, 0);
    const double s = domain.lo() + domain.hi();
    return {id, p, {}, [s](double x) { return s - x; }, domain};
  }
  if (id == "expr") {
    if (expression.empty()) throw ConfigError("map 'expr' needs an expression");
    auto e = Expression::parse(expression);
    return {id, p, expression, [e](double x) { return e(x); }, domain};
  }
  throw ConfigError("unknown map '" + id + "'");
}

double apply_map(const SelfMap& map, double x) {
  map.domain.require(x);
  const double y = map(x);
  map.domain.require(y, "image");
  return y;
}

}  // namespace csm

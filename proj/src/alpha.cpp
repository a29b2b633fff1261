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

#include "csmetric/alpha.hpp"

#include <array>
#include <cmath>
#include <sstream>

#include "csmetric/error.hpp"

namespace csm {

AlphaFunction::AlphaFunction(Kind kind, std::string id,
                             std::vector<double> params,
                             std::optional<Expression> expr)
    : kind_(kind),
      id_(std::move(id)),
      params_(std::move(params)),
      expr_(std::move(expr)) {
  require_non_constant();
}

AlphaFunction AlphaFunction::identity() {
  return AlphaFunction(Kind::identity, "identity", {});
}

AlphaFunction AlphaFunction::linear(double slope) {
  if (!std::isfinite(slope) || slope <= 0.0) {
    throw ConfigError("linear alpha needs a positive finite slope");
  }
  return AlphaFunction(Kind::linear, "linear", {slope});
}

AlphaFunction AlphaFunction::affine(double slope, double offset) {
  if (!std::isfinite(slope) || slope <= 0.0 || !std::isfinite(offset) ||
      offset < 0.0) {
    throw ConfigError("affine alpha needs slope > 0 and offset >= 0");
  }
  return AlphaFunction(Kind::affine, "affine", {slope, offset});
}

AlphaFunction AlphaFunction::exponential() {
  return AlphaFunction(Kind::exp, "exp", {});
}

AlphaFunction AlphaFunction::exponential_double() {
  return AlphaFunction(Kind::exp_double, "exp_double", {});
}

AlphaFunction AlphaFunction::two_sqrt() {
  return AlphaFunction(Kind::two_sqrt, "two_sqrt", {});
}

AlphaFunction AlphaFunction::from_expression(const std::string& source) {
  return AlphaFunction(Kind::expression, "expr", {},
                       Expression::parse(source));
}

AlphaFunction AlphaFunction::builtin(const std::string& id,
                                     std::span<const double> params,
                                     const std::string& expression) {
  auto arity = [&](std::size_t n) {
    if (params.size() != n) {
      throw ConfigError("alpha '" + id + "' takes " + std::to_string(n) +
                        " parameter(s), got " + std::to_string(params.size()));
    }
  };
  if (id == "identity") {
    arity(0);
    return identity();
  }
  if (id == "linear") {
    arity(1);
    return linear(params[0]);
  }
  if (id == "affine") {
    if (params.empty()) return affine(2.0, 1.0);
    arity(2);
    return affine(params[0], params[1]);
  }
  if (id == "exp") {
    arity(0);
    return exponential();
  }
  if (id == "exp_double") {
    arity(0);
    return exponential_double();
  }
  if (id == "two_sqrt") {
    arity(0);
    return two_sqrt();
  }
  if (id == "expr") {
    if (expression.empty()) throw ConfigError("alpha 'expr' needs an expression");
    return from_expression(expression);
  }
  throw ConfigError("unknown alpha '" + id + "'");
}

std::string AlphaFunction::expression_source() const {
  return expr_ ? expr_->source() : std::string();
}

double AlphaFunction::operator()(double t) const {
  switch (kind_) {
    case Kind::identity: return t;
    case Kind::linear: return params_[0] * t;
    case Kind::affine: return params_[0] * t + params_[1];
    case Kind::exp: return std::exp(t);
    case Kind::exp_double: return std::exp(2.0 * t);
    case Kind::two_sqrt: return 2.0 * std::sqrt(t);
    case Kind::expression: return (*expr_)(t);
  }
  return 0.0;
}

void AlphaFunction::require_non_constant() const {
  constexpr std::array<double, 5> probe{0.0, 0.5, 1.0, 2.0, 4.0};
  const double first = (*this)(probe[0]);
  for (double t : probe) {
    const double v = (*this)(t);
    if (v != first && !(std::isnan(v) && std::isnan(first))) return;
  }
  throw ConfigError("alpha '" + id_ +
                    "' is constant on the probe grid; composing functions "
                    "must be non-constant");
}

double eval_alpha(const AlphaFunction& alpha, double t) {
  if (!(t >= 0.0)) {
    std::ostringstream os;
    os << "alpha argument must be >= 0, got " << t;
    throw DomainError(os.str(), t);
  }
  const double v = alpha(t);
  if (std::isnan(v) || v < 0.0) {
    std::ostringstream os;
    os << "alpha '" << alpha.id() << "' produced " << v << " at t=" << t;
    throw NumericError(os.str());
  }
  return v;
}

double iterate_alpha(const AlphaFunction& alpha, std::size_t j, double t) {
  if (!(t >= 0.0)) {
    std::ostringstream os;
    os << "alpha argument must be >= 0, got " << t;
    throw DomainError(os.str(), t);
  }
  for (std::size_t i = 0; i < j; ++i) t = eval_alpha(alpha, t);
  return t;
}

}  // namespace csm

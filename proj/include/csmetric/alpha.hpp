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

#ifndef CSMETRIC_ALPHA_HPP_
#define CSMETRIC_ALPHA_HPP_

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "csmetric/expression.hpp"

namespace csm {

// A composing function alpha: [0, inf) -> [0, inf). It wraps each term on the
// right-hand side of the composed triangle inequality.
//
// Built-in ids and parameters:
//   identity            t
//   linear      [b]     b * t
//   affine      [b, c]  b * t + c        (defaults 2, 1)
//   exp                 e^t
//   exp_double          e^(2t)
//   two_sqrt            2 * sqrt(t)
//   expr                user expression in t, see Expression
//
// Construction rejects functions that are constant on the probe grid
// {0, 0.5, 1, 2, 4}.
class AlphaFunction {
 public:
  enum class Kind { identity, linear, affine, exp, exp_double, two_sqrt, expression };

  static AlphaFunction identity();
  static AlphaFunction linear(double slope);
  static AlphaFunction affine(double slope, double offset);
  static AlphaFunction exponential();
  static AlphaFunction exponential_double();
  static AlphaFunction two_sqrt();
  static AlphaFunction from_expression(const std::string& source);

  // Lookup by id; `expression` is only consulted for id "expr".
  static AlphaFunction builtin(const std::string& id,
                               std::span<const double> params = {},
                               const std::string& expression = {});

  Kind kind() const { return kind_; }
  const std::string& id() const { return id_; }
  const std::vector<double>& params() const { return params_; }
  // Source text for expression alphas, empty otherwise.
  std::string expression_source() const;

  // Unchecked evaluation. Prefer eval_alpha.
  double operator()(double t) const;

 private:
  AlphaFunction(Kind kind, std::string id, std::vector<double> params,
                std::optional<Expression> expr = std::nullopt);
  void require_non_constant() const;

  Kind kind_;
  std::string id_;
  std::vector<double> params_;
  std::optional<Expression> expr_;
};

// alpha(t). Throws DomainError for t < 0 and NumericError when the result is
// NaN or negative. Overflow to +inf is returned as is.
double eval_alpha(const AlphaFunction& alpha, double t);

// j-fold composition alpha^j(t); j = 0 returns t.
double iterate_alpha(const AlphaFunction& alpha, std::size_t j, double t);

}  // namespace csm

#endif  // CSMETRIC_ALPHA_HPP_

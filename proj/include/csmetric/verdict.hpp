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

#ifndef CSMETRIC_VERDICT_HPP_
#define CSMETRIC_VERDICT_HPP_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "csmetric/sampling.hpp"

namespace csm {

// Outcome of a sampled check.
//
// worst_margin is the most negative slack (rhs - lhs) seen. On failure the
// witness is the violating tuple with the most negative slack, ties broken
// by the lexicographically smallest tuple, and worst_margin is its slack.
struct Verdict {
  std::string check;
  bool passed = true;
  std::size_t checked = 0;
  std::optional<std::vector<double>> witness;
  double worst_margin = std::numeric_limits<double>::infinity();
  std::uint64_t seed = 0;

  friend bool operator==(const Verdict&, const Verdict&) = default;
};

// Slack of one tuple. `violated` is normally derived from the tolerance;
// checks with a non-inequality criterion set it themselves.
struct Slack {
  double slack = 0.0;
  double rhs = 0.0;
  std::optional<bool> violated;
};

// Folds per-tuple slacks into a Verdict.
class VerdictBuilder {
 public:
  VerdictBuilder(std::string check, std::uint64_t seed, Tolerance tol = {});

  void add(std::span<const double> tuple, const Slack& s);
  Verdict finish() &&;

 private:
  Verdict v_;
  Tolerance tol_;
  double violation_margin_ = std::numeric_limits<double>::infinity();
};

// Runs `eval` on every sampled tuple of the given arity. Throws ConfigError
// when the sample is empty.
Verdict run_sampled_check(
    const std::string& name, const PointDomain& domain, std::size_t arity,
    const SampleConfig& cfg,
    const std::function<Slack(std::span<const double>)>& eval);

}  // namespace csm

#endif  // CSMETRIC_VERDICT_HPP_

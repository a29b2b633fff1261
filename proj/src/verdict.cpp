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

#include "csmetric/verdict.hpp"

#include <algorithm>
#include <cmath>

#include "csmetric/error.hpp"

namespace csm {

VerdictBuilder::VerdictBuilder(std::string check, std::uint64_t seed,
                               Tolerance tol)
    : tol_(tol) {
  v_.check = std::move(check);
  v_.seed = seed;
}

void VerdictBuilder::add(std::span<const double> tuple, const Slack& s) {
  ++v_.checked;
  const double slack =
      std::isnan(s.slack) ? -std::numeric_limits<double>::infinity() : s.slack;
  v_.worst_margin = std::min(v_.worst_margin, slack);
  const bool violated =
      s.violated.value_or(std::isnan(s.slack) || slack < -tol_.bound(s.rhs));
  if (!violated) return;
  const bool better =
      !v_.witness || slack < violation_margin_ ||
      (slack == violation_margin_ &&
       std::lexicographical_compare(tuple.begin(), tuple.end(),
                                    v_.witness->begin(), v_.witness->end()));
  if (better) {
    violation_margin_ = slack;
    v_.witness.emplace(tuple.begin(), tuple.end());
  }
}

Verdict VerdictBuilder::finish() && {
  v_.passed = !v_.witness.has_value();
  if (!v_.passed) v_.worst_margin = violation_margin_;
  return std::move(v_);
}

Verdict run_sampled_check(
    const std::string& name, const PointDomain& domain, std::size_t arity,
    const SampleConfig& cfg,
    const std::function<Slack(std::span<const double>)>& eval) {
  VerdictBuilder builder(name, cfg.seed, cfg.tolerance);
  sample_tuples(domain, arity, cfg, [&](std::span<const double> t) {
    builder.add(t, eval(t));
  });
  Verdict v = std::move(builder).finish();
  if (v.checked == 0) throw ConfigError(name + ": empty sample");
  return v;
}

}  // namespace csm

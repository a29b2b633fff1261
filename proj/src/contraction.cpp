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

#include "csmetric/contraction.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "csmetric/error.hpp"

namespace csm {

namespace mf {

MfFunction banach(double r) {
  if (!(r >= 0.0 && r < 1.0)) throw ConfigError("banach Mf needs r in [0, 1)");
  return {"banach", {r}, [r](const std::array<double, 5>& t) { return r * t[0]; }};
}

MfFunction kannan(double a) {
  if (!(a >= 0.0 && a < 0.5)) throw ConfigError("kannan Mf needs a in [0, 1/2)");
  return {"kannan", {a},
          [a](const std::array<double, 5>& t) { return a * (t[1] + t[4]); }};
}

MfFunction bianchini(double a) {
  if (!(a >= 0.0 && a < 1.0)) throw ConfigError("bianchini Mf needs a in [0, 1)");
  return {"bianchini", {a}, [a](const std::array<double, 5>& t) {
            return a * std::max(t[1], t[4]);
          }};
}

}  // namespace mf

namespace {

// Slack recorded for tuples whose premise does not hold.
constexpr double kVacuous = std::numeric_limits<double>::infinity();

double image(const ComposedSpace& space, const SelfMap& map, double x) {
  const double y = map(x);
  space.domain.require(y, "image");
  return y;
}

}  // namespace

ContractionEstimate estimate_contraction_factor(const ComposedSpace& space,
                                                const SelfMap& map,
                                                const SampleConfig& cfg) {
  ContractionEstimate est;
  sample_tuples(space.domain, 3, cfg, [&](std::span<const double> t) {
    const double base = space.metric(t[0], t[1], t[2]);
    if (!(base >= kDegenerateDistance)) return;
    const double fq = image(space, map, t[0]);
    const double fh = image(space, map, t[1]);
    const double fw = image(space, map, t[2]);
    const double ratio = space.metric(fq, fh, fw) / base;
    if (est.samples == 0 || ratio > est.sup_ratio) {
      est.sup_ratio = ratio;
      est.argmax_tuple = {t[0], t[1], t[2]};
    }
    ++est.samples;
  });
  if (est.samples == 0) {
    throw ConfigError("contraction estimate: every sampled triple is degenerate");
  }
  return est;
}

Verdict check_banach(const ComposedSpace& space, const SelfMap& map, double r,
                     const SampleConfig& cfg) {
  if (!(r > 0.0 && r < 1.0)) throw DomainError("banach: r must lie in (0, 1)", r);
  return run_sampled_check(
      "banach_contraction", space.domain, 3, cfg, [&](std::span<const double> t) {
        const double lhs = space.metric(image(space, map, t[0]),
                                        image(space, map, t[1]),
                                        image(space, map, t[2]));
        const double rhs = r * space.metric(t[0], t[1], t[2]);
        return Slack{rhs - lhs, rhs, std::nullopt};
      });
}

Verdict check_banach_pairs(const ComposedSpace& space, const SelfMap& map,
                           double r, const SampleConfig& cfg) {
  if (!(r > 0.0 && r < 1.0)) throw DomainError("banach: r must lie in (0, 1)", r);
  return run_sampled_check(
      "banach_contraction_pairs", space.domain, 2, cfg,
      [&](std::span<const double> t) {
        const double fo = image(space, map, t[0]);
        const double fh = image(space, map, t[1]);
        const double lhs = space.metric(fo, fo, fh);
        const double rhs = r * space.metric(t[0], t[0], t[1]);
        return Slack{rhs - lhs, rhs, std::nullopt};
      });
}

Verdict check_m1(const MfFunction& m, double r, const SampleConfig& cfg,
                 M1Guard guard, const PointDomain& range) {
  if (!(r >= 0.0 && r < 1.0)) throw ConfigError("check_m1: r must lie in [0, 1)");
  if (range.lo() < 0.0) throw ConfigError("check_m1: range must be nonnegative");
  return run_sampled_check(
      "m1", range, 3, cfg, [&](std::span<const double> t) {
        const double o = t[0], h = t[1], w = t[2];
        const bool guarded = guard == M1Guard::two_o_plus_h ? w <= 2.0 * o + h
                                                            : w <= o + 2.0 * h;
        const double rhs = r * o;
        if (!guarded || !(h <= m(o, o, 0.0, w, h))) {
          return Slack{kVacuous, rhs, false};
        }
        return Slack{rhs - h, rhs, std::nullopt};
      });
}

Verdict check_m2(const MfFunction& m, const SampleConfig& cfg,
                 const PointDomain& range) {
  if (range.lo() < 0.0) throw ConfigError("check_m2: range must be nonnegative");
  return run_sampled_check(
      "m2", range, 1, cfg, [&](std::span<const double> t) {
        const double h = t[0];
        if (!(h <= m(h, 0.0, h, h, 0.0))) return Slack{kVacuous, 0.0, false};
        return Slack{-h, 0.0, std::nullopt};
      });
}

Verdict check_mf_contraction(const ComposedSpace& space, const SelfMap& map,
                             const MfFunction& m, const SampleConfig& cfg) {
  if (!space.symmetric_claim) {
    throw PreconditionError(
        "mf_contraction requires a space claimed symmetric");
  }
  const auto& C = space.metric;
  return run_sampled_check(
      "mf_contraction", space.domain, 2, cfg, [&](std::span<const double> t) {
        const double o = t[0], h = t[1];
        const double fo = image(space, map, o);
        const double fh = image(space, map, h);
        const double lhs = C(fo, fo, fh);
        const double rhs = m(C(o, o, h), C(fo, fo, o), C(fo, fo, h),
                             C(fh, fh, o), C(fh, fh, h));
        return Slack{rhs - lhs, rhs, std::nullopt};
      });
}

}  // namespace csm

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

#ifndef CSMETRIC_SAMPLING_HPP_
#define CSMETRIC_SAMPLING_HPP_

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "csmetric/domain.hpp"

namespace csm {

enum class SampleStrategy { uniform_random, stratified_grid, grid_plus_random };

const char* to_string(SampleStrategy s);
SampleStrategy sample_strategy_from_string(const std::string& name);

// Violation threshold for inequality checks: a tuple fails when
// rhs - lhs < -(abs + rel * |rhs|).
struct Tolerance {
  double abs = 1e-9;
  double rel = 1e-9;

  double bound(double rhs) const { return abs + rel * std::abs(rhs); }
};

struct SampleConfig {
  std::uint64_t seed = 42;
  std::size_t count = 10000;
  SampleStrategy strategy = SampleStrategy::grid_plus_random;
  // Tuples evaluated before the generated ones, e.g. a known witness that
  // must be part of the sample. Each must have the check's arity.
  std::vector<std::vector<double>> pinned;
  Tolerance tolerance;
};

// Emits up to cfg.count tuples of `arity` domain members (plus the pinned
// tuples, which do not count against cfg.count).
//
// The emitted sequence depends only on (seed, strategy, domain, arity), and
// a smaller count always yields a prefix of a larger one:
//   stratified_grid   nested grid. Each axis is ordered lo, hi, midpoint,
//                     quarter points, ... (deduplicated for discrete
//                     domains) and tuples are emitted in shells of
//                     increasing maximum axis index, lexicographically
//                     within a shell. Stops early once a finite grid is
//                     exhausted.
//   uniform_random    i.i.d. coordinates from a mt19937_64 seeded with
//                     `seed`.
//   grid_plus_random  the first few shells of the nested grid (a coarse
//                     grid of about 1024 tuples), then uniform_random.
//
// Returns the number of tuples emitted.
std::size_t sample_tuples(const PointDomain& domain, std::size_t arity,
                          const SampleConfig& cfg,
                          const std::function<void(std::span<const double>)>& sink);

// Convenience wrapper collecting sample_tuples into a vector.
std::vector<std::vector<double>> collect_tuples(const PointDomain& domain,
                                                std::size_t arity,
                                                const SampleConfig& cfg);

// The first `length` axis values of the nested grid on `domain`; fewer when a
// discrete domain runs out of distinct values.
std::vector<double> grid_axis(const PointDomain& domain, std::size_t length);

}  // namespace csm

#endif  // CSMETRIC_SAMPLING_HPP_

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

#include "csmetric/sampling.hpp"

#include <algorithm>
#include <bit>
#include <random>
#include <set>

#include "csmetric/error.hpp"

namespace csm {

namespace {

// Position in [0, 1] of the i-th point of the nested dyadic grid:
// 0, 1, 1/2, 1/4, 3/4, 1/8, 3/8, ...
double dyadic(std::size_t i) {
  if (i == 0) return 0.0;
  if (i == 1) return 1.0;
  const std::size_t j = i - 2;
  const unsigned level = static_cast<unsigned>(std::bit_width(j + 1));
  const std::size_t offset = j - ((std::size_t{1} << (level - 1)) - 1);
  return static_cast<double>(2 * offset + 1) /
         static_cast<double>(std::size_t{1} << level);
}

std::size_t axis_capacity(const PointDomain& domain) {
  switch (domain.kind()) {
    case DomainKind::real_interval: return SIZE_MAX;
    case DomainKind::naturals_up_to: return static_cast<std::size_t>(domain.max()) + 1;
    case DomainKind::finite_real_set: return domain.elements().size();
  }
  return 0;
}

// Emits the tuples of shell s (index tuples in [0, s]^k with max == s) in
// lexicographic order. Returns false when the sink asked to stop.
template <typename Emit>
bool emit_shell(std::size_t s, std::size_t arity, Emit&& emit) {
  std::vector<std::size_t> idx(arity, 0);
  for (;;) {
    if (std::find(idx.begin(), idx.end(), s) != idx.end()) {
      if (!emit(idx)) return false;
    }
    std::size_t pos = arity;
    while (pos > 0) {
      --pos;
      if (idx[pos] < s) {
        ++idx[pos];
        std::fill(idx.begin() + static_cast<std::ptrdiff_t>(pos) + 1, idx.end(), 0);
        break;
      }
      if (pos == 0) return true;
    }
    if (arity == 0) return true;
  }
}

double random_point(const PointDomain& domain, std::mt19937_64& rng) {
  switch (domain.kind()) {
    case DomainKind::real_interval: {
      const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
      return std::min(domain.hi(), domain.lo() + u * (domain.hi() - domain.lo()));
    }
    case DomainKind::naturals_up_to:
      return static_cast<double>(rng() % (domain.max() + 1));
    case DomainKind::finite_real_set: {
      const auto& e = domain.elements();
      return e[rng() % e.size()];
    }
  }
  return domain.lo();
}

}  // namespace

const char* to_string(SampleStrategy s) {
  switch (s) {
    case SampleStrategy::uniform_random: return "uniform_random";
    case SampleStrategy::stratified_grid: return "stratified_grid";
    case SampleStrategy::grid_plus_random: return "grid_plus_random";
  }
  return "?";
}

SampleStrategy sample_strategy_from_string(const std::string& name) {
  if (name == "uniform_random") return SampleStrategy::uniform_random;
  if (name == "stratified_grid") return SampleStrategy::stratified_grid;
  if (name == "grid_plus_random") return SampleStrategy::grid_plus_random;
  throw ConfigError("unknown sampling strategy '" + name + "'");
}

std::vector<double> grid_axis(const PointDomain& domain, std::size_t length) {
  std::vector<double> axis;
  switch (domain.kind()) {
    case DomainKind::real_interval:
      axis.reserve(length);
      for (std::size_t i = 0; i < length; ++i) {
        const double f = dyadic(i);
        axis.push_back(f == 1.0 ? domain.hi()
                                : domain.lo() + f * (domain.hi() - domain.lo()));
      }
      break;
    case DomainKind::naturals_up_to: {
      const std::size_t n = std::min<std::size_t>(length, axis_capacity(domain));
      std::set<double> seen;
      const double max = static_cast<double>(domain.max());
      for (std::size_t i = 0; axis.size() < n; ++i) {
        const double v = std::round(dyadic(i) * max);
        if (seen.insert(v).second) axis.push_back(v);
      }
      break;
    }
    case DomainKind::finite_real_set: {
      const auto& e = domain.elements();
      axis.assign(e.begin(), e.begin() + static_cast<std::ptrdiff_t>(
                                              std::min(length, e.size())));
      break;
    }
  }
  return axis;
}

std::size_t sample_tuples(
    const PointDomain& domain, std::size_t arity, const SampleConfig& cfg,
    const std::function<void(std::span<const double>)>& sink) {
  if (arity == 0) throw ConfigError("sample arity must be positive");
  std::size_t emitted = 0;
  for (const auto& t : cfg.pinned) {
    if (t.size() != arity) {
      throw ConfigError("pinned tuple has arity " + std::to_string(t.size()) +
                        ", expected " + std::to_string(arity));
    }
    for (double x : t) domain.require(x, "pinned coordinate");
    sink(t);
    ++emitted;
  }

  std::size_t generated = 0;
  std::vector<double> tuple(arity);

  auto run_grid = [&](std::size_t shells) {
    if (generated >= cfg.count) return;
    shells = std::min(shells, axis_capacity(domain));
    const auto axis = grid_axis(domain, shells);
    for (std::size_t s = 0; s < axis.size(); ++s) {
      bool more = emit_shell(s, arity, [&](const std::vector<std::size_t>& idx) {
        for (std::size_t i = 0; i < arity; ++i) tuple[i] = axis[idx[i]];
        sink(tuple);
        ++generated;
        return generated < cfg.count;
      });
      if (!more) return;
    }
  };

  auto run_random = [&] {
    std::mt19937_64 rng(cfg.seed);
    while (generated < cfg.count) {
      for (std::size_t i = 0; i < arity; ++i) tuple[i] = random_point(domain, rng);
      sink(tuple);
      ++generated;
    }
  };

  switch (cfg.strategy) {
    case SampleStrategy::stratified_grid: {
      // Enough shells to reach count tuples: (s + 1)^arity >= count.
      const double root = std::pow(static_cast<double>(cfg.count),
                                   1.0 / static_cast<double>(arity));
      run_grid(static_cast<std::size_t>(std::ceil(root)) + 1);
      break;
    }
    case SampleStrategy::uniform_random:
      run_random();
      break;
    case SampleStrategy::grid_plus_random: {
      const double per_axis = std::floor(
          std::pow(1024.0, 1.0 / static_cast<double>(arity)) + 1e-9);
      run_grid(std::max<std::size_t>(2, static_cast<std::size_t>(per_axis)));
      run_random();
      break;
    }
  }
  return emitted + generated;
}

std::vector<std::vector<double>> collect_tuples(const PointDomain& domain,
                                                std::size_t arity,
                                                const SampleConfig& cfg) {
  std::vector<std::vector<double>> out;
  sample_tuples(domain, arity, cfg, [&](std::span<const double> t) {
    out.emplace_back(t.begin(), t.end());
  });
  return out;
}

}  // namespace csm

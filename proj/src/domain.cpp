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

#include "csmetric/domain.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "csmetric/error.hpp"

namespace csm {

PointDomain PointDomain::interval(double lo, double hi) {
  if (!std::isfinite(lo) || !std::isfinite(hi) || !(lo < hi)) {
    std::ostringstream os;
    os << "real_interval requires finite lo < hi, got [" << lo << ", " << hi
       << "]";
    throw ConfigError(os.str());
  }
  PointDomain d;
  d.kind_ = DomainKind::real_interval;
  d.lo_ = lo;
  d.hi_ = hi;
  return d;
}

PointDomain PointDomain::naturals(std::uint64_t max) {
  if (max < 4) {
    throw ConfigError("naturals_up_to requires max >= 4, got " +
                      std::to_string(max));
  }
  PointDomain d;
  d.kind_ = DomainKind::naturals_up_to;
  d.lo_ = 0.0;
  d.hi_ = static_cast<double>(max);
  d.max_ = max;
  return d;
}

PointDomain PointDomain::finite_set(std::vector<double> elements) {
  std::vector<double> unique;
  for (double x : elements) {
    if (!std::isfinite(x)) throw ConfigError("finite_real_set elements must be finite");
    if (std::find(unique.begin(), unique.end(), x) == unique.end()) {
      unique.push_back(x);
    }
  }
  if (unique.empty()) throw ConfigError("finite_real_set must not be empty");
  PointDomain d;
  d.kind_ = DomainKind::finite_real_set;
  d.lo_ = *std::min_element(unique.begin(), unique.end());
  d.hi_ = *std::max_element(unique.begin(), unique.end());
  d.elements_ = std::move(unique);
  return d;
}

bool PointDomain::contains(double x) const {
  if (!std::isfinite(x)) return false;
  switch (kind_) {
    case DomainKind::real_interval:
      return lo_ <= x && x <= hi_;
    case DomainKind::naturals_up_to:
      return x >= 0.0 && x <= hi_ && std::floor(x) == x;
    case DomainKind::finite_real_set:
      return std::find(elements_.begin(), elements_.end(), x) !=
             elements_.end();
  }
  return false;
}

void PointDomain::require(double x, const char* what) const {
  if (!contains(x)) {
    std::ostringstream os;
    os.precision(17);
    os << what << " " << x << " is outside " << describe();
    throw DomainError(os.str(), x);
  }
}

std::string PointDomain::describe() const {
  std::ostringstream os;
  switch (kind_) {
    case DomainKind::real_interval:
      os << "[" << lo_ << ", " << hi_ << "]";
      break;
    case DomainKind::naturals_up_to:
      os << "{0, ..., " << max_ << "}";
      break;
    case DomainKind::finite_real_set:
      os << "{";
      for (std::size_t i = 0; i < elements_.size(); ++i) {
        os << (i ? ", " : "") << elements_[i];
      }
      os << "}";
      break;
  }
  return os.str();
}

const char* to_string(DomainKind kind) {
  switch (kind) {
    case DomainKind::real_interval: return "real_interval";
    case DomainKind::naturals_up_to: return "naturals_up_to";
    case DomainKind::finite_real_set: return "finite_real_set";
  }
  return "?";
}

DomainKind domain_kind_from_string(const std::string& name) {
  if (name == "real_interval") return DomainKind::real_interval;
  if (name == "naturals_up_to") return DomainKind::naturals_up_to;
  if (name == "finite_real_set") return DomainKind::finite_real_set;
  throw ConfigError("unknown domain kind '" + name + "'");
}

}  // namespace csm

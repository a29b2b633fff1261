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

#ifndef CSMETRIC_DOMAIN_HPP_
#define CSMETRIC_DOMAIN_HPP_

#include <cstdint>
#include <string>
#include <vector>

namespace csm {

enum class DomainKind { real_interval, naturals_up_to, finite_real_set };

// The point set of a space. Unbounded sets are represented by a finite
// truncation so that they can be sampled.
class PointDomain {
 public:
  // Closed interval [lo, hi]; requires finite lo < hi.
  static PointDomain interval(double lo, double hi);
  // {0, 1, ..., max}; requires max >= 4.
  static PointDomain naturals(std::uint64_t max);
  // Explicit list of reals; duplicates are dropped, order is kept.
  static PointDomain finite_set(std::vector<double> elements);

  DomainKind kind() const { return kind_; }
  double lo() const { return lo_; }
  double hi() const { return hi_; }
  std::uint64_t max() const { return max_; }
  const std::vector<double>& elements() const { return elements_; }

  bool contains(double x) const;
  // Throws DomainError naming `what` if x is not a member.
  void require(double x, const char* what = "point") const;

  std::string describe() const;

  friend bool operator==(const PointDomain&, const PointDomain&) = default;

 private:
  PointDomain() = default;

  DomainKind kind_ = DomainKind::real_interval;
  double lo_ = 0.0;
  double hi_ = 1.0;
  std::uint64_t max_ = 0;
  std::vector<double> elements_;
};

const char* to_string(DomainKind kind);
DomainKind domain_kind_from_string(const std::string& name);

}  // namespace csm

#endif  // CSMETRIC_DOMAIN_HPP_

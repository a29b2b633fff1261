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

#ifndef CSMETRIC_ERROR_HPP_
#define CSMETRIC_ERROR_HPP_

#include <optional>
#include <stdexcept>
#include <string>

namespace csm {

// Base of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A point, parameter or iterate lies outside the set it must belong to.
class DomainError : public Error {
 public:
  explicit DomainError(const std::string& what,
                       std::optional<double> offending = std::nullopt)
      : Error(what), offending_(offending) {}

  // The point that triggered the error, when there is one (e.g. the iterate
  // that escaped the domain during a Picard run).
  std::optional<double> offending() const { return offending_; }

 private:
  std::optional<double> offending_;
};

// Bad names, malformed documents, empty samples.
class ConfigError : public Error {
 public:
  using Error::Error;
};

// Non-finite or negative values where a distance or alpha value is expected.
class NumericError : public Error {
 public:
  using Error::Error;
};

// An operation was invoked on an object lacking a required property.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

}  // namespace csm

#endif  // CSMETRIC_ERROR_HPP_

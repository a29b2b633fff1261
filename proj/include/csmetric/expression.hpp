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

#ifndef CSMETRIC_EXPRESSION_HPP_
#define CSMETRIC_EXPRESSION_HPP_

#include <memory>
#include <string>
#include <string_view>

namespace csm {

// A one-variable closed-form expression, used for user-supplied composing
// functions and self-maps.
//
// Grammar:
//   expr   := term (('+' | '-') term)*
//   term   := unary (('*' | '/') unary)*
//   unary  := '-' unary | power
//   power  := atom ('^' unary)?
//   atom   := number | var | func '(' expr ')' | '(' expr ')'
//   var    := 't' | 'x'
//   func   := 'sqrt' | 'exp'
//
// '^' is right associative. Both variable spellings refer to the same
// argument. The original text is retained so the expression serializes
// exactly as it was written.
class Expression {
 public:
  // Throws ConfigError with the byte offset of the first problem.
  static Expression parse(std::string_view source);

  double operator()(double x) const;
  const std::string& source() const { return source_; }

  struct Node;

 private:
  Expression(std::string source, std::shared_ptr<const Node> root)
      : source_(std::move(source)), root_(std::move(root)) {}

  std::string source_;
  std::shared_ptr<const Node> root_;
};

}  // namespace csm

#endif  // CSMETRIC_EXPRESSION_HPP_

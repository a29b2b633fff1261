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

#include "csmetric/expression.hpp"

#include <cctype>
#include <charconv>
#include <cmath>

#include "csmetric/error.hpp"

namespace csm {

struct Expression::Node {
  enum class Op { constant, variable, add, sub, mul, div, pow, neg, sqrt, exp };

  Op op = Op::constant;
  double value = 0.0;
  std::shared_ptr<const Node> lhs;
  std::shared_ptr<const Node> rhs;

  double eval(double x) const {
    switch (op) {
      case Op::constant: return value;
      case Op::variable: return x;
      case Op::add: return lhs->eval(x) + rhs->eval(x);
      case Op::sub: return lhs->eval(x) - rhs->eval(x);
      case Op::mul: return lhs->eval(x) * rhs->eval(x);
      case Op::div: return lhs->eval(x) / rhs->eval(x);
      case Op::pow: return std::pow(lhs->eval(x), rhs->eval(x));
      case Op::neg: return -lhs->eval(x);
      case Op::sqrt: return std::sqrt(lhs->eval(x));
      case Op::exp: return std::exp(lhs->eval(x));
    }
    return 0.0;
  }
};

namespace {

using NodePtr = std::shared_ptr<const Expression::Node>;
using Op = Expression::Node::Op;

NodePtr make(Op op, NodePtr lhs = nullptr, NodePtr rhs = nullptr) {
  auto n = std::make_shared<Expression::Node>();
  n->op = op;
  n->lhs = std::move(lhs);
  n->rhs = std::move(rhs);
  return n;
}

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  NodePtr parse() {
    NodePtr root = expr();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return root;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw ConfigError("expression '" + std::string(text_) + "': " + msg +
                      " at offset " + std::to_string(pos_));
  }

  void skip_space() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  NodePtr expr() {
    NodePtr lhs = term();
    for (;;) {
      if (accept('+')) {
        lhs = make(Op::add, lhs, term());
      } else if (accept('-')) {
        lhs = make(Op::sub, lhs, term());
      } else {
        return lhs;
      }
    }
  }

  NodePtr term() {
    NodePtr lhs = unary();
    for (;;) {
      if (accept('*')) {
        lhs = make(Op::mul, lhs, unary());
      } else if (accept('/')) {
        lhs = make(Op::div, lhs, unary());
      } else {
        return lhs;
      }
    }
  }

  NodePtr unary() {
    if (accept('-')) return make(Op::neg, unary());
    return power();
  }

  NodePtr power() {
    NodePtr base = atom();
    if (accept('^')) return make(Op::pow, base, unary());
    return base;
  }

  NodePtr atom() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      NodePtr inner = expr();
      expect(')');
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
      return number();
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() &&
             std::isalnum(static_cast<unsigned char>(text_[pos_]))) {
        ++pos_;
      }
      std::string_view word = text_.substr(start, pos_ - start);
      if (word == "t" || word == "x") return make(Op::variable);
      if (word == "sqrt" || word == "exp") {
        expect('(');
        NodePtr arg = expr();
        expect(')');
        return make(word == "sqrt" ? Op::sqrt : Op::exp, arg);
      }
      pos_ = start;
      fail("unknown identifier '" + std::string(word) + "'");
    }
    fail(std::string("unexpected character '") + c + "'");
  }

  NodePtr number() {
    const char* first = text_.data() + pos_;
    const char* last = text_.data() + text_.size();
    double value = 0.0;
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc()) fail("malformed number");
    pos_ += static_cast<std::size_t>(ptr - first);
    auto n = std::make_shared<Expression::Node>();
    n->op = Op::constant;
    n->value = value;
    return n;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Expression Expression::parse(std::string_view source) {
  Parser parser(source);
  NodePtr root = parser.parse();
  return Expression(std::string(source), std::move(root));
}

double Expression::operator()(double x) const { return root_->eval(x); }

}  // namespace csm

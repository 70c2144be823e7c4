// Copyright 2026 The valfield Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#ifndef VALFIELD_TOOLS_EXPR_HPP
#define VALFIELD_TOOLS_EXPR_HPP

#include <cctype>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace valfield::cli {

/// Malformed expression; `position` is a 0-based byte offset.
class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::invalid_argument(what + " at position " + std::to_string(position)),
        position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

// Grammar:
//   expr    := term (('+' | '-') term)*
//   term    := unary (('*' | '/') unary | primary)*     juxtaposition multiplies
//   unary   := '-' unary | primary
//   primary := integer | name | func '(' expr ')' | '(' expr ')'
//   func    := conj | norm | inv
//
// Algebra supplies the value type and: integer(mpz), name(string) (an optional,
// empty if unknown), add, sub, mul, div, neg, conj, norm, inv.
template <class Algebra>
class ExprParser {
 public:
  using Value = typename Algebra::Value;

  ExprParser(const Algebra& algebra, std::string_view text) : alg_(algebra), s_(text) {}

  Value parse() {
    Value v = expr();
    skip();
    if (pos_ != s_.size()) throw ParseError("unexpected '" + std::string(1, s_[pos_]) + "'", pos_);
    return v;
  }

 private:
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  bool starts_primary() {
    skip();
    if (pos_ >= s_.size()) return false;
    const char c = s_[pos_];
    return std::isalnum(static_cast<unsigned char>(c)) || c == '(';
  }

  Value expr() {
    Value v = term();
    for (;;) {
      if (eat('+')) {
        v = alg_.add(v, term());
      } else if (eat('-')) {
        v = alg_.sub(v, term());
      } else {
        return v;
      }
    }
  }

  Value term() {
    Value v = unary();
    for (;;) {
      if (eat('*')) {
        v = alg_.mul(v, unary());
      } else if (eat('/')) {
        v = alg_.div(v, unary());
      } else if (starts_primary()) {
        v = alg_.mul(v, primary());
      } else {
        return v;
      }
    }
  }

  Value unary() {
    if (eat('-')) return alg_.neg(unary());
    return primary();
  }

  Value primary() {
    skip();
    if (pos_ >= s_.size()) throw ParseError("unexpected end of input", pos_);
    const std::size_t start = pos_;
    const char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      Value v = expr();
      if (!eat(')')) throw ParseError("expected ')'", pos_);
      return v;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      return alg_.integer(mpz_class(std::string(s_.substr(start, pos_ - start))));
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      while (pos_ < s_.size() && std::isalnum(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      const std::string name(s_.substr(start, pos_ - start));
      if (name == "conj" || name == "norm" || name == "inv") {
        if (!eat('(')) throw ParseError("expected '(' after " + name, pos_);
        Value arg = expr();
        if (!eat(')')) throw ParseError("expected ')'", pos_);
        if (name == "conj") return alg_.conj(arg);
        if (name == "norm") return alg_.norm(arg);
        return alg_.inv(arg);
      }
      auto v = alg_.name(name);
      if (!v) throw ParseError("unknown name '" + name + "'", start);
      return std::move(*v);
    }
    throw ParseError("unexpected '" + std::string(1, c) + "'", pos_);
  }

  const Algebra& alg_;
  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace valfield::cli

#endif  // VALFIELD_TOOLS_EXPR_HPP

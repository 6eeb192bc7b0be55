// Copyright 2026 The tamedeg Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef TAMEDEG_TEXT_HPP
#define TAMEDEG_TEXT_HPP

#include <cctype>
#include <cstdint>
#include <string>
#include <string_view>

#include "tamedeg/errors.hpp"
#include "tamedeg/laurent.hpp"
#include "tamedeg/multipoly.hpp"
#include "tamedeg/rational.hpp"

namespace tamedeg {

namespace detail {

// Recursive-descent reader for the shared polynomial grammar:
//
//   expr    := [+|-] term ((+|-) term)*
//   term    := factor (* factor)*
//   factor  := primary [^ [-] digits]
//   primary := digits [/ digits] | t | x<digits> | ( expr )
//
// Negative exponents are accepted only on units (c*t^k).
class PolyReader {
 public:
  PolyReader(std::string_view text, std::size_t arity, bool allow_x)
      : text_(text), arity_(arity), allow_x_(allow_x) {}

  MultiPoly read() {
    MultiPoly r = expr();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return r;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("parse error at offset " + std::to_string(pos_) + " in '" + std::string(text_) + "': " + what);
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  std::string digits() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected digits");
    return std::string(text_.substr(start, pos_ - start));
  }

  MultiPoly expr() {
    skip_ws();
    bool negate = false;
    if (accept('-')) negate = true;
    else accept('+');
    MultiPoly acc = term();
    if (negate) acc = -acc;
    while (true) {
      if (accept('+')) acc += term();
      else if (accept('-')) acc -= term();
      else break;
    }
    return acc;
  }

  MultiPoly term() {
    MultiPoly acc = factor();
    while (accept('*')) acc = acc * factor();
    return acc;
  }

  MultiPoly factor() {
    MultiPoly base = primary();
    if (!accept('^')) return base;
    bool negative = accept('-');
    std::string d = digits();
    if (d.size() > 9) fail("exponent too large");
    const auto k = static_cast<std::int64_t>(std::stoll(d));
    if (!negative) return base.pow(static_cast<unsigned>(k));
    if (!base.is_x_constant() || base.is_zero() || !base.terms().begin()->second.is_monomial())
      fail("negative exponent on a non-unit");
    const auto& [e, c] = *base.terms().begin()->second.terms().begin();
    std::int64_t power;
    if (__builtin_mul_overflow(e, -k, &power)) throw OverflowError("exponent overflow");
    return MultiPoly::constant(arity_, LaurentPoly::monomial(c.pow(-k), power));
  }

  MultiPoly primary() {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      MultiPoly inner = expr();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::string num = digits();
      std::string den = "1";
      if (pos_ < text_.size() && text_[pos_] == '/') {
        ++pos_;
        den = digits();
      }
      return MultiPoly::constant(arity_, LaurentPoly(Rational::parse(num + "/" + den)));
    }
    if (c == 't') {
      ++pos_;
      return MultiPoly::constant(arity_, LaurentPoly::t());
    }
    if (c == 'x') {
      if (!allow_x_) fail("x-variables are not allowed here");
      ++pos_;
      std::string idx = digits();
      if (idx.size() > 3) fail("variable index too large");
      const auto i = static_cast<std::size_t>(std::stoul(idx));
      if (i < 1 || i > arity_) fail("variable x" + idx + " outside arity " + std::to_string(arity_));
      return MultiPoly::variable(arity_, i);
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t arity_;
  bool allow_x_;
};

}  // namespace detail

/// Reads a polynomial such as `x2 - 1/2*t^-1*x1^2` in the given arity.
inline MultiPoly parse_multipoly(std::string_view text, std::size_t arity) {
  return detail::PolyReader(text, arity, true).read();
}

/// Reads a Laurent polynomial such as `-2/3*t^-2 + 1 + 5*t^3`.
inline LaurentPoly parse_laurent(std::string_view text) {
  MultiPoly p = detail::PolyReader(text, 1, false).read();
  return p.is_zero() ? LaurentPoly() : p.terms().begin()->second;
}

}  // namespace tamedeg

#endif  // TAMEDEG_TEXT_HPP

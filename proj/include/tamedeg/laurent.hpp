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

#ifndef TAMEDEG_LAURENT_HPP
#define TAMEDEG_LAURENT_HPP

#include <cstdint>
#include <initializer_list>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <utility>

#include "tamedeg/errors.hpp"
#include "tamedeg/rational.hpp"

namespace tamedeg {

/// Which coefficient ring a unit or membership question is asked in:
/// R = Q[t] (Polynomial) or its localization R' = Q[t, t^-1] (Laurent).
enum class RingMode { Polynomial, Laurent };

inline const char* to_string(RingMode mode) { return mode == RingMode::Polynomial ? "polynomial" : "laurent"; }

inline RingMode parse_ring_mode(const std::string& s) {
  if (s == "polynomial") return RingMode::Polynomial;
  if (s == "laurent") return RingMode::Laurent;
  throw ParseError("unknown ring mode '" + s + "'");
}

namespace detail {

inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw OverflowError("exponent overflow");
  return r;
}

inline std::int64_t checked_neg(std::int64_t a) {
  std::int64_t r;
  if (__builtin_sub_overflow(std::int64_t{0}, a, &r)) throw OverflowError("exponent overflow");
  return r;
}

}  // namespace detail

/// Univariate Laurent polynomial in t over Q.
///
/// Terms are kept sorted by exponent with no zero coefficients, so two
/// values are equal iff their term maps are equal.
class LaurentPoly {
 public:
  using Exponent = std::int64_t;
  using TermMap = std::map<Exponent, Rational>;

  LaurentPoly() = default;
  LaurentPoly(const Rational& c) {  // NOLINT(google-explicit-constructor)
    if (!c.is_zero()) terms_.emplace(0, c);
  }
  LaurentPoly(int c) : LaurentPoly(Rational(c)) {}  // NOLINT(google-explicit-constructor)
  LaurentPoly(std::initializer_list<std::pair<Exponent, Rational>> terms) {
    for (const auto& [e, c] : terms) add_term(e, c);
  }

  /// c * t^e
  static LaurentPoly monomial(const Rational& c, Exponent e) {
    LaurentPoly r;
    r.add_term(e, c);
    return r;
  }
  static LaurentPoly t(Exponent e = 1) { return monomial(Rational(1), e); }

  [[nodiscard]] bool is_zero() const { return terms_.empty(); }
  [[nodiscard]] bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 0); }
  [[nodiscard]] bool is_monomial() const { return terms_.size() == 1; }
  [[nodiscard]] std::size_t size() const { return terms_.size(); }
  [[nodiscard]] const TermMap& terms() const { return terms_; }

  [[nodiscard]] Rational coefficient(Exponent e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rational(0) : it->second;
  }
  /// Coefficient of t^0.
  [[nodiscard]] Rational constant_term() const { return coefficient(0); }

  /// Least exponent carrying a nonzero coefficient.
  [[nodiscard]] Exponent valuation() const {
    if (is_zero()) throw UndefinedForZero("valuation of the zero Laurent polynomial");
    return terms_.begin()->first;
  }
  [[nodiscard]] Exponent degree() const {
    if (is_zero()) throw UndefinedForZero("degree of the zero Laurent polynomial");
    return terms_.rbegin()->first;
  }

  /// True iff the element lies in Q[t]; zero counts as regular.
  [[nodiscard]] bool is_regular() const { return is_zero() || valuation() >= 0; }

  [[nodiscard]] bool is_member(RingMode mode) const { return mode == RingMode::Laurent || is_regular(); }

  [[nodiscard]] bool is_unit(RingMode mode) const {
    if (!is_monomial()) return false;
    return mode == RingMode::Laurent || terms_.begin()->first == 0;
  }

  /// Inverse of a unit of Q[t, t^-1].
  [[nodiscard]] LaurentPoly unit_inverse() const {
    if (!is_monomial()) throw NonUnitError("'" + to_string() + "' is not a unit of Q[t,t^-1]");
    const auto& [e, c] = *terms_.begin();
    return monomial(c.inverse(), detail::checked_neg(e));
  }

  /// Value at t = alpha. Raises PoleError for alpha = 0 when a negative power is present.
  [[nodiscard]] Rational eval_at(const Rational& alpha) const {
    if (is_zero()) return Rational(0);
    if (alpha.is_zero()) {
      if (valuation() < 0) throw PoleError("pole at t = 0 in '" + to_string() + "'");
      return constant_term();
    }
    Rational acc(0);
    for (const auto& [e, c] : terms_) acc += c * alpha.pow(e);
    return acc;
  }

  LaurentPoly& operator+=(const LaurentPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  LaurentPoly& operator-=(const LaurentPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }
  LaurentPoly& operator*=(const LaurentPoly& o) {
    *this = *this * o;
    return *this;
  }

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator-(const LaurentPoly& a) {
    LaurentPoly r;
    for (const auto& [e, c] : a.terms_) r.terms_.emplace_hint(r.terms_.end(), e, -c);
    return r;
  }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly r;
    if (a.is_zero() || b.is_zero()) return r;
    if (b.is_monomial()) {
      const auto& [eb, cb] = *b.terms_.begin();
      for (const auto& [ea, ca] : a.terms_) r.terms_.emplace_hint(r.terms_.end(), detail::checked_add(ea, eb), ca * cb);
      return r;
    }
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) r.add_term(detail::checked_add(ea, eb), ca * cb);
    return r;
  }
  friend LaurentPoly operator*(const LaurentPoly& a, const Rational& s) {
    LaurentPoly r;
    if (s.is_zero()) return r;
    for (const auto& [e, c] : a.terms_) r.terms_.emplace_hint(r.terms_.end(), e, c * s);
    return r;
  }

  /// Exact quotient a / b in Q[t, t^-1], or nullopt if b does not divide a there.
  friend std::optional<LaurentPoly> exact_quotient(const LaurentPoly& a, const LaurentPoly& b) {
    if (b.is_zero()) throw DivisionByZero("Laurent division by zero");
    if (a.is_zero()) return LaurentPoly();
    if (b.is_monomial()) return a * b.unit_inverse();
    // Shift both to polynomials with nonzero constant term, then long division.
    const Exponent va = a.valuation(), vb = b.valuation();
    std::map<Exponent, Rational> rem;
    for (const auto& [e, c] : a.terms_) rem.emplace(e - va, c);
    std::map<Exponent, Rational> div;
    for (const auto& [e, c] : b.terms_) div.emplace(e - vb, c);
    const Exponent db = div.rbegin()->first;
    const Rational lead = div.rbegin()->second;
    LaurentPoly q;
    while (!rem.empty() && rem.rbegin()->first >= db) {
      const Exponent shift = rem.rbegin()->first - db;
      const Rational factor = rem.rbegin()->second / lead;
      q.add_term(shift, factor);
      for (const auto& [e, c] : div) {
        auto& slot = rem[e + shift];
        slot -= c * factor;
        if (slot.is_zero()) rem.erase(e + shift);
      }
    }
    if (!rem.empty()) return std::nullopt;
    return q * t(detail::checked_add(va, detail::checked_neg(vb)));
  }

  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) { return !(a == b); }

  /// Renders terms in increasing exponent order, e.g. `-2/3*t^-2 + 1 + 5*t^3`.
  [[nodiscard]] std::string to_string() const {
    if (is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [e, c] : terms_) {
      Rational mag = c.sign() < 0 ? -c : c;
      if (first) {
        if (c.sign() < 0) out += "-";
      } else {
        out += c.sign() < 0 ? " - " : " + ";
      }
      first = false;
      if (e == 0) {
        out += mag.to_string();
        continue;
      }
      if (!mag.is_one()) out += mag.to_string() + "*";
      out += "t";
      if (e != 1) out += "^" + std::to_string(e);
    }
    return out;
  }

  friend std::ostream& operator<<(std::ostream& os, const LaurentPoly& a) { return os << a.to_string(); }

 private:
  void add_term(Exponent e, const Rational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  TermMap terms_;
};

}  // namespace tamedeg

#endif  // TAMEDEG_LAURENT_HPP

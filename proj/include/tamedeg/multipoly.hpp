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

#ifndef TAMEDEG_MULTIPOLY_HPP
#define TAMEDEG_MULTIPOLY_HPP

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "tamedeg/errors.hpp"
#include "tamedeg/laurent.hpp"
#include "tamedeg/rational.hpp"

namespace tamedeg {

/// Largest number of x-variables a polynomial may carry.
inline constexpr std::size_t kMaxArity = 8;

/// Exponent vector (a_1, ..., a_n) of the monomial x_1^a_1 ... x_n^a_n.
class Exponent {
 public:
  using Power = std::uint32_t;

  explicit Exponent(std::size_t arity) : arity_(check_arity(arity)) {}
  Exponent(std::size_t arity, std::initializer_list<Power> powers) : arity_(check_arity(arity)) {
    if (powers.size() != arity) throw ArityMismatch("exponent length differs from arity");
    std::size_t i = 0;
    for (Power p : powers) set(i++, p);
  }

  [[nodiscard]] std::size_t arity() const { return arity_; }
  /// 0-based access.
  [[nodiscard]] Power operator[](std::size_t i) const { return powers_[i]; }
  void set(std::size_t i, Power p) {
    total_ = total_ - powers_[i] + p;
    powers_[i] = p;
  }
  [[nodiscard]] std::uint64_t total_degree() const { return total_; }
  [[nodiscard]] bool is_constant() const { return total_ == 0; }

  [[nodiscard]] bool divides(const Exponent& o) const {
    for (std::size_t i = 0; i < arity_; ++i)
      if (powers_[i] > o.powers_[i]) return false;
    return true;
  }

  friend Exponent operator+(Exponent a, const Exponent& b) {
    for (std::size_t i = 0; i < a.arity_; ++i) {
      Power r;
      if (__builtin_add_overflow(a.powers_[i], b.powers_[i], &r)) throw OverflowError("x-exponent overflow");
      a.set(i, r);
    }
    return a;
  }
  /// Requires b.divides(a).
  friend Exponent operator-(Exponent a, const Exponent& b) {
    for (std::size_t i = 0; i < a.arity_; ++i) a.set(i, a.powers_[i] - b.powers_[i]);
    return a;
  }

  friend bool operator==(const Exponent& a, const Exponent& b) {
    return a.arity_ == b.arity_ && a.powers_ == b.powers_;
  }

  /// Renders `x1^2*x3`; empty for the constant monomial.
  [[nodiscard]] std::string to_string() const {
    std::string out;
    for (std::size_t i = 0; i < arity_; ++i) {
      if (powers_[i] == 0) continue;
      if (!out.empty()) out += "*";
      out += "x" + std::to_string(i + 1);
      if (powers_[i] != 1) out += "^" + std::to_string(powers_[i]);
    }
    return out;
  }

 private:
  static std::size_t check_arity(std::size_t n) {
    if (n == 0 || n > kMaxArity)
      throw ArityMismatch("arity must be in 1.." + std::to_string(kMaxArity) + ", got " + std::to_string(n));
    return n;
  }

  std::size_t arity_;
  std::uint64_t total_ = 0;
  std::array<Power, kMaxArity> powers_{};
};

/// Graded lexicographic order with x1 > x2 > ... > xn; sorts greatest first.
struct GrlexGreater {
  bool operator()(const Exponent& a, const Exponent& b) const {
    if (a.total_degree() != b.total_degree()) return a.total_degree() > b.total_degree();
    for (std::size_t i = 0; i < a.arity(); ++i)
      if (a[i] != b[i]) return a[i] > b[i];
    return false;
  }
};

/// Sparse polynomial in x_1..x_n with Laurent-polynomial coefficients,
/// i.e. an element of Q[t,t^-1][x_1,...,x_n].
///
/// Variables are addressed 1-based (x1 is index 1) throughout the public
/// interface. Terms are stored in graded-lex descending order and never
/// carry a zero coefficient.
class MultiPoly {
 public:
  using TermMap = std::map<Exponent, LaurentPoly, GrlexGreater>;

  explicit MultiPoly(std::size_t arity) : arity_(Exponent(arity).arity()) {}

  static MultiPoly constant(std::size_t arity, const LaurentPoly& c) {
    MultiPoly r(arity);
    r.add_term(Exponent(arity), c);
    return r;
  }
  static MultiPoly variable(std::size_t arity, std::size_t i) {
    MultiPoly r(arity);
    r.check_index(i);
    Exponent e(arity);
    e.set(i - 1, 1);
    r.add_term(e, LaurentPoly(1));
    return r;
  }
  static MultiPoly monomial(const LaurentPoly& c, const Exponent& e) {
    MultiPoly r(e.arity());
    r.add_term(e, c);
    return r;
  }

  [[nodiscard]] std::size_t arity() const { return arity_; }
  [[nodiscard]] bool is_zero() const { return terms_.empty(); }
  [[nodiscard]] std::size_t size() const { return terms_.size(); }
  [[nodiscard]] const TermMap& terms() const { return terms_; }

  [[nodiscard]] LaurentPoly coefficient(const Exponent& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? LaurentPoly() : it->second;
  }

  /// Largest term under graded-lex order.
  [[nodiscard]] const std::pair<const Exponent, LaurentPoly>& leading_term() const {
    if (is_zero()) throw UndefinedForZero("leading term of the zero polynomial");
    return *terms_.begin();
  }

  [[nodiscard]] std::uint64_t total_degree() const {
    if (is_zero()) throw UndefinedForZero("total degree of the zero polynomial");
    return terms_.begin()->first.total_degree();
  }

  /// Maximal exponent of x_i over all terms.
  [[nodiscard]] std::uint32_t degree_in(std::size_t i) const {
    check_index(i);
    if (is_zero()) throw UndefinedForZero("degree of the zero polynomial");
    std::uint32_t d = 0;
    for (const auto& [e, c] : terms_) d = std::max(d, e[i - 1]);
    return d;
  }

  /// True iff some term has positive degree in x_i (false for zero).
  [[nodiscard]] bool involves(std::size_t i) const {
    check_index(i);
    return std::any_of(terms_.begin(), terms_.end(), [i](const auto& kv) { return kv.first[i - 1] > 0; });
  }

  /// Constant in the x-variables (coefficient may still depend on t).
  [[nodiscard]] bool is_x_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_constant()); }

  /// All coefficients lie in Q[t].
  [[nodiscard]] bool is_regular() const {
    return std::all_of(terms_.begin(), terms_.end(), [](const auto& kv) { return kv.second.is_regular(); });
  }
  [[nodiscard]] bool is_member(RingMode mode) const { return mode == RingMode::Laurent || is_regular(); }
  /// Every coefficient is a rational constant (no t).
  [[nodiscard]] bool is_t_free() const {
    return std::all_of(terms_.begin(), terms_.end(), [](const auto& kv) { return kv.second.is_constant(); });
  }

  MultiPoly& operator+=(const MultiPoly& o) {
    check_arity(o);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  MultiPoly& operator-=(const MultiPoly& o) {
    check_arity(o);
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }
  MultiPoly& operator*=(const MultiPoly& o) {
    *this = *this * o;
    return *this;
  }

  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator-(const MultiPoly& a) {
    MultiPoly r(a.arity_);
    for (const auto& [e, c] : a.terms_) r.terms_.emplace_hint(r.terms_.end(), e, -c);
    return r;
  }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    a.check_arity(b);
    MultiPoly r(a.arity_);
    if (a.is_zero() || b.is_zero()) return r;
    const MultiPoly& outer = a.size() <= b.size() ? a : b;
    const MultiPoly& inner = a.size() <= b.size() ? b : a;
    for (const auto& [ea, ca] : outer.terms_)
      for (const auto& [eb, cb] : inner.terms_) r.add_term(ea + eb, ca * cb);
    return r;
  }
  friend MultiPoly operator*(const MultiPoly& a, const LaurentPoly& s) {
    MultiPoly r(a.arity_);
    if (s.is_zero()) return r;
    for (const auto& [e, c] : a.terms_) r.add_term(e, c * s);
    return r;
  }
  friend MultiPoly operator*(const MultiPoly& a, const Rational& s) { return a * LaurentPoly(s); }

  [[nodiscard]] MultiPoly pow(unsigned k) const {
    MultiPoly acc = constant(arity_, LaurentPoly(1));
    MultiPoly base = *this;
    while (k > 0) {
      if (k & 1u) acc *= base;
      k >>= 1u;
      if (k > 0) base *= base;
    }
    return acc;
  }

  /// Formal partial derivative with respect to x_i.
  [[nodiscard]] MultiPoly partial_derivative(std::size_t i) const {
    check_index(i);
    MultiPoly r(arity_);
    for (const auto& [e, c] : terms_) {
      const auto k = e[i - 1];
      if (k == 0) continue;
      Exponent d = e;
      d.set(i - 1, k - 1);
      r.add_term(d, c * Rational(static_cast<long>(k)));
    }
    return r;
  }

  /// Image under the coefficient-fixing homomorphism x_i -> images[i-1].
  ///
  /// Evaluated Horner-style one variable at a time, from x_n down to x_1.
  [[nodiscard]] MultiPoly substitute(std::span<const MultiPoly> images) const {
    if (images.size() != arity_)
      throw ArityMismatch("substitute: " + std::to_string(images.size()) + " images for arity " + std::to_string(arity_));
    for (const auto& img : images)
      if (img.arity() != arity_) throw ArityMismatch("substitute: image arity differs");
    std::vector<std::vector<MultiPoly>> power_cache(arity_);
    return horner(*this, images, arity_, power_cache);
  }

  /// x_i -> 0.
  [[nodiscard]] MultiPoly set_variable_zero(std::size_t i) const {
    check_index(i);
    MultiPoly r(arity_);
    for (const auto& [e, c] : terms_)
      if (e[i - 1] == 0) r.terms_.emplace_hint(r.terms_.end(), e, c);
    return r;
  }

  /// Quotient q with a = d*q in Q[t,t^-1][x], or nullopt.
  ///
  /// Leading-term elimination under graded-lex order. Because a single
  /// divisor generates a principal ideal, the first leading term of the
  /// running remainder that is not divisible by lt(d) proves d does not
  /// divide a. When coefficients are t-free this is divisibility in Q[x].
  [[nodiscard]] std::optional<MultiPoly> exact_divide(const MultiPoly& d) const {
    check_arity(d);
    if (d.is_zero()) throw DivisionByZero("exact_divide by the zero polynomial");
    MultiPoly rem = *this;
    MultiPoly q(arity_);
    const auto& [lead_e, lead_c] = d.leading_term();
    while (!rem.is_zero()) {
      const auto& [re, rc] = rem.leading_term();
      if (!lead_e.divides(re)) return std::nullopt;
      auto coeff = exact_quotient(rc, lead_c);
      if (!coeff) return std::nullopt;
      MultiPoly step = monomial(*coeff, re - lead_e);
      rem -= d * step;
      q += step;
    }
    return q;
  }

  /// Every coefficient evaluated at t = alpha.
  [[nodiscard]] MultiPoly specialize_t(const Rational& alpha) const {
    MultiPoly r(arity_);
    for (const auto& [e, c] : terms_) {
      if (alpha.is_zero() && !c.is_regular())
        throw PoleError("pole at t = 0 in coefficient '" + c.to_string() + "' of monomial " +
                        (e.is_constant() ? std::string("1") : e.to_string()));
      r.add_term(e, LaurentPoly(c.eval_at(alpha)));
    }
    return r;
  }

  /// Same polynomial viewed in more variables (x_{n+1},... absent).
  [[nodiscard]] MultiPoly extend_arity(std::size_t new_arity) const {
    if (new_arity < arity_) throw ArityMismatch("extend_arity cannot shrink");
    MultiPoly r(new_arity);
    for (const auto& [e, c] : terms_) {
      Exponent f(new_arity);
      for (std::size_t i = 0; i < arity_; ++i) f.set(i, e[i]);
      r.add_term(f, c);
    }
    return r;
  }

  friend bool operator==(const MultiPoly& a, const MultiPoly& b) { return a.arity_ == b.arity_ && a.terms_ == b.terms_; }
  friend bool operator!=(const MultiPoly& a, const MultiPoly& b) { return !(a == b); }

  /// Canonical text: graded-lex descending, e.g. `-1/2*t^-1*x1^2 + x2`.
  [[nodiscard]] std::string to_string() const {
    if (is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [e, c] : terms_) {
      std::string term = render_term(e, c);
      if (first) {
        out = term;
        first = false;
      } else if (term[0] == '-') {
        out += " - " + term.substr(1);
      } else {
        out += " + " + term;
      }
    }
    return out;
  }

  friend std::ostream& operator<<(std::ostream& os, const MultiPoly& a) { return os << a.to_string(); }

  /// Adds c*x^e into the polynomial.
  void add_term(const Exponent& e, const LaurentPoly& c) {
    if (e.arity() != arity_) throw ArityMismatch("term arity differs from polynomial arity");
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

 private:
  void check_arity(const MultiPoly& o) const {
    if (o.arity_ != arity_)
      throw ArityMismatch("arity mismatch: " + std::to_string(arity_) + " vs " + std::to_string(o.arity_));
  }
  void check_index(std::size_t i) const {
    if (i < 1 || i > arity_)
      throw IndexOutOfRange("variable index " + std::to_string(i) + " outside 1.." + std::to_string(arity_));
  }

  static std::string render_term(const Exponent& e, const LaurentPoly& c) {
    const std::string mono = e.to_string();
    if (c.size() > 1) return "(" + c.to_string() + ")" + (mono.empty() ? "" : "*" + mono);
    if (mono.empty()) return c.to_string();
    const auto& [te, tc] = *c.terms().begin();
    std::string sign = tc.sign() < 0 ? "-" : "";
    LaurentPoly mag = tc.sign() < 0 ? -c : c;
    if (mag == LaurentPoly(1)) return sign + mono;
    return sign + mag.to_string() + "*" + mono;
  }

  static const MultiPoly& cached_power(std::span<const MultiPoly> images, std::size_t var,
                                       std::uint32_t k, std::vector<std::vector<MultiPoly>>& cache) {
    auto& powers = cache[var - 1];
    if (powers.empty()) powers.push_back(constant(images[var - 1].arity(), LaurentPoly(1)));
    while (powers.size() <= k) powers.push_back(powers.back() * images[var - 1]);
    return powers[k];
  }

  // `a` only involves x_1..x_var.
  static MultiPoly horner(const MultiPoly& a, std::span<const MultiPoly> images, std::size_t var,
                          std::vector<std::vector<MultiPoly>>& cache) {
    const std::size_t out_arity = images[0].arity();
    if (a.is_zero()) return MultiPoly(out_arity);
    if (var == 0) return constant(out_arity, a.terms_.begin()->second);
    std::map<std::uint32_t, MultiPoly, std::greater<>> groups;
    for (const auto& [e, c] : a.terms_) {
      Exponent rest = e;
      rest.set(var - 1, 0);
      groups.try_emplace(e[var - 1], a.arity_).first->second.add_term(rest, c);
    }
    MultiPoly acc(out_arity);
    std::optional<std::uint32_t> prev;
    for (const auto& [k, part] : groups) {
      if (prev) acc = acc * cached_power(images, var, *prev - k, cache);
      acc += horner(part, images, var - 1, cache);
      prev = k;
    }
    if (*prev > 0) acc = acc * cached_power(images, var, *prev, cache);
    return acc;
  }

  std::size_t arity_;
  TermMap terms_;
};

}  // namespace tamedeg

#endif  // TAMEDEG_MULTIPOLY_HPP

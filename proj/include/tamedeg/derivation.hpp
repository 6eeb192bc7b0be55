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

#ifndef TAMEDEG_DERIVATION_HPP
#define TAMEDEG_DERIVATION_HPP

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "tamedeg/automorphism.hpp"
#include "tamedeg/errors.hpp"
#include "tamedeg/laurent.hpp"
#include "tamedeg/multipoly.hpp"
#include "tamedeg/rational.hpp"

namespace tamedeg {

/// Iteration cap for delta^m(q); triangular derivations always stop far earlier.
inline constexpr std::size_t kNilpotencyCap = 1u << 16;

/// Derivation delta of Q[t,t^-1][x] fixing t with delta(x_i) = f_i and
/// f_i a polynomial in x_1..x_{i-1} only. Such a derivation is locally
/// nilpotent, so exp(h*delta) is a finite sum for every kernel element h.
class TriangularDerivation {
 public:
  explicit TriangularDerivation(std::vector<MultiPoly> images) : images_(std::move(images)) {
    const std::size_t n = images_.size();
    if (n == 0) throw ArityMismatch("derivation needs at least one image");
    for (std::size_t i = 1; i <= n; ++i) {
      const MultiPoly& f = images_[i - 1];
      if (f.arity() != n) throw ArityMismatch("derivation image arity differs from derivation arity");
      for (std::size_t j = i; j <= n; ++j)
        if (f.involves(j))
          throw NotTriangular("delta(x" + std::to_string(i) + ") = " + f.to_string() + " involves x" + std::to_string(j));
    }
  }

  [[nodiscard]] std::size_t arity() const { return images_.size(); }
  [[nodiscard]] const std::vector<MultiPoly>& images() const { return images_; }
  /// f_i = delta(x_i), 1-based.
  [[nodiscard]] const MultiPoly& image(std::size_t i) const { return images_.at(i - 1); }

  /// delta(q) = sum_i f_i * d q / d x_i.
  [[nodiscard]] MultiPoly apply(const MultiPoly& q) const {
    check(q);
    MultiPoly r(arity());
    for (std::size_t i = 1; i <= arity(); ++i) {
      if (images_[i - 1].is_zero() || !q.involves(i)) continue;
      r += images_[i - 1] * q.partial_derivative(i);
    }
    return r;
  }

  /// q, delta(q), delta^2(q), ... up to the last nonzero iterate.
  [[nodiscard]] std::vector<MultiPoly> iterates(const MultiPoly& q) const {
    check(q);
    std::vector<MultiPoly> out;
    MultiPoly cur = q;
    while (!cur.is_zero()) {
      if (out.size() >= kNilpotencyCap) throw InternalError("delta^m(q) did not vanish within the iteration cap");
      MultiPoly next = apply(cur);
      out.push_back(std::move(cur));
      cur = std::move(next);
    }
    return out;
  }

  /// Least m >= 0 with delta^m(q) = 0.
  [[nodiscard]] std::size_t nilpotency_exponent(const MultiPoly& q) const { return iterates(q).size(); }

  /// exp(h*delta)(q) = sum_l h^l delta^l(q) / l!. Requires delta(h) = 0.
  [[nodiscard]] MultiPoly exp_apply(const MultiPoly& h, const MultiPoly& q) const {
    require_kernel(h);
    return exp_apply_unchecked(h, q);
  }

  /// The automorphism exp(h*delta); its inverse is exp(-h*delta).
  [[nodiscard]] PolyEndo exp_auto(const MultiPoly& h) const {
    require_kernel(h);
    std::vector<MultiPoly> imgs;
    for (std::size_t i = 1; i <= arity(); ++i) imgs.push_back(exp_apply_unchecked(h, MultiPoly::variable(arity(), i)));
    return PolyEndo(std::move(imgs));
  }

  /// f_1 when it is a unit of Q[t,t^-1], else NonUnitError.
  [[nodiscard]] LaurentPoly slice_unit() const {
    const MultiPoly& f1 = images_[0];
    if (f1.is_zero() || !f1.is_x_constant() || !f1.terms().begin()->second.is_monomial())
      throw NonUnitError("delta(x1) = " + f1.to_string() + " is not a unit of Q[t,t^-1]");
    return f1.terms().begin()->second;
  }

  /// sigma(q) = sum_l delta^l(q)/l! * (-x1/f1)^l: the retraction onto the
  /// kernel along the slice x1/f1, with sigma(x1) = 0.
  [[nodiscard]] MultiPoly slice_sigma(const MultiPoly& q) const {
    const LaurentPoly f1_inv = slice_unit().unit_inverse();
    const MultiPoly step = MultiPoly::variable(arity(), 1) * (-f1_inv);
    MultiPoly acc(arity());
    MultiPoly power = MultiPoly::constant(arity(), LaurentPoly(1));
    const auto its = iterates(q);
    for (std::size_t l = 0; l < its.size(); ++l) {
      if (l > 0) power *= step;
      acc += its[l] * power * factorial(static_cast<unsigned>(l)).inverse();
    }
    return acc;
  }

  /// (g_2, ..., g_n) with g_i = sigma(x_i); these generate the kernel over
  /// Q[t,t^-1] and (x_1, g_2, ..., g_n) is triangular.
  [[nodiscard]] std::vector<MultiPoly> kernel_generators() const {
    (void)slice_unit();
    std::vector<MultiPoly> gens;
    for (std::size_t i = 2; i <= arity(); ++i) gens.push_back(slice_sigma(MultiPoly::variable(arity(), i)));
    return gens;
  }

  /// The same derivation on m >= n variables, killing x_{n+1}..x_m.
  [[nodiscard]] TriangularDerivation extend_arity(std::size_t m) const {
    std::vector<MultiPoly> imgs;
    for (const auto& f : images_) imgs.push_back(f.extend_arity(m));
    for (std::size_t i = arity() + 1; i <= m; ++i) imgs.emplace_back(m);
    return TriangularDerivation(std::move(imgs));
  }

  [[nodiscard]] TriangularDerivation specialize(const Rational& alpha) const {
    std::vector<MultiPoly> imgs;
    for (const auto& f : images_) imgs.push_back(f.specialize_t(alpha));
    return TriangularDerivation(std::move(imgs));
  }

  friend bool operator==(const TriangularDerivation& a, const TriangularDerivation& b) { return a.images_ == b.images_; }

 private:
  void check(const MultiPoly& q) const {
    if (q.arity() != arity())
      throw ArityMismatch("derivation arity " + std::to_string(arity()) + " vs polynomial arity " + std::to_string(q.arity()));
  }

  void require_kernel(const MultiPoly& h) const {
    if (!apply(h).is_zero()) throw KernelViolation("delta(h) != 0 for h = " + h.to_string());
  }

  [[nodiscard]] MultiPoly exp_apply_unchecked(const MultiPoly& h, const MultiPoly& q) const {
    const auto its = iterates(q);
    MultiPoly acc(arity());
    MultiPoly h_power = MultiPoly::constant(arity(), LaurentPoly(1));
    for (std::size_t l = 0; l < its.size(); ++l) {
      if (l > 0) h_power *= h;
      if (h_power.is_zero()) break;
      acc += h_power * its[l] * factorial(static_cast<unsigned>(l)).inverse();
    }
    return acc;
  }

  std::vector<MultiPoly> images_;
};

}  // namespace tamedeg

#endif  // TAMEDEG_DERIVATION_HPP

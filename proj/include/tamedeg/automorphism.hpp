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

#ifndef TAMEDEG_AUTOMORPHISM_HPP
#define TAMEDEG_AUTOMORPHISM_HPP

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tamedeg/errors.hpp"
#include "tamedeg/laurent.hpp"
#include "tamedeg/multipoly.hpp"
#include "tamedeg/rational.hpp"

namespace tamedeg {

/// Endomorphism of Q[t,t^-1][x_1..x_n] fixing coefficients, recorded by
/// its images (phi(x_1), ..., phi(x_n)).
class PolyEndo {
 public:
  explicit PolyEndo(std::vector<MultiPoly> images) : images_(std::move(images)) {
    if (images_.empty()) throw ArityMismatch("endomorphism needs at least one image");
    for (const auto& img : images_)
      if (img.arity() != images_.size())
        throw ArityMismatch("image arity " + std::to_string(img.arity()) + " differs from endomorphism arity " +
                            std::to_string(images_.size()));
  }

  static PolyEndo identity(std::size_t arity) {
    std::vector<MultiPoly> imgs;
    imgs.reserve(arity);
    for (std::size_t i = 1; i <= arity; ++i) imgs.push_back(MultiPoly::variable(arity, i));
    return PolyEndo(std::move(imgs));
  }

  [[nodiscard]] std::size_t arity() const { return images_.size(); }
  [[nodiscard]] const std::vector<MultiPoly>& images() const { return images_; }
  /// 1-based.
  [[nodiscard]] const MultiPoly& image(std::size_t i) const { return images_.at(i - 1); }

  /// phi(q): substitute x_i -> phi(x_i) into q.
  [[nodiscard]] MultiPoly operator()(const MultiPoly& q) const { return q.substitute(images_); }

  [[nodiscard]] bool is_identity() const { return *this == identity(arity()); }

  /// Same map in arity m >= n, fixing x_{n+1}..x_m.
  [[nodiscard]] PolyEndo extend_arity(std::size_t m) const {
    std::vector<MultiPoly> imgs;
    for (const auto& img : images_) imgs.push_back(img.extend_arity(m));
    for (std::size_t i = arity() + 1; i <= m; ++i) imgs.push_back(MultiPoly::variable(m, i));
    return PolyEndo(std::move(imgs));
  }

  friend bool operator==(const PolyEndo& a, const PolyEndo& b) { return a.images_ == b.images_; }
  friend bool operator!=(const PolyEndo& a, const PolyEndo& b) { return !(a == b); }

 private:
  std::vector<MultiPoly> images_;
};

/// (phi o psi)(x_i) = phi(psi(x_i)).
///
/// This is composition of algebra maps, so conjugation reads
/// compose(tau, compose(eps, tau_inv)) for tau o eps o tau^-1.
inline PolyEndo compose(const PolyEndo& phi, const PolyEndo& psi) {
  if (phi.arity() != psi.arity())
    throw ArityMismatch("compose: arity " + std::to_string(phi.arity()) + " vs " + std::to_string(psi.arity()));
  std::vector<MultiPoly> imgs;
  imgs.reserve(psi.arity());
  for (const auto& img : psi.images()) imgs.push_back(phi(img));
  return PolyEndo(std::move(imgs));
}

/// Left-to-right word w_1 o w_2 o ... o w_k.
inline PolyEndo compose_word(const std::vector<PolyEndo>& word) {
  if (word.empty()) throw ArityMismatch("empty factor word");
  PolyEndo acc = word.back();
  for (auto it = word.rbegin() + 1; it != word.rend(); ++it) acc = compose(*it, acc);
  return acc;
}

inline PolyEndo specialize(const PolyEndo& phi, const Rational& alpha) {
  std::vector<MultiPoly> imgs;
  for (std::size_t i = 0; i < phi.arity(); ++i) {
    try {
      imgs.push_back(phi.images()[i].specialize_t(alpha));
    } catch (const PoleError& e) {
      throw PoleError("image of x" + std::to_string(i + 1) + ": " + e.what());
    }
  }
  return PolyEndo(std::move(imgs));
}

inline bool verify_inverse_pair(const PolyEndo& phi, const PolyEndo& psi) {
  if (phi.arity() != psi.arity()) throw ArityMismatch("verify_inverse_pair: arity mismatch");
  const PolyEndo id = PolyEndo::identity(phi.arity());
  return compose(phi, psi) == id && compose(psi, phi) == id;
}

namespace detail {

inline bool images_in_ring(const PolyEndo& phi, RingMode mode) {
  return std::all_of(phi.images().begin(), phi.images().end(),
                     [mode](const MultiPoly& p) { return p.is_member(mode); });
}

// Splits img = u * x_var + rest with rest free of x_var. Fails unless the
// only term involving x_var is exactly u * x_var.
inline std::optional<std::pair<LaurentPoly, MultiPoly>> split_linear(const MultiPoly& img, std::size_t var) {
  std::optional<LaurentPoly> unit;
  MultiPoly rest(img.arity());
  Exponent xv(img.arity());
  xv.set(var - 1, 1);
  for (const auto& [e, c] : img.terms()) {
    if (e[var - 1] == 0) {
      rest.add_term(e, c);
    } else if (e == xv) {
      unit = c;
    } else {
      return std::nullopt;
    }
  }
  if (!unit) return std::nullopt;
  return std::make_pair(*unit, rest);
}

inline std::vector<std::size_t> identity_order(std::size_t n) {
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 1);
  return order;
}

inline LaurentPoly determinant(std::vector<std::vector<LaurentPoly>> m) {
  const std::size_t n = m.size();
  if (n == 1) return m[0][0];
  LaurentPoly det;
  for (std::size_t col = 0; col < n; ++col) {
    if (m[0][col].is_zero()) continue;
    std::vector<std::vector<LaurentPoly>> minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<LaurentPoly> row;
      for (std::size_t c = 0; c < n; ++c)
        if (c != col) row.push_back(m[r][c]);
      minor.push_back(std::move(row));
    }
    LaurentPoly term = m[0][col] * determinant(std::move(minor));
    if (col % 2 == 0) det += term;
    else det -= term;
  }
  return det;
}

}  // namespace detail

/// Triangular with respect to the variable order `order` (1-based indices,
/// earliest first): the image of order[k] is unit * x_order[k] plus a
/// polynomial in x_order[0..k-1], and all coefficients lie in the ring.
inline bool is_triangular_in_order(const PolyEndo& phi, const std::vector<std::size_t>& order, RingMode mode) {
  const std::size_t n = phi.arity();
  if (order.size() != n) throw ArityMismatch("variable order length differs from arity");
  if (!detail::images_in_ring(phi, mode)) return false;
  std::vector<bool> earlier(n + 1, false);
  for (std::size_t var : order) {
    if (var < 1 || var > n || earlier[var]) throw IndexOutOfRange("order is not a permutation");
    auto split = detail::split_linear(phi.image(var), var);
    if (!split || !split->first.is_unit(mode)) return false;
    for (std::size_t j = 1; j <= n; ++j)
      if (j != var && !earlier[j] && split->second.involves(j)) return false;
    earlier[var] = true;
  }
  return true;
}

/// phi(x_i) in R^* x_i + R[x_1..x_{i-1}] for every i, R chosen by `mode`.
inline bool is_triangular(const PolyEndo& phi, RingMode mode) {
  return is_triangular_in_order(phi, detail::identity_order(phi.arity()), mode);
}

/// Some variable order in which phi is triangular (triangular up to a
/// permutation of variables, which is an affine change of coordinates).
inline std::optional<std::vector<std::size_t>> find_triangular_order(const PolyEndo& phi, RingMode mode) {
  auto order = detail::identity_order(phi.arity());
  do {
    if (is_triangular_in_order(phi, order, mode)) return order;
  } while (std::next_permutation(order.begin(), order.end()));
  return std::nullopt;
}

/// Linear part M (M[i][j] = coefficient of x_j in phi(x_i)) and translation b,
/// or nullopt if some image has x-degree other than one.
inline std::optional<std::pair<std::vector<std::vector<LaurentPoly>>, std::vector<LaurentPoly>>> affine_parts(
    const PolyEndo& phi) {
  const std::size_t n = phi.arity();
  std::vector<std::vector<LaurentPoly>> m(n, std::vector<LaurentPoly>(n));
  std::vector<LaurentPoly> b(n);
  for (std::size_t i = 0; i < n; ++i) {
    const MultiPoly& img = phi.images()[i];
    if (img.is_zero() || img.total_degree() != 1) return std::nullopt;
    for (const auto& [e, c] : img.terms()) {
      if (e.is_constant()) {
        b[i] = c;
        continue;
      }
      for (std::size_t j = 0; j < n; ++j)
        if (e[j] == 1) m[i][j] = c;
    }
  }
  return std::make_pair(std::move(m), std::move(b));
}

/// Images of total x-degree one, coefficients in the ring, and a linear
/// part whose determinant is a unit of the ring.
inline bool is_affine(const PolyEndo& phi, RingMode mode) {
  if (!detail::images_in_ring(phi, mode)) return false;
  auto parts = affine_parts(phi);
  if (!parts) return false;
  return detail::determinant(parts->first).is_unit(mode);
}

/// All images but one are their variable; the exceptional one is x_l + q
/// with q free of x_l and in R[x].
inline bool is_elementary(const PolyEndo& phi, RingMode mode) {
  if (!detail::images_in_ring(phi, mode)) return false;
  std::size_t moved = 0;
  for (std::size_t i = 1; i <= phi.arity(); ++i) {
    const MultiPoly xi = MultiPoly::variable(phi.arity(), i);
    if (phi.image(i) == xi) continue;
    if (++moved > 1) return false;
    if ((phi.image(i) - xi).involves(i)) return false;
  }
  return true;
}

/// Inverse of a map triangular in `order`, by back-substitution.
inline PolyEndo invert_triangular_in_order(const PolyEndo& tau, const std::vector<std::size_t>& order, RingMode mode) {
  const std::size_t n = tau.arity();
  if (order.size() != n) throw ArityMismatch("variable order length differs from arity");
  std::vector<MultiPoly> inv;
  for (std::size_t i = 1; i <= n; ++i) inv.push_back(MultiPoly::variable(n, i));
  std::vector<bool> earlier(n + 1, false);
  for (std::size_t var : order) {
    auto split = detail::split_linear(tau.image(var), var);
    if (!split) throw NotTriangular("image of x" + std::to_string(var) + " is not unit*x" + std::to_string(var) + " + lower");
    for (std::size_t j = 1; j <= n; ++j)
      if (j != var && !earlier[j] && split->second.involves(j))
        throw NotTriangular("image of x" + std::to_string(var) + " involves a later variable x" + std::to_string(j));
    if (!split->first.is_unit(mode))
      throw NonUnitError("coefficient '" + split->first.to_string() + "' of x" + std::to_string(var) + " is not a unit");
    // tau_inv(x_v) = u^-1 (x_v - rest(tau_inv(x_earlier)))
    MultiPoly rest_image = split->second.substitute(inv);
    inv[var - 1] = (MultiPoly::variable(n, var) - rest_image) * split->first.unit_inverse();
    earlier[var] = true;
  }
  return PolyEndo(std::move(inv));
}

inline PolyEndo invert_triangular(const PolyEndo& tau, RingMode mode = RingMode::Laurent) {
  return invert_triangular_in_order(tau, detail::identity_order(tau.arity()), mode);
}

/// Inverse of an affine map x -> M x + b, as x -> M^-1 (x - b).
inline PolyEndo invert_affine(const PolyEndo& phi, RingMode mode = RingMode::Laurent) {
  auto parts = affine_parts(phi);
  if (!parts) throw Error("invert_affine: not affine");
  const auto& [m, b] = *parts;
  const std::size_t n = phi.arity();
  const LaurentPoly det = detail::determinant(m);
  if (!det.is_unit(mode)) throw NonUnitError("affine determinant '" + det.to_string() + "' is not a unit");
  const LaurentPoly det_inv = det.unit_inverse();
  std::vector<MultiPoly> inv;
  for (std::size_t j = 0; j < n; ++j) {
    MultiPoly img(n);
    for (std::size_t k = 0; k < n; ++k) {
      // (M^-1)[j][k] = cofactor(k, j) / det
      std::vector<std::vector<LaurentPoly>> minor;
      for (std::size_t r = 0; r < n; ++r) {
        if (r == k) continue;
        std::vector<LaurentPoly> row;
        for (std::size_t c = 0; c < n; ++c)
          if (c != j) row.push_back(m[r][c]);
        minor.push_back(std::move(row));
      }
      LaurentPoly cof = n == 1 ? LaurentPoly(1) : detail::determinant(std::move(minor));
      if ((j + k) % 2 == 1) cof = -cof;
      const LaurentPoly entry = cof * det_inv;
      img += (MultiPoly::variable(n, k + 1) - MultiPoly::constant(n, b[k])) * entry;
    }
    inv.push_back(std::move(img));
  }
  return PolyEndo(std::move(inv));
}

/// Inverse of x_l -> x_l + q: x_l -> x_l - q.
inline PolyEndo invert_elementary(const PolyEndo& phi) {
  if (!is_elementary(phi, RingMode::Laurent)) throw Error("invert_elementary: not elementary");
  std::vector<MultiPoly> imgs;
  for (std::size_t i = 1; i <= phi.arity(); ++i) {
    const MultiPoly xi = MultiPoly::variable(phi.arity(), i);
    imgs.push_back(xi - (phi.image(i) - xi));
  }
  return PolyEndo(std::move(imgs));
}

}  // namespace tamedeg

#endif  // TAMEDEG_AUTOMORPHISM_HPP

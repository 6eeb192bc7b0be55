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

#ifndef TAMEDEG_TESTS_SUPPORT_HPP
#define TAMEDEG_TESTS_SUPPORT_HPP

// Random generators and brute-force oracles used only by the tests.

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "tamedeg/laurent.hpp"
#include "tamedeg/multipoly.hpp"
#include "tamedeg/rational.hpp"

namespace tamedeg::testing {

class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

  Rational rational(int max_num = 9, int max_den = 6) {
    return Rational(integer(-max_num, max_num), integer(1, max_den));
  }

  Rational nonzero_rational() {
    Rational r;
    while (r.is_zero()) r = rational();
    return r;
  }

  LaurentPoly laurent(int max_terms = 3, int min_exp = -3, int max_exp = 3) {
    LaurentPoly a;
    const int n = integer(0, max_terms);
    for (int i = 0; i < n; ++i) a += LaurentPoly::monomial(rational(), integer(min_exp, max_exp));
    return a;
  }

  LaurentPoly nonzero_laurent() {
    LaurentPoly a;
    while (a.is_zero()) a = laurent();
    return a;
  }

  /// Random polynomial of total degree <= max_deg.
  MultiPoly poly(std::size_t arity, int max_deg, int max_terms, bool t_free = false, int min_exp = -2, int max_exp = 2) {
    MultiPoly p(arity);
    const int n = integer(0, max_terms);
    for (int k = 0; k < n; ++k) {
      Exponent e(arity);
      int budget = integer(0, max_deg);
      for (std::size_t i = 0; i < arity && budget > 0; ++i) {
        const int take = integer(0, budget);
        e.set(i, static_cast<Exponent::Power>(take));
        budget -= take;
      }
      // shuffle which variable received the bulk of the degree
      if (arity > 1) {
        const std::size_t a = static_cast<std::size_t>(integer(0, static_cast<int>(arity) - 1));
        const std::size_t b = static_cast<std::size_t>(integer(0, static_cast<int>(arity) - 1));
        const auto pa = e[a], pb = e[b];
        e.set(a, pb);
        e.set(b, pa);
      }
      LaurentPoly c = t_free ? LaurentPoly(rational()) : laurent(2, min_exp, max_exp);
      p.add_term(e, c);
    }
    return p;
  }

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

/// All exponent vectors of the given arity with total degree <= max_deg.
inline std::vector<Exponent> monomials_up_to(std::size_t arity, unsigned max_deg) {
  std::vector<Exponent> out;
  Exponent e(arity);
  auto rec = [&](auto&& self, std::size_t i, unsigned left) -> void {
    if (i == arity) {
      out.push_back(e);
      return;
    }
    for (unsigned k = 0; k <= left; ++k) {
      e.set(i, k);
      self(self, i + 1, left - k);
    }
    e.set(i, 0);
  };
  rec(rec, 0, max_deg);
  return out;
}

/// Rank of a rational matrix by Gaussian elimination.
inline std::size_t rank(std::vector<std::vector<Rational>> m) {
  std::size_t r = 0;
  const std::size_t rows = m.size();
  const std::size_t cols = rows ? m[0].size() : 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && m[piv][c].is_zero()) ++piv;
    if (piv == rows) continue;
    std::swap(m[piv], m[r]);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m[i][c].is_zero()) continue;
      const Rational f = m[i][c] / m[r][c];
      for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    ++r;
  }
  return r;
}

/// Brute-force divisibility oracle over Q for t-free polynomials: does some
/// q of total degree <= deg(a) satisfy d*q = a? Decided by comparing the rank
/// of the coefficient matrix with that of the augmented system.
inline bool divisible_by_linear_solve(const MultiPoly& a, const MultiPoly& d) {
  const std::size_t n = a.arity();
  const unsigned da = a.is_zero() ? 0 : static_cast<unsigned>(a.total_degree());
  const unsigned dd = static_cast<unsigned>(d.total_degree());
  const auto unknowns = monomials_up_to(n, da);
  const auto rows_idx = monomials_up_to(n, da + dd);
  std::vector<std::vector<Rational>> mat(rows_idx.size(), std::vector<Rational>(unknowns.size() + 1));
  auto row_of = [&](const Exponent& e) {
    for (std::size_t r = 0; r < rows_idx.size(); ++r)
      if (rows_idx[r] == e) return r;
    return rows_idx.size();
  };
  for (std::size_t u = 0; u < unknowns.size(); ++u)
    for (const auto& [e, c] : d.terms()) mat[row_of(e + unknowns[u])][u] += c.constant_term();
  for (const auto& [e, c] : a.terms()) {
    const std::size_t r = row_of(e);
    if (r == rows_idx.size()) return false;
    mat[r][unknowns.size()] = c.constant_term();
  }
  std::vector<std::vector<Rational>> coeff_only = mat;
  for (auto& row : coeff_only) row.pop_back();
  return rank(coeff_only) == rank(mat);
}

}  // namespace tamedeg::testing

#endif  // TAMEDEG_TESTS_SUPPORT_HPP

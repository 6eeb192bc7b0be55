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

#ifndef TAMEDEG_TAMECERT_HPP
#define TAMEDEG_TAMECERT_HPP

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tamedeg/automorphism.hpp"
#include "tamedeg/derivation.hpp"
#include "tamedeg/errors.hpp"
#include "tamedeg/laurent.hpp"
#include "tamedeg/multipoly.hpp"
#include "tamedeg/rational.hpp"
#include "tamedeg/transcript.hpp"

namespace tamedeg {

// ---------------------------------------------------------------------------
// Wildness of the fiber over t = 0 (n = 3, f_1 vanishing at t = 0).
// ---------------------------------------------------------------------------

enum class Verdict { Wild, TameOrUndetermined };

inline const char* to_string(Verdict v) { return v == Verdict::Wild ? "wild" : "tame-or-undetermined"; }

/// Outcome of the three-condition criterion on a specialized exponential
/// automorphism exp(hbar * delta_bar) of Q[x1, x2, x3] with delta_bar(x1) = 0.
struct WildnessReport {
  MultiPoly f2bar;
  MultiPoly f3bar;
  MultiPoly hbar;
  bool f2bar_nonzero = false;
  bool hbar_outside_x1 = false;
  bool df3_not_in_ideal = false;
  Verdict verdict = Verdict::TameOrUndetermined;
};

/// Evaluates the criterion on already-specialized data.
///
/// The membership d(f3bar)/dx2 in f2bar*Q[x1,x2] is decided coefficientwise
/// in x2: f2bar lies in Q[x1], so each x2-coefficient must be divisible by it.
inline WildnessReport evaluate_wildness_criterion(const MultiPoly& f2bar, const MultiPoly& f3bar, const MultiPoly& hbar) {
  WildnessReport r{f2bar, f3bar, hbar};
  r.f2bar_nonzero = !f2bar.is_zero();
  r.hbar_outside_x1 = hbar.involves(2) || hbar.involves(3);
  const MultiPoly df3 = f3bar.partial_derivative(2);
  if (df3.is_zero()) {
    r.df3_not_in_ideal = false;
  } else if (f2bar.is_zero()) {
    r.df3_not_in_ideal = true;
  } else {
    std::map<std::uint32_t, MultiPoly> by_x2;
    for (const auto& [e, c] : df3.terms()) {
      Exponent rest = e;
      rest.set(1, 0);
      by_x2.try_emplace(e[1], df3.arity()).first->second.add_term(rest, c);
    }
    r.df3_not_in_ideal = false;
    for (const auto& [k, coeff] : by_x2)
      if (!coeff.exact_divide(f2bar)) r.df3_not_in_ideal = true;
  }
  r.verdict = (r.f2bar_nonzero && r.hbar_outside_x1 && r.df3_not_in_ideal) ? Verdict::Wild : Verdict::TameOrUndetermined;
  return r;
}

/// Specializes delta and h at t = 0 and applies the criterion.
inline WildnessReport check_wild_at_zero(const TriangularDerivation& delta, const MultiPoly& h) {
  if (delta.arity() != 3) throw HypothesisViolation("wildness test needs arity 3, got " + std::to_string(delta.arity()));
  if (h.arity() != 3) throw HypothesisViolation("h must have arity 3");
  if (!delta.apply(h).is_zero()) throw HypothesisViolation("delta(h) != 0");
  const MultiPoly& f1 = delta.image(1);
  if (!f1.is_regular()) throw HypothesisViolation("f1 = " + f1.to_string() + " is not in Q[t]");
  if (!f1.specialize_t(Rational(0)).is_zero())
    throw HypothesisViolation("f1 = " + f1.to_string() + " does not vanish at t = 0");
  try {
    return evaluate_wildness_criterion(delta.image(2).specialize_t(Rational(0)), delta.image(3).specialize_t(Rational(0)),
                                       h.specialize_t(Rational(0)));
  } catch (const PoleError& e) {
    throw HypothesisViolation(std::string("not regular at t = 0: ") + e.what());
  }
}

// ---------------------------------------------------------------------------
// Conjugation phi = tau o eps o tau^-1 over Q[t, t^-1].
// ---------------------------------------------------------------------------

struct ConjugationCertificate {
  TriangularDerivation delta;
  MultiPoly h;
  LaurentPoly f1;
  PolyEndo tau;
  PolyEndo tau_inv;
  MultiPoly slice_potential;  // p, with tau(p) = h
  PolyEndo epsilon;           // (x1 + f1*p, x2, ..., xn)
  PolyEndo phi;               // exp(h*delta)
};

/// (x1 + f1*p, x2, ..., xn)
inline PolyEndo slice_elementary(const LaurentPoly& f1, const MultiPoly& p) {
  std::vector<MultiPoly> imgs = PolyEndo::identity(p.arity()).images();
  imgs[0] += p * f1;
  return PolyEndo(std::move(imgs));
}

/// (x1, g2, ..., gn)
inline PolyEndo kernel_coordinates(const MultiPoly& x1, const std::vector<MultiPoly>& gens) {
  std::vector<MultiPoly> imgs{x1};
  imgs.insert(imgs.end(), gens.begin(), gens.end());
  return PolyEndo(std::move(imgs));
}

/// Recomputes every identity of a conjugation certificate from its data.
inline Transcript verify_conjugation(const ConjugationCertificate& c) {
  Transcript tr;
  const std::size_t n = c.delta.arity();
  tr.check("f1 = delta(x1) is a unit of Q[t,t^-1]",
           [&] { return c.delta.slice_unit() == c.f1 && c.f1.is_unit(RingMode::Laurent); });
  tr.check("delta(h) = 0", [&] { return c.delta.apply(c.h).is_zero(); });
  tr.check("tau = (x1, sigma(x2), ..., sigma(xn))",
           [&] { return c.tau == kernel_coordinates(MultiPoly::variable(n, 1), c.delta.kernel_generators()); });
  tr.check("tau is triangular over Q[t,t^-1]", [&] { return is_triangular(c.tau, RingMode::Laurent); });
  tr.check("delta(tau(xi)) = 0 for i >= 2", [&] {
    for (std::size_t i = 2; i <= n; ++i)
      if (!c.delta.apply(c.tau.image(i)).is_zero()) return false;
    return true;
  });
  tr.check("tau_inv is the two-sided inverse of tau", [&] { return verify_inverse_pair(c.tau, c.tau_inv); });
  tr.check("p = h|_{x1=0}", [&] { return c.slice_potential == c.h.set_variable_zero(1); });
  tr.check("tau(p) = h", [&] { return c.tau(c.slice_potential) == c.h; });
  tr.check("epsilon = (x1 + f1*p, x2, ..., xn)", [&] { return c.epsilon == slice_elementary(c.f1, c.slice_potential); });
  tr.check("epsilon is elementary over Q[t,t^-1]", [&] { return is_elementary(c.epsilon, RingMode::Laurent); });
  tr.check("phi = exp(h*delta)", [&] { return c.phi == c.delta.exp_auto(c.h); });
  tr.check("tau o epsilon o tau_inv = phi", [&] { return compose(c.tau, compose(c.epsilon, c.tau_inv)) == c.phi; });
  return tr;
}

/// Factors exp(h*delta) = tau o eps o tau^-1 and verifies the factorization.
inline ConjugationCertificate build_conjugation(const TriangularDerivation& delta, const MultiPoly& h) {
  const LaurentPoly f1 = delta.slice_unit();
  if (!delta.apply(h).is_zero()) throw KernelViolation("delta(h) != 0 for h = " + h.to_string());
  const std::size_t n = delta.arity();
  PolyEndo tau = kernel_coordinates(MultiPoly::variable(n, 1), delta.kernel_generators());
  PolyEndo tau_inv = invert_triangular(tau, RingMode::Laurent);
  // sigma(h) = h and sigma(x1) = 0, hence h = tau(h|_{x1=0}).
  MultiPoly p = h.set_variable_zero(1);
  PolyEndo eps = slice_elementary(f1, p);
  ConjugationCertificate cert{delta, h, f1, std::move(tau), std::move(tau_inv), std::move(p), std::move(eps),
                              delta.exp_auto(h)};
  verify_conjugation(cert).require("build_conjugation");
  return cert;
}

/// The three-factor word (tau_a, eps_a, tau_inv_a) at t = alpha != 0.
inline std::vector<PolyEndo> specialized_tameness(const ConjugationCertificate& cert, const Rational& alpha) {
  if (alpha.is_zero()) throw HypothesisViolation("specialized_tameness needs alpha != 0");
  return {specialize(cert.tau, alpha), specialize(cert.epsilon, alpha), specialize(cert.tau_inv, alpha)};
}

/// Checks that `word` composes to `fiber` and that every factor is a
/// triangular automorphism over Q in some variable order.
inline Transcript verify_triangular_word(const std::vector<PolyEndo>& word, const PolyEndo& fiber,
                                         std::size_t expected_length) {
  Transcript tr;
  tr.record("word has " + std::to_string(expected_length) + " factors", word.size() == expected_length);
  for (std::size_t k = 0; k < word.size(); ++k) {
    tr.check("factor " + std::to_string(k + 1) + " is triangular over Q", [&] {
      for (const auto& img : word[k].images())
        if (!img.is_t_free()) return false;
      return find_triangular_order(word[k], RingMode::Polynomial).has_value();
    });
  }
  tr.check("word composes to the fiber", [&] { return !word.empty() && compose_word(word) == fiber; });
  return tr;
}

// ---------------------------------------------------------------------------
// The explicit family: f1 = t, f2 = x1, f3 = -(l+1) x2^l.
// ---------------------------------------------------------------------------

/// c_0 = l+1, c_i (2i+1) = -c_{i-1} (l-i+1).
inline std::vector<Rational> family_coefficients(int l) {
  std::vector<Rational> c{Rational(l + 1)};
  for (int i = 1; i <= l; ++i) c.push_back(-c.back() * Rational(l - i + 1) / Rational(2 * i + 1));
  return c;
}

inline MultiPoly var3(std::size_t i) { return MultiPoly::variable(3, i); }

inline TriangularDerivation family_delta(int l) {
  return TriangularDerivation({MultiPoly::constant(3, LaurentPoly::t()), var3(1),
                               var3(2).pow(static_cast<unsigned>(l)) * Rational(-(l + 1))});
}

inline TriangularDerivation family_delta0(int l) {
  return TriangularDerivation({MultiPoly(3), var3(1), var3(2).pow(static_cast<unsigned>(l)) * Rational(-(l + 1))});
}

/// g2 = x2 - x1^2/(2t)
inline MultiPoly family_g2() { return var3(2) - var3(1).pow(2) * LaurentPoly::monomial(Rational(1, 2), -1); }

/// g3 = x3 + sum_i c_i t^-(i+1) x1^(2i+1) x2^(l-i)
inline MultiPoly family_g3(int l, const std::vector<Rational>& c) {
  MultiPoly g = var3(3);
  for (int i = 0; i <= l; ++i)
    g += var3(1).pow(static_cast<unsigned>(2 * i + 1)) * var3(2).pow(static_cast<unsigned>(l - i)) *
         LaurentPoly::monomial(c.at(static_cast<std::size_t>(i)), -(i + 1));
  return g;
}

/// p = (c_l t^l / 2) ((2 x2)^(2l+1) + t (x3/c_l)^2)
inline MultiPoly family_p(int l, const std::vector<Rational>& c) {
  const Rational& cl = c.at(static_cast<std::size_t>(l));
  MultiPoly inner = (var3(2) * Rational(2)).pow(static_cast<unsigned>(2 * l + 1)) +
                    var3(3).pow(2) * LaurentPoly::monomial(cl.pow(-2), 1);
  return inner * LaurentPoly::monomial(cl / Rational(2), l);
}

/// x1^(2l) (x1 x3 + x2^(l+1))
inline MultiPoly family_h_limit(int l) {
  return var3(1).pow(static_cast<unsigned>(2 * l)) * (var3(1) * var3(3) + var3(2).pow(static_cast<unsigned>(l + 1)));
}

struct FamilyInstance {
  int l;
  std::vector<Rational> coeffs_c;
  TriangularDerivation delta;
  MultiPoly g2;
  MultiPoly g3;
  PolyEndo tau;
  PolyEndo tau_inv;
  MultiPoly p;
  PolyEndo epsilon;
  MultiPoly h;
  PolyEndo phi;
  TriangularDerivation delta0;
  MultiPoly h_limit;
  WildnessReport wildness;  // at t = 0

  [[nodiscard]] ConjugationCertificate conjugation() const {
    return {delta, h, delta.slice_unit(), tau, tau_inv, p, epsilon, phi};
  }
};

/// Term-level check that h = t^(l+1) x3^2 / (2 c_l) + x1^(2l+1) x3 + q with
/// q in x2 Q[t,t^-1][x1,x2] + t x3 Q[t][x1,x2].
inline bool check_h_shape(int l, const std::vector<Rational>& c, const MultiPoly& h,
                          std::vector<std::string>* diagnostics = nullptr) {
  auto note = [&](const std::string& s) {
    if (diagnostics) diagnostics->push_back(s);
  };
  if (l < 1 || c.size() != static_cast<std::size_t>(l + 1) || h.arity() != 3) {
    note("shape: malformed family parameters");
    return false;
  }
  const Rational& cl = c[static_cast<std::size_t>(l)];
  MultiPoly q = h - var3(3).pow(2) * LaurentPoly::monomial(Rational(1) / (Rational(2) * cl), l + 1) -
                var3(1).pow(static_cast<unsigned>(2 * l + 1)) * var3(3);
  bool ok = true;
  for (const auto& [e, coeff] : q.terms()) {
    const MultiPoly mono = MultiPoly::monomial(coeff, e);
    if (e[2] == 0 && e[1] >= 1) continue;
    if (e[2] == 1 && coeff.valuation() >= 1) continue;
    note("shape: term " + mono.to_string() + " outside x2*R'[x1,x2] + t*x3*R[x1,x2]");
    ok = false;
  }
  return ok;
}

/// h is regular, h_limit is the closed-form limit and equals h|_{t=0}, and
/// h has the expected term shape. Offending monomials go to `diagnostics`.
inline bool check_limit(const FamilyInstance& fam, std::vector<std::string>* diagnostics = nullptr) {
  auto note = [&](const std::string& s) {
    if (diagnostics) diagnostics->push_back(s);
  };
  bool ok = true;
  for (const auto& [e, coeff] : fam.h.terms()) {
    if (!coeff.is_regular()) {
      note("h not regular at monomial " + MultiPoly::monomial(coeff, e).to_string());
      ok = false;
    }
  }
  if (fam.h_limit != family_h_limit(fam.l)) {
    note("h_limit = " + fam.h_limit.to_string() + " differs from " + family_h_limit(fam.l).to_string());
    ok = false;
  }
  if (ok && fam.h.specialize_t(Rational(0)) != fam.h_limit) {
    note("h|_{t=0} differs from h_limit");
    ok = false;
  }
  if (!check_h_shape(fam.l, fam.coeffs_c, fam.h, diagnostics)) ok = false;
  return ok;
}

/// Recomputes every identity the family construction relies on.
inline Transcript verify_family(const FamilyInstance& f) {
  Transcript tr;
  const int l = f.l;
  tr.record("l >= 1", l >= 1);
  if (l < 1) return tr;
  const auto& c = f.coeffs_c;
  tr.check("c has l+1 entries and c0 = l+1", [&] { return c.size() == static_cast<std::size_t>(l + 1) && c[0] == Rational(l + 1); });
  tr.check("c_i(2i+1) = -c_{i-1}(l-i+1)", [&] {
    if (c.size() != static_cast<std::size_t>(l + 1)) return false;
    for (int i = 1; i <= l; ++i)
      if (c[i] * Rational(2 * i + 1) != -c[i - 1] * Rational(l - i + 1)) return false;
    return true;
  });
  tr.check("delta = (t, x1, -(l+1)x2^l)", [&] { return f.delta == family_delta(l); });
  tr.check("g2 = x2 - x1^2/(2t)", [&] { return f.g2 == family_g2(); });
  tr.check("g3 = x3 + sum c_i t^-(i+1) x1^(2i+1) x2^(l-i)", [&] { return f.g3 == family_g3(l, c); });
  tr.check("g2 = sigma(x2)", [&] { return f.g2 == f.delta.slice_sigma(var3(2)); });
  tr.check("g3 = sigma(x3)", [&] { return f.g3 == f.delta.slice_sigma(var3(3)); });
  tr.check("delta(g2) = 0", [&] { return f.delta.apply(f.g2).is_zero(); });
  tr.check("delta(g3) = 0", [&] { return f.delta.apply(f.g3).is_zero(); });
  tr.check("tau = (x1, g2, g3)", [&] { return f.tau == PolyEndo({var3(1), f.g2, f.g3}); });
  tr.check("p = (c_l t^l/2)((2x2)^(2l+1) + t(x3/c_l)^2)", [&] { return f.p == family_p(l, c); });
  tr.check("h = tau(p)", [&] { return f.h == f.tau(f.p); });
  tr.check("delta(h) = 0", [&] { return f.delta.apply(f.h).is_zero(); });
  tr.append(verify_conjugation(f.conjugation()), "conjugation: ");
  tr.check("epsilon is elementary over Q[t]", [&] { return is_elementary(f.epsilon, RingMode::Polynomial); });
  tr.check("h is regular in t", [&] { return f.h.is_regular(); });
  tr.check("h_limit = h|_{t=0}", [&] { return f.h_limit == f.h.specialize_t(Rational(0)); });
  tr.check("h_limit = x1^(2l)(x1x3 + x2^(l+1))", [&] { return f.h_limit == family_h_limit(l); });
  tr.check("h = t^(l+1)x3^2/(2c_l) + x1^(2l+1)x3 + q with q of the stated shape",
           [&] { return check_h_shape(l, c, f.h); });
  tr.check("delta0 = (0, x1, -(l+1)x2^l)", [&] { return f.delta0 == family_delta0(l); });
  tr.check("delta0(h_limit) = 0", [&] { return f.delta0.apply(f.h_limit).is_zero(); });
  tr.check("phi|_{t=0} = exp(h_limit*delta0)",
           [&] { return specialize(f.phi, Rational(0)) == f.delta0.exp_auto(f.h_limit); });
  tr.check("wildness report at t = 0 matches recomputation", [&] {
    const WildnessReport r = check_wild_at_zero(f.delta, f.h);
    return r.f2bar_nonzero == f.wildness.f2bar_nonzero && r.hbar_outside_x1 == f.wildness.hbar_outside_x1 &&
           r.df3_not_in_ideal == f.wildness.df3_not_in_ideal && r.verdict == f.wildness.verdict &&
           r.f2bar == f.wildness.f2bar && r.f3bar == f.wildness.f3bar && r.hbar == f.wildness.hbar;
  });
  tr.record("fiber at t = 0 is wild", f.wildness.verdict == Verdict::Wild);
  return tr;
}

/// Builds the degenerating family for l >= 1 and verifies every identity.
inline FamilyInstance build_family(int l) {
  if (l < 1) throw HypothesisViolation("family parameter l must be >= 1, got " + std::to_string(l));
  auto c = family_coefficients(l);
  TriangularDerivation delta = family_delta(l);
  MultiPoly g2 = family_g2();
  MultiPoly g3 = family_g3(l, c);
  PolyEndo tau({var3(1), g2, g3});
  PolyEndo tau_inv = invert_triangular(tau, RingMode::Laurent);
  MultiPoly p = family_p(l, c);
  PolyEndo eps = slice_elementary(delta.slice_unit(), p);
  MultiPoly h = tau(p);
  PolyEndo phi = delta.exp_auto(h);
  MultiPoly h_limit = h.specialize_t(Rational(0));
  WildnessReport wild = check_wild_at_zero(delta, h);
  FamilyInstance fam{l, std::move(c), delta, std::move(g2), std::move(g3), std::move(tau), std::move(tau_inv), std::move(p),
                     std::move(eps), std::move(h), std::move(phi), family_delta0(l), std::move(h_limit), std::move(wild)};
  verify_family(fam).require("build_family(" + std::to_string(l) + ")");
  return fam;
}

// ---------------------------------------------------------------------------
// Stabilization: the extension to n+1 variables is a four-factor word.
// ---------------------------------------------------------------------------

struct StabilizationCertificate {
  TriangularDerivation delta;  // arity n
  MultiPoly h;
  PolyEndo base;               // exp(h*delta), arity n
  TriangularDerivation delta_tilde;
  PolyEndo gamma;              // (x1, ..., xn, x_{n+1} + h)
  PolyEndo gamma_inv;
  PolyEndo rho;                // exp(x_{n+1} * delta_tilde)
  PolyEndo rho_inv;
  PolyEndo extended;           // base, fixing x_{n+1}
  RingMode mode;
  std::vector<Rational> alphas;  // specializations re-verified
  int factor_count = 4;

  /// gamma^-1 o rho^-1 o gamma o rho, left to right.
  [[nodiscard]] std::vector<PolyEndo> word() const { return {gamma_inv, rho_inv, gamma, rho}; }
};

/// Specializations re-checked by a stabilization certificate: t = 0, 1, -1
/// over Q[t], and t = 1, -1 when t^-1 occurs.
inline std::vector<Rational> stabilization_points(RingMode mode) {
  if (mode == RingMode::Polynomial) return {Rational(0), Rational(1), Rational(-1)};
  return {Rational(1), Rational(-1)};
}

inline Transcript verify_stabilization(const StabilizationCertificate& s) {
  Transcript tr;
  const std::size_t n = s.delta.arity();
  const std::size_t m = n + 1;
  tr.check("delta(h) = 0", [&] { return s.delta.apply(s.h).is_zero(); });
  tr.check("base = exp(h*delta)", [&] { return s.base == s.delta.exp_auto(s.h); });
  tr.check("extended = base fixing x" + std::to_string(m), [&] { return s.extended == s.base.extend_arity(m); });
  tr.check("delta_tilde = delta with delta_tilde(x" + std::to_string(m) + ") = 0",
           [&] { return s.delta_tilde == s.delta.extend_arity(m); });
  const MultiPoly h_ext = s.h.arity() == n ? s.h.extend_arity(m) : MultiPoly(m);
  const MultiPoly x_new = MultiPoly::variable(m, m);
  tr.check("gamma = (x1, ..., xn, x_{n+1} + h)", [&] {
    std::vector<MultiPoly> imgs = PolyEndo::identity(m).images();
    imgs[n] += h_ext;
    return s.gamma == PolyEndo(std::move(imgs));
  });
  tr.check("gamma is elementary", [&] { return is_elementary(s.gamma, s.mode); });
  tr.check("gamma_inv is the inverse of gamma", [&] { return verify_inverse_pair(s.gamma, s.gamma_inv); });
  tr.check("rho = exp(x_{n+1} * delta_tilde)", [&] { return s.rho == s.delta_tilde.exp_auto(x_new); });
  tr.check("rho_inv is the inverse of rho", [&] { return verify_inverse_pair(s.rho, s.rho_inv); });
  tr.record("factor_count = 4", s.factor_count == 4);
  tr.check("gamma^-1 o rho^-1 o gamma o rho = extended", [&] { return compose_word(s.word()) == s.extended; });
  tr.check("all data lies over " + std::string(s.mode == RingMode::Polynomial ? "Q[t]" : "Q[t,t^-1]"), [&] {
    for (const auto& w : s.word())
      for (const auto& img : w.images())
        if (!img.is_member(s.mode)) return false;
    return true;
  });
  tr.record("specialization points are " + std::string(s.mode == RingMode::Polynomial ? "0, 1, -1" : "1, -1"),
            s.alphas == stabilization_points(s.mode));
  for (const auto& alpha : s.alphas) {
    const std::string at = " at t = " + alpha.to_string();
    tr.check("specialized word composes to specialized extension" + at, [&] {
      std::vector<PolyEndo> sw;
      for (const auto& w : s.word()) sw.push_back(specialize(w, alpha));
      return compose_word(sw) == specialize(s.extended, alpha);
    });
  }
  return tr;
}

/// Builds gamma, rho and checks the four-fold identity. Over Q[t] (regular
/// delta and h) the certificate is also checked at t = 0, 1, -1.
inline StabilizationCertificate build_smith_stabilization(const TriangularDerivation& delta, const MultiPoly& h) {
  if (!delta.apply(h).is_zero()) throw KernelViolation("delta(h) != 0 for h = " + h.to_string());
  const std::size_t n = delta.arity();
  const std::size_t m = n + 1;
  bool regular = h.is_regular();
  for (const auto& f : delta.images()) regular = regular && f.is_regular();
  const RingMode mode = regular ? RingMode::Polynomial : RingMode::Laurent;
  TriangularDerivation dt = delta.extend_arity(m);
  const MultiPoly h_ext = h.extend_arity(m);
  std::vector<MultiPoly> g = PolyEndo::identity(m).images();
  std::vector<MultiPoly> gi = g;
  g[n] += h_ext;
  gi[n] -= h_ext;
  const MultiPoly x_new = MultiPoly::variable(m, m);
  PolyEndo base = delta.exp_auto(h);
  PolyEndo extended = base.extend_arity(m);
  std::vector<Rational> alphas = stabilization_points(mode);
  StabilizationCertificate cert{delta, h, std::move(base), dt, PolyEndo(std::move(g)), PolyEndo(std::move(gi)),
                                dt.exp_auto(x_new), dt.exp_auto(-x_new), std::move(extended), mode, std::move(alphas)};
  verify_stabilization(cert).require("build_smith_stabilization");
  return cert;
}

// ---------------------------------------------------------------------------
// Length bounds for the extension psi to n+1 variables.
// ---------------------------------------------------------------------------

struct LengthBounds {
  int alpha_nonzero_bound = 3;
  int alpha_zero_bound = 4;
  Rational witness_alpha;
  std::vector<PolyEndo> nonzero_word;  // psi_alpha as three triangular factors
  std::vector<PolyEndo> zero_word;     // psi_0 as the specialized four-factor word
  PolyEndo psi;                        // extension of phi over Q[t]
};

inline Transcript verify_length_bounds(const LengthBounds& lb) {
  Transcript tr;
  tr.record("alpha_nonzero_bound = 3", lb.alpha_nonzero_bound == 3);
  tr.record("alpha_zero_bound = 4", lb.alpha_zero_bound == 4);
  tr.record("witness alpha != 0", !lb.witness_alpha.is_zero());
  tr.check("psi is defined over Q[t]", [&] {
    for (const auto& img : lb.psi.images())
      if (!img.is_regular()) return false;
    return true;
  });
  tr.append(verify_triangular_word(lb.nonzero_word, specialize(lb.psi, lb.witness_alpha), 3),
            "psi_" + lb.witness_alpha.to_string() + ": ");
  tr.append(verify_triangular_word(lb.zero_word, specialize(lb.psi, Rational(0)), 4), "psi_0: ");
  return tr;
}

/// Witnesses lambda(psi_alpha) <= 3 (alpha != 0) and lambda(psi_0) <= 4 for
/// the extension psi of exp(h*delta) to one more variable.
inline LengthBounds length_bounds(const ConjugationCertificate& conj, const StabilizationCertificate& smith,
                                  const Rational& witness_alpha = Rational(1)) {
  const std::size_t m = conj.delta.arity() + 1;
  LengthBounds lb{3, 4, witness_alpha, {}, {}, smith.extended};
  for (const auto& w : specialized_tameness(conj, witness_alpha)) lb.nonzero_word.push_back(w.extend_arity(m));
  for (const auto& w : smith.word()) lb.zero_word.push_back(specialize(w, Rational(0)));
  verify_length_bounds(lb).require("length_bounds");
  return lb;
}

inline LengthBounds length_bounds(const FamilyInstance& fam, const Rational& witness_alpha = Rational(1)) {
  return length_bounds(fam.conjugation(), build_smith_stabilization(fam.delta, fam.h), witness_alpha);
}

}  // namespace tamedeg

#endif  // TAMEDEG_TAMECERT_HPP

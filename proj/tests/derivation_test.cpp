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

#include <gtest/gtest.h>

#include <vector>

#include "support.hpp"
#include "tamedeg/derivation.hpp"
#include "tamedeg/text.hpp"

namespace tamedeg {
namespace {

MultiPoly P(const char* s, std::size_t n = 3) { return parse_multipoly(s, n); }

TriangularDerivation D(std::vector<const char*> images) {
  std::vector<MultiPoly> f;
  for (const char* s : images) f.push_back(P(s, images.size()));
  return TriangularDerivation(std::move(f));
}

// The l = 1 family derivation (t, x1, -2 x2).
const TriangularDerivation& family1() {
  static const TriangularDerivation d = D({"t", "x1", "-2*x2"});
  return d;
}

TEST(TriangularDerivation, RejectsNonTriangularImages) {
  EXPECT_THROW(D({"x1", "0"}), NotTriangular);
  EXPECT_THROW(D({"t", "x2"}), NotTriangular);
  EXPECT_THROW(D({"0", "x1", "x3"}), NotTriangular);
  EXPECT_NO_THROW(D({"t", "x1", "x1*x2"}));
}

TEST(Apply, Examples) {
  EXPECT_EQ(family1().apply(P("x2")), P("x1"));
  EXPECT_TRUE(family1().apply(P("x2 - 1/2*t^-1*x1^2")).is_zero());
  EXPECT_TRUE(family1().apply(P("1")).is_zero());
  EXPECT_THROW((void)family1().apply(P("x1", 2)), ArityMismatch);
}

TEST(NilpotencyExponent, Examples) {
  EXPECT_EQ(family1().nilpotency_exponent(P("x2")), 3u);  // x2 -> x1 -> t -> 0
  EXPECT_EQ(family1().nilpotency_exponent(P("1")), 1u);
  EXPECT_EQ(family1().nilpotency_exponent(P("x3")), 4u);  // x3 -> -2x2 -> -2x1 -> -2t -> 0
  EXPECT_EQ(family1().nilpotency_exponent(P("0")), 0u);
}

TEST(ExpAuto, Examples) {
  EXPECT_EQ(family1().exp_auto(P("0")), PolyEndo::identity(3));
  // x2 + 1*x1 + 1^2 * t / 2!
  EXPECT_EQ(family1().exp_auto(P("1")).image(2), P("x2 + x1 + 1/2*t"));
  const auto d2 = D({"0", "x1"});
  EXPECT_EQ(d2.exp_auto(P("x1", 2)).image(2), P("x2 + x1^2", 2));
  EXPECT_THROW((void)family1().exp_auto(P("x2")), KernelViolation);
}

TEST(SliceSigma, Examples) {
  EXPECT_TRUE(family1().slice_sigma(P("x1")).is_zero());
  EXPECT_EQ(family1().slice_sigma(P("x2")), P("x2 - 1/2*t^-1*x1^2"));
  EXPECT_EQ(family1().slice_sigma(P("x3")), P("x3 + 2*t^-1*x1*x2 - 2/3*t^-2*x1^3"));
  EXPECT_THROW((void)D({"t + 1", "x1"}).slice_sigma(P("x2", 2)), NonUnitError);
  EXPECT_THROW((void)D({"0", "x1"}).slice_sigma(P("x2", 2)), NonUnitError);
}

TEST(KernelGenerators, Examples) {
  const auto gens = family1().kernel_generators();
  ASSERT_EQ(gens.size(), 2u);
  EXPECT_EQ(gens[0], P("x2 - 1/2*t^-1*x1^2"));
  EXPECT_EQ(gens[1], P("x3 + 2*t^-1*x1*x2 - 2/3*t^-2*x1^3"));
  const auto trivial = D({"1", "0", "0"}).kernel_generators();
  EXPECT_EQ(trivial, (std::vector{P("x2"), P("x3")}));
  const auto arity2 = D({"t", "x1"}).kernel_generators();
  EXPECT_EQ(arity2, (std::vector{P("x2 - 1/2*t^-1*x1^2", 2)}));
  EXPECT_THROW((void)D({"x1*0 + 1 + t", "x1"}).kernel_generators(), NonUnitError);
}

TEST(DerivationProperty, Leibniz) {
  testing::Gen g(31);
  for (int trial = 0; trial < 100; ++trial) {
    const MultiPoly q = g.poly(3, 4, 5), r = g.poly(3, 4, 5);
    EXPECT_EQ(family1().apply(q * r), family1().apply(q) * r + q * family1().apply(r));
  }
}

// Kernel elements of the l = 1 derivation built from its generators.
MultiPoly random_kernel_element(testing::Gen& g) {
  const auto gens = family1().kernel_generators();
  const MultiPoly coeffs = g.poly(2, 1, 3, false, 0, 2);
  MultiPoly h(3);
  for (const auto& [e, c] : coeffs.terms()) h += gens[0].pow(e[0]) * gens[1].pow(e[1]) * c;
  return h;
}

TEST(DerivationProperty, ExpInverseLaw) {
  testing::Gen g(32);
  for (int trial = 0; trial < 20; ++trial) {
    const MultiPoly h = random_kernel_element(g);
    ASSERT_TRUE(family1().apply(h).is_zero());
    const PolyEndo phi = family1().exp_auto(h);
    const PolyEndo psi = family1().exp_auto(-h);
    EXPECT_TRUE(verify_inverse_pair(phi, psi));
  }
}

TEST(DerivationProperty, ExpIsRingHomomorphism) {
  testing::Gen g(33);
  for (int trial = 0; trial < 20; ++trial) {
    const MultiPoly h = random_kernel_element(g);
    const PolyEndo phi = family1().exp_auto(h);
    const MultiPoly q = g.poly(3, 3, 4), r = g.poly(3, 3, 4);
    EXPECT_EQ(phi(q * r), phi(q) * phi(r));
    EXPECT_EQ(phi(q), family1().exp_apply(h, q));
  }
}

TEST(DerivationProperty, SliceSigmaLaws) {
  testing::Gen g(34);
  const auto& d = family1();
  const MultiPoly x1_over_f1 = P("t^-1*x1");
  for (int trial = 0; trial < 100; ++trial) {
    const MultiPoly q = g.poly(3, 5, 6), r = g.poly(3, 3, 4);
    const MultiPoly sq = d.slice_sigma(q);
    EXPECT_EQ(d.slice_sigma(sq), sq);
    EXPECT_TRUE(d.apply(sq).is_zero());
    EXPECT_EQ(d.slice_sigma(q * r), sq * d.slice_sigma(r));
    // q = sum_l sigma(delta^l q)/l! (x1/f1)^l
    MultiPoly recon(3);
    const auto its = d.iterates(q);
    for (std::size_t l = 0; l < its.size(); ++l)
      recon += d.slice_sigma(its[l]) * x1_over_f1.pow(static_cast<unsigned>(l)) *
               factorial(static_cast<unsigned>(l)).inverse();
    EXPECT_EQ(recon, q);
  }
  EXPECT_TRUE(d.slice_sigma(P("x1")).is_zero());
}

}  // namespace
}  // namespace tamedeg

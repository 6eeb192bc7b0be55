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
#include "tamedeg/multipoly.hpp"
#include "tamedeg/text.hpp"

namespace tamedeg {
namespace {

MultiPoly P(const char* s, std::size_t n = 3) { return parse_multipoly(s, n); }

TEST(PolyAdd, Examples) {
  EXPECT_TRUE((P("x1") + P("-x1")).is_zero());
  EXPECT_EQ(P("x1*x2 + 1") + P("x2^2"), P("x1*x2 + x2^2 + 1"));
  EXPECT_EQ(P("t*x1") + P("t^-1*x1"), P("(t + t^-1)*x1"));
  EXPECT_THROW(P("x1", 2) + P("x1", 3), ArityMismatch);
}

TEST(PolyMul, Examples) {
  EXPECT_EQ(P("x2") * P("x2"), P("x2^2"));
  // (x2 - x1^2/(2t)) * 2t
  EXPECT_EQ(P("x2 - 1/2*t^-1*x1^2") * P("2*t"), P("2*t*x2 - x1^2"));
  const MultiPoly a = P("x1^2*x3 - 3*t*x2 + 7");
  EXPECT_EQ(P("1") * a, a);
  EXPECT_THROW(P("x1", 2) * P("x1", 3), ArityMismatch);
}

TEST(PartialDerivative, Examples) {
  EXPECT_EQ(P("-2*x2").partial_derivative(2), P("-2"));
  EXPECT_TRUE(P("x1^3").partial_derivative(2).is_zero());
  EXPECT_EQ(P("x1^2*x2").partial_derivative(1), P("2*x1*x2"));
  EXPECT_THROW(P("x1").partial_derivative(4), IndexOutOfRange);
  EXPECT_THROW(P("x1").partial_derivative(0), IndexOutOfRange);
}

TEST(Substitute, Examples) {
  const MultiPoly a = P("x1*x3 + x2^2");
  EXPECT_EQ(a.substitute(std::vector{P("x1"), P("x2"), P("x3")}), a);
  EXPECT_EQ(P("x2").substitute(std::vector{P("x1"), P("x2 - 1/2*t^-1*x1^2"), P("x3")}), P("x2 - 1/2*t^-1*x1^2"));
  EXPECT_EQ(P("x2^2").substitute(std::vector{P("x1"), P("x1 + 1"), P("x3")}), P("x1^2 + 2*x1 + 1"));
  EXPECT_THROW(a.substitute(std::vector{P("x1"), P("x2")}), ArityMismatch);
  EXPECT_THROW(a.substitute(std::vector{P("x1"), P("x2"), P("x1", 2)}), ArityMismatch);
}

TEST(ExactDivide, Examples) {
  EXPECT_EQ(P("x1^2*x2 + x1*x2^2").exact_divide(P("x1")), P("x1*x2 + x2^2"));
  EXPECT_FALSE(P("-2").exact_divide(P("x1")).has_value());
  EXPECT_EQ(P("0").exact_divide(P("x1")), P("0"));
  EXPECT_THROW((void)P("x1").exact_divide(P("0")), DivisionByZero);
  // Laurent coefficients: quotient by (1 + t) in Q[t,t^-1][x]
  EXPECT_EQ(P("(t^2 - 1)*x1*x2").exact_divide(P("(t - 1)*x2")), P("(t + 1)*x1"));
  EXPECT_FALSE(P("x1").exact_divide(P("(t + 1)*x1")).has_value());
}

TEST(SpecializeT, Examples) {
  EXPECT_EQ(P("t*x2^3 + x1").specialize_t(Rational(0)), P("x1"));
  EXPECT_EQ(P("x2 - 1/2*t^-1*x1^2").specialize_t(Rational(1)), P("x2 - 1/2*x1^2"));
  try {
    (void)P("x2 - 1/2*t^-1*x1^2").specialize_t(Rational(0));
    FAIL() << "expected a pole error";
  } catch (const PoleError& e) {
    EXPECT_NE(std::string(e.what()).find("x1^2"), std::string::npos) << e.what();
  }
}

TEST(DegreeIn, Examples) {
  EXPECT_EQ(P("x1^3*x3 + x1^2*x2^2").degree_in(3), 1u);
  EXPECT_EQ(P("5").degree_in(1), 0u);
  EXPECT_EQ(P("x2^4").degree_in(2), 4u);
  EXPECT_THROW((void)P("0").degree_in(1), UndefinedForZero);
}

TEST(TextGrammar, CanonicalRendering) {
  EXPECT_EQ(P("x2 - 1/2*t^-1*x1^2").to_string(), "-1/2*t^-1*x1^2 + x2");
  EXPECT_EQ(P("(1/2*t^-1)*x1^2").to_string(), "1/2*t^-1*x1^2");
  EXPECT_EQ(P("(t + t^-1)*x1 - 3").to_string(), "(t^-1 + t)*x1 - 3");
  EXPECT_EQ(P("x1^4*x1*x3 + x1^4*x2^3").to_string(), "x1^4*x2^3 + x1^5*x3");
  EXPECT_EQ(P("-(t - 1)*x1").to_string(), "(1 - t)*x1");
  EXPECT_EQ(P("0").to_string(), "0");
  EXPECT_THROW(P("x4"), ParseError);
  EXPECT_THROW(P("x1 +"), ParseError);
  EXPECT_THROW(P("x1^-1"), ParseError);
  EXPECT_THROW(P("2 x1"), ParseError);
}

TEST(MultiPolyProperty, TextRoundTrip) {
  testing::Gen g(21);
  for (int trial = 0; trial < 200; ++trial) {
    const MultiPoly a = g.poly(3, 4, 6);
    EXPECT_EQ(P(a.to_string().c_str()), a) << a.to_string();
  }
}

TEST(MultiPolyProperty, IdentitySubstitution) {
  testing::Gen g(22);
  const std::vector ident{P("x1"), P("x2"), P("x3")};
  for (int trial = 0; trial < 100; ++trial) {
    const MultiPoly a = g.poly(3, 5, 8);
    EXPECT_EQ(a.substitute(ident), a);
  }
}

TEST(MultiPolyProperty, SubstituteIsRingHomomorphism) {
  testing::Gen g(23);
  for (int trial = 0; trial < 60; ++trial) {
    const MultiPoly a = g.poly(3, 3, 5), b = g.poly(3, 3, 5);
    const std::vector m{g.poly(3, 2, 3), g.poly(3, 2, 3), g.poly(3, 2, 3)};
    EXPECT_EQ((a * b).substitute(m), a.substitute(m) * b.substitute(m));
    EXPECT_EQ((a + b).substitute(m), a.substitute(m) + b.substitute(m));
  }
}

TEST(MultiPolyProperty, SubstituteMatchesTermwiseExpansion) {
  testing::Gen g(24);
  for (int trial = 0; trial < 60; ++trial) {
    const MultiPoly a = g.poly(3, 4, 6);
    const std::vector m{g.poly(3, 2, 3), g.poly(3, 2, 3), g.poly(3, 2, 3)};
    MultiPoly expected(3);
    for (const auto& [e, c] : a.terms())
      expected += m[0].pow(e[0]) * m[1].pow(e[1]) * m[2].pow(e[2]) * c;
    EXPECT_EQ(a.substitute(m), expected);
  }
}

TEST(MultiPolyProperty, Leibniz) {
  testing::Gen g(25);
  for (int trial = 0; trial < 100; ++trial) {
    const MultiPoly a = g.poly(3, 4, 6), b = g.poly(3, 4, 6);
    for (std::size_t i = 1; i <= 3; ++i)
      EXPECT_EQ((a * b).partial_derivative(i), a.partial_derivative(i) * b + a * b.partial_derivative(i));
  }
}

TEST(MultiPolyProperty, SpecializationIsMultiplicative) {
  testing::Gen g(26);
  for (int trial = 0; trial < 100; ++trial) {
    const MultiPoly a = g.poly(3, 3, 5, false, 0, 3), b = g.poly(3, 3, 5, false, 0, 3);
    const Rational alpha = trial % 4 == 0 ? Rational(0) : g.nonzero_rational();
    EXPECT_EQ((a * b).specialize_t(alpha), a.specialize_t(alpha) * b.specialize_t(alpha));
  }
}

TEST(MultiPolyProperty, ExactDivideProducts) {
  testing::Gen g(27);
  for (int trial = 0; trial < 100; ++trial) {
    const MultiPoly d = g.poly(3, 2, 3);
    if (d.is_zero()) continue;
    const MultiPoly q = g.poly(3, 3, 4);
    const auto got = (d * q).exact_divide(d);
    ASSERT_TRUE(got.has_value());
    EXPECT_EQ(*got, q);
  }
}

// Division answers agree with the brute-force linear-system oracle.
TEST(MultiPolyProperty, ExactDivideMatchesLinearSolveOracle) {
  testing::Gen g(28);
  int divisible = 0, not_divisible = 0;
  for (int trial = 0; trial < 150; ++trial) {
    const std::size_t n = trial % 2 == 0 ? 2 : 3;
    const MultiPoly d = g.poly(n, 2, 3, true);
    if (d.is_zero()) continue;
    MultiPoly a = trial % 3 == 0 ? d * g.poly(n, 2, 3, true) : g.poly(n, 4, 5, true);
    if (!a.is_zero() && a.total_degree() > 4) continue;
    const auto q = a.exact_divide(d);
    const bool oracle = testing::divisible_by_linear_solve(a, d);
    EXPECT_EQ(q.has_value(), oracle) << "a = " << a << ", d = " << d;
    if (q) {
      EXPECT_EQ(d * *q, a);
      ++divisible;
    } else {
      ++not_divisible;
    }
  }
  EXPECT_GT(divisible, 10);
  EXPECT_GT(not_divisible, 10);
}

}  // namespace
}  // namespace tamedeg

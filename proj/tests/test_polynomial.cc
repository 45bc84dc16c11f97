// Copyright 2026 The rzpencil Authors
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

#include "oracles/oracles.inc"
#include "rzpencil/error.h"
#include "rzpencil/polynomial.h"
#include "rzpencil/random.h"
#include "test_util.h"

namespace rzpencil {
namespace {

using testing::parse;

TEST(Parser, BasicGrammar) {
  const Poly p = parse("1 - x1^2 - x2^2", 2, 1);
  EXPECT_EQ(p.degree(), 2);
  EXPECT_EQ(p.term_count(), 3u);
  EXPECT_EQ(p.constant_term(), Quad(1));
  EXPECT_EQ(parse("(x0 + 1)^2", 1), parse("x0^2 + 2*x0 + 1", 1));
  EXPECT_EQ(parse("x0/2 + 0.25*x0", 1), parse("3/4*x0", 1));
  EXPECT_EQ(parse("1.5e1*x0", 1), parse("15*x0", 1));
  EXPECT_EQ(parse("-(-x0)", 1), parse("x0", 1));
}

TEST(Parser, Aliases) {
  EXPECT_EQ(parse("x^2 + y*z", 3), parse("x0^2 + x1*x2", 3));
  EXPECT_EQ(parse("a + b", 2, 1), parse("x1 + x2", 2, 1));
}

TEST(Parser, SqrtCoefficients) {
  const Poly p = parse("(x1 + sqrt(2))^2 - 1", 1, 1);
  EXPECT_EQ(p.constant_term(), Quad(1));
  EXPECT_EQ(p.domain(), CoefficientDomain::sqrt(2));
  EXPECT_EQ(parse("sqrt(8)*x0", 1), parse("2*sqrt(2)*x0", 1));
}

TEST(Parser, ErrorsCarryPositions) {
  try {
    parse("1 + x1 +", 1, 1);
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_GE(e.position(), 7u);
  }
  EXPECT_THROW(parse("x5", 2, 1), ParseError);
  EXPECT_THROW(parse("x0 / x0", 1), ParseError);
  EXPECT_THROW(parse("x0 / 0", 1), ParseError);
  EXPECT_THROW(parse("x0^-1", 1), ParseError);
  EXPECT_THROW(parse("i*x0", 1), ParseError);
  EXPECT_THROW(parse("sqrt(2)*x0 + sqrt(3)", 1), Error);
}

TEST(Parser, InferNvars) {
  ParseOptions base1;
  base1.base = 1;
  EXPECT_EQ(infer_nvars("1 - x1^2 - x7", base1), 7);
  EXPECT_EQ(infer_nvars("x0 + x3"), 4);
}

TEST(Poly, ArithmeticAndDegree) {
  const Poly a = parse("1 + x0", 2);
  const Poly b = parse("1 - x0 + x1^3", 2);
  EXPECT_EQ(a * b, parse("1 + x1^3 - x0^2 + x0*x1^3", 2));
  EXPECT_EQ((a * b).degree(), 4);
  EXPECT_EQ(a.pow(3), a * a * a);
  EXPECT_TRUE((a - a).is_zero());
  EXPECT_EQ(Poly(2).degree(), -1);
  EXPECT_EQ((a * b).divide_exact(b), a);
}

TEST(Poly, HomogeneousParts) {
  const Poly p = parse("1 + 2*x0 - x0*x1 + x1^2 + x0^3", 2);
  EXPECT_EQ(p.homogeneous_part(2), parse("x1^2 - x0*x1", 2));
  EXPECT_TRUE(p.homogeneous_part(3).is_homogeneous());
  EXPECT_FALSE(p.is_homogeneous());
}

TEST(Poly, Restrict) {
  const Poly p = parse("1 - x0^2 - x1^2", 2);
  const std::vector<Quad> a{Quad(3), Quad(4)};
  const UniPoly<Quad> u = restrict(p, a);
  EXPECT_EQ(u, UniPoly<Quad>({Quad(1), Quad(0), Quad(-25)}));
  const std::vector<double> ad{0.6, 0.8};
  const UniPoly<double> ud = restrict(p, ad);
  EXPECT_NEAR(ud.coefficient(2), -1.0, 1e-15);
}

TEST(Poly, ShiftedHomogenizationMatchesOracle) {
  const Poly p = parse("1 + x1 - 2*x1*x2 + x2^3", 2, 1);
  const Poly pt = shifted_homogenize(p);
  EXPECT_EQ(pt, parse(kShiftedCubic, 3));
  const auto back = shifted_dehomogenize(pt);
  ASSERT_TRUE(back.has_value());
  EXPECT_EQ(*back, p);
}

TEST(Poly, ShiftedDehomogenizeRejects) {
  EXPECT_FALSE(shifted_dehomogenize(parse("1 - x0^2 - x1^2", 2)).has_value());
  EXPECT_FALSE(shifted_dehomogenize(parse("2 + x0", 2)).has_value());
}

TEST(Poly, HomogenizeAndEliminate) {
  const Poly p = parse("1 + x0 - x0^2", 1);
  const Poly h = homogenize(p);
  EXPECT_TRUE(h.is_homogeneous());
  EXPECT_EQ(eliminate_variable(h, 0, Quad(1)), p);
}

TEST(Poly, DomainMerging) {
  EXPECT_EQ(merge_domains(CoefficientDomain::rational(), CoefficientDomain::sqrt(2)),
            CoefficientDomain::sqrt(2));
  EXPECT_TRUE(merge_domains(CoefficientDomain::sqrt(2), CoefficientDomain::floating()).is_float());
  EXPECT_THROW(merge_domains(CoefficientDomain::sqrt(2), CoefficientDomain::sqrt(3)), DomainError);
  EXPECT_EQ(CoefficientDomain::parse("sqrt:5"), CoefficientDomain::sqrt(5));
  EXPECT_THROW(CoefficientDomain::parse("sqrt:4"), FormatError);
  EXPECT_THROW(CoefficientDomain::parse("complex"), FormatError);
}

// Printing and reparsing is the identity on random polynomials.
TEST(Poly, TextRoundTripProperty) {
  for (int trial = 0; trial < 50; ++trial) {
    Rng rng(trial_seed(7, trial));
    const int n = 1 + static_cast<int>(rng.uniform_int(0, 3));
    Poly p(n);
    for (int t = 0; t < 6; ++t) {
      Monomial m(n);
      for (auto& e : m) e = static_cast<int>(rng.uniform_int(0, 3));
      Quad c = rng.small_rational(9, 5);
      if (trial % 3 == 0) c = c + rng.small_rational(3, 2) * Quad::sqrt_of(3);
      p.add_term(m, c);
    }
    for (int base : {0, 1}) {
      EXPECT_EQ(parse(to_string(p, base), n, base), p) << to_string(p, base);
    }
  }
}

}  // namespace
}  // namespace rzpencil

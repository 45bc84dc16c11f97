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
#include "rzpencil/quad.h"

namespace rzpencil {
namespace {

TEST(Quad, RationalArithmetic) {
  const Quad a(mpq_class(1, 3));
  const Quad b(mpq_class(-5, 6));
  EXPECT_EQ(a + b, Quad(mpq_class(-1, 2)));
  EXPECT_EQ(a * b, Quad(mpq_class(-5, 18)));
  EXPECT_EQ(a / b, Quad(mpq_class(-2, 5)));
  EXPECT_TRUE((a - a).is_zero());
  EXPECT_THROW(a / Quad(0), DomainError);
}

TEST(Quad, SqrtSimplifies) {
  EXPECT_EQ(Quad::sqrt_of(8), Quad(2) * Quad::sqrt_of(2));
  EXPECT_EQ(Quad::sqrt_of(9), Quad(3));
  EXPECT_TRUE(Quad::sqrt_of(9).is_rational());
  EXPECT_EQ(Quad::sqrt_of(2) * Quad::sqrt_of(2), Quad(2));
}

TEST(Quad, QuotientMatchesOracle) {
  const Quad s = Quad::sqrt_of(2);
  const Quad q = (Quad(1) + s) / (Quad(3) - Quad(2) * s);
  EXPECT_EQ(q, parse_real_constant(kQuadQuotient));
  EXPECT_EQ(q, Quad(7) + Quad(5) * s);
}

TEST(Quad, SignOfMixedTerms) {
  const Quad s = Quad::sqrt_of(2);
  EXPECT_EQ((Quad(3) - Quad(2) * s).sign(), 1);   // 3 > 2.828
  EXPECT_EQ((Quad(2) - Quad(2) * s).sign(), -1);  // 2 < 2.828
  EXPECT_EQ((s - Quad(mpq_class(141, 100))).sign(), 1);
  EXPECT_LT(Quad(1), s);
  EXPECT_GT(Quad(mpq_class(3, 2)), s);
}

TEST(Quad, MixedRadicandsRejected) {
  EXPECT_THROW(Quad::sqrt_of(2) + Quad::sqrt_of(3), DomainError);
}

TEST(Quad, ExactSqrt) {
  EXPECT_EQ(*exact_sqrt(Quad(mpq_class(9, 4))), Quad(mpq_class(3, 2)));
  EXPECT_EQ(*exact_sqrt(Quad(2)), Quad::sqrt_of(2));
  EXPECT_EQ(*exact_sqrt(Quad(mpq_class(1, 2))), Quad::sqrt_of(2) / Quad(2));
  EXPECT_TRUE(exact_sqrt(Quad(0)).has_value());
  EXPECT_FALSE(exact_sqrt(Quad(-1)).has_value());
}

TEST(Quad, DoubleConversion) {
  EXPECT_DOUBLE_EQ(Quad::sqrt_of(2).to_double(), std::sqrt(2.0));
  EXPECT_EQ(Quad::from_double(0.375), Quad(mpq_class(3, 8)));
}

TEST(Quad, TextRoundTrip) {
  const Quad s = Quad::sqrt_of(5);
  for (const Quad& q : {Quad(0), Quad(mpq_class(-7, 3)), s, -s, Quad(mpq_class(1, 2)) - s * Quad(4)}) {
    EXPECT_EQ(parse_real_constant(q.to_string()), q) << q.to_string();
  }
}

TEST(CQuad, Arithmetic) {
  const CQuad i = CQuad::i();
  EXPECT_EQ(i * i, CQuad(-1));
  const CQuad z(Quad(1), Quad(2));
  EXPECT_EQ(z * z.conj(), CQuad(5));
  EXPECT_EQ(z / z, CQuad(1));
  EXPECT_EQ(parse_complex_constant(z.to_string()), z);
  EXPECT_EQ(parse_complex_constant("-3/2-i"), CQuad(Quad(mpq_class(-3, 2)), Quad(-1)));
}

}  // namespace
}  // namespace rzpencil

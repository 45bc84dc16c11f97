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

#include "rzpencil/error.h"
#include "rzpencil/realzero.h"
#include "test_util.h"

namespace rzpencil {
namespace {

using testing::parse;

void expect_exact_witness(const Poly& p, const RzVerdict& v) {
  ASSERT_FALSE(v.is_rz);
  ASSERT_TRUE(v.witness.has_value());
  EXPECT_FALSE(is_real_rooted(restrict(p, *v.witness)));
}

TEST(RealRoots, ExactProfile) {
  // (t - 1)^2 (t + 2) (t^2 + 1) in ambient degree 7.
  const UniPoly<Quad> u = UniPoly<Quad>({Quad(-1), Quad(1)}) * UniPoly<Quad>({Quad(-1), Quad(1)}) *
                          UniPoly<Quad>({Quad(2), Quad(1)}) * UniPoly<Quad>({Quad(1), Quad(0), Quad(1)});
  const RootProfile r = real_roots(u, 7);
  ASSERT_EQ(r.real_roots.size(), 2u);
  EXPECT_NEAR(r.real_roots[0].value, -2.0, 1e-12);
  EXPECT_EQ(r.real_roots[1].multiplicity, 2);
  EXPECT_EQ(r.complex_pair_count, 1);
  EXPECT_EQ(r.degree_drop, 2);
  EXPECT_EQ(r.real_count(), 3);
  EXPECT_FALSE(r.real_rooted());
  EXPECT_THROW(real_roots(u, 4), PreconditionError);
  EXPECT_THROW(real_roots(UniPoly<Quad>(), 2), DomainError);
}

TEST(RealRoots, FloatProfile) {
  const UniPoly<double> u({-2.0, 0.0, 1.0});
  const RootProfile r = real_roots(u, 2);
  ASSERT_EQ(r.real_roots.size(), 2u);
  EXPECT_NEAR(r.real_roots[1].value, std::sqrt(2.0), 1e-12);
  EXPECT_EQ(r.method, RootMethod::kFloatEig);
}

TEST(RealZero, AcceptsKnownExamples) {
  for (int n = 1; n <= 8; ++n) {
    Poly p = Poly::constant(n, Quad(1));
    for (int i = 0; i < n; ++i) p -= Poly::variable(n, i) * Poly::variable(n, i);
    const RzVerdict v = is_real_zero(p);
    EXPECT_TRUE(v.is_rz);
    EXPECT_EQ(v.mode, RzVerdict::Mode::kExact);
  }
  EXPECT_EQ(is_real_zero(parse("1 + x1", 1, 1)).method, "linear");
  const Poly cubic = parse("(1 + x0)*(1 - x1)*(1 + x0 + x1)", 2);
  const RzVerdict v = is_real_zero(cubic);
  EXPECT_TRUE(v.is_rz);
  EXPECT_EQ(v.mode, RzVerdict::Mode::kSampled);
  EXPECT_EQ(v.method, "sampled-sturm");
}

TEST(RealZero, RejectsWithExactWitness) {
  const Poly quartic = parse("1 - x1^4 - x2^4", 2, 1);
  expect_exact_witness(quartic, is_real_zero(quartic));
  const Poly plus = parse("1 + x1^2", 1, 1);
  const RzVerdict v = is_real_zero(plus);
  EXPECT_EQ(v.mode, RzVerdict::Mode::kExact);
  expect_exact_witness(plus, v);
  RzOptions sampled;
  sampled.strategy = RzOptions::Strategy::kSampled;
  expect_exact_witness(plus, is_real_zero(plus, sampled));
}

TEST(RealZero, RequiresUnitConstantTerm) {
  EXPECT_THROW(is_real_zero(parse("2 - x0^2", 1)), PreconditionError);
}

TEST(RealZero, QuadraticStrategyNeedsDegreeTwo) {
  RzOptions o;
  o.strategy = RzOptions::Strategy::kQuadratic;
  EXPECT_THROW(is_real_zero(parse("1 + x0^3", 1), o), PreconditionError);
}

// Random RZ quadratics are accepted exactly, and pushing G off the PSD cone
// is caught with a verified witness.
TEST(RealZero, QuadraticProperty) {
  for (int trial = 0; trial < 30; ++trial) {
    Rng rng(trial_seed(11, trial));
    const int n = 1 + static_cast<int>(rng.uniform_int(0, 5));
    const Poly p = testing::random_quadratic_rz(n, rng);
    const QuadraticData q = quadratic_form(p);
    EXPECT_EQ(q.reconstruct(), p);
    EXPECT_TRUE(quadratic_rz_check(q));
    EXPECT_TRUE(is_real_zero(p).is_rz);
    // Adding x_0^2 * (1 + lambda_max) makes the leading entry of G negative.
    const Poly bad = p + (Poly::variable(n, 0) * Poly::variable(n, 0))
                             .scaled(q.G(0, 0) + Quad(1));
    expect_exact_witness(bad, is_real_zero(bad));
    const auto w = negative_direction(quadratic_form(bad).G);
    ASSERT_TRUE(w.has_value());
  }
}

TEST(RealZero, QuadraticExactSquareRoot) {
  const QuadraticData q = quadratic_form(parse("(x1 + sqrt(2))^2 - x2^2 - x3^2 - 1", 3, 1));
  ASSERT_TRUE(q.C_exact.has_value());
  EXPECT_EQ(*q.C_exact * *q.C_exact, q.G);
}

TEST(RigidMembership, HalfOpenInterval) {
  const Poly p = parse("1 - x1^2 - x2^2", 2, 1);
  const std::vector<Quad> inside{Quad(mpq_class(1, 2)), Quad(0)};
  const std::vector<Quad> boundary{Quad(mpq_class(3, 5)), Quad(mpq_class(4, 5))};
  const std::vector<Quad> outside{Quad(1), Quad(1)};
  EXPECT_TRUE(rigid_membership(p, inside));
  EXPECT_TRUE(rigid_membership(p, boundary));
  EXPECT_FALSE(rigid_membership(p, outside));
  const std::vector<double> d_out{0.8, 0.7};
  EXPECT_FALSE(rigid_membership(p, d_out));
}

TEST(SimpleZeros, DetectsRepeatedRoots) {
  const Poly p3 = parse("1 - x1^2 - x2^2 - x3^2", 3, 1);
  EXPECT_TRUE(simple_zeros_sampled(p3, 64, 5).simple);
  const Poly twice = parse("(1 - x1^2 - x2^2)^2", 2, 1);
  const SimpleZerosResult r = simple_zeros_sampled(twice, 64, 5);
  EXPECT_FALSE(r.simple);
  ASSERT_TRUE(r.witness.has_value());
}

}  // namespace
}  // namespace rzpencil

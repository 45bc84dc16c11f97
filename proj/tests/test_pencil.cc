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
#include "rzpencil/catalog.h"
#include "rzpencil/error.h"
#include "rzpencil/pencil.h"
#include "test_util.h"

namespace rzpencil {
namespace {

using testing::parse;

Pencil oracle_pencil() {
  const CQuad i = CQuad::i();
  const CQuad half(Quad(mpq_class(1, 2)));
  CQMatrix m1(3, 3), m2(3, 3);
  m1(0, 0) = 1;
  m1(0, 1) = CQuad(2) + i;
  m1(1, 0) = CQuad(2) - i;
  m1(1, 1) = -1;
  m1(1, 2) = half;
  m1(2, 1) = half;
  m1(2, 2) = 3;
  m2(0, 1) = i;
  m2(1, 0) = -i;
  m2(0, 2) = 1;
  m2(2, 0) = 1;
  m2(1, 1) = 2;
  m2(2, 2) = -1;
  return Pencil::from_exact(2, 3, {m1, m2});
}

TEST(Pencil, Validation) {
  CQMatrix bad(2, 2);
  bad(0, 1) = CQuad(1);
  EXPECT_THROW(Pencil::from_exact(1, 2, {bad}), PreconditionError);
  EXPECT_THROW(Pencil::from_exact(2, 2, {CQMatrix::identity(2)}), DimensionError);
  CQMatrix complex_entry(2, 2);
  complex_entry(0, 1) = CQuad::i();
  complex_entry(1, 0) = -CQuad::i();
  EXPECT_THROW(Pencil::from_exact(1, 2, {complex_entry}, Symmetry::kSymmetric), PreconditionError);
  EXPECT_EQ(Pencil::from_exact(1, 2, {complex_entry}).symmetry(), Symmetry::kHermitian);
  EXPECT_EQ(arrowhead_pencil(3).symmetry(), Symmetry::kSymmetric);
}

TEST(Pencil, DeterminantMatchesOracle) {
  EXPECT_EQ(det_poly(oracle_pencil()), parse(kDet3, 2, 1));
}

TEST(Pencil, DeterminantCap) {
  EXPECT_THROW(det_poly(arrowhead_pencil(12)), LimitError);
  EXPECT_EQ(det_poly(arrowhead_pencil(12), 13), ball_poly(12));
}

TEST(Pencil, EmptyPencil) {
  const Pencil p = Pencil::from_exact(2, 0, {CQMatrix(0, 0), CQMatrix(0, 0)});
  EXPECT_EQ(det_poly(p), Poly::constant(2, Quad(1)));
}

TEST(Pencil, VerifyIdentityModes) {
  const Pencil bw = bw5_pencil();
  const IdentityVerdict ok = verify_identity(bw, ball_poly(5), 2, 50, 1);
  EXPECT_TRUE(ok.pass);
  EXPECT_EQ(ok.mode, IdentityVerdict::Mode::kProved);
  const IdentityVerdict wrong = verify_identity(bw, hyperboloid_poly(5), 2, 50, 1);
  EXPECT_FALSE(wrong.pass);
  EXPECT_TRUE(wrong.mismatch_point.has_value());
  const IdentityVerdict too_high = verify_identity(bw, ball_poly(5), 3, 50, 1);
  EXPECT_FALSE(too_high.pass);
  EXPECT_EQ(too_high.mode, IdentityVerdict::Mode::kProved);

  std::vector<Eigen::MatrixXcd> ms;
  for (const auto& m : bw.exact_matrices()) ms.push_back(to_eigen(m));
  const Pencil numeric = Pencil::from_numeric(5, 4, ms);
  const IdentityVerdict f = verify_identity(numeric, ball_poly(5), 2, 50, 1);
  EXPECT_TRUE(f.pass);
  EXPECT_EQ(f.mode, IdentityVerdict::Mode::kSampled);
  EXPECT_LE(f.max_rel_error, kTauId);
}

TEST(Pencil, Membership) {
  const Pencil p = ball3_pencil(1);
  const std::vector<Quad> inside{Quad(mpq_class(1, 2)), Quad(0), Quad(mpq_class(1, 2))};
  const std::vector<Quad> boundary{Quad(0), Quad(1), Quad(0)};
  const std::vector<Quad> outside{Quad(1), Quad(1), Quad(0)};
  EXPECT_TRUE(membership(p, inside));
  EXPECT_TRUE(membership(p, boundary));
  EXPECT_FALSE(membership(p, outside));
}

// The spectrahedron of a pencil coincides with the rigidly convex set of its
// determinant.
TEST(Pencil, MembershipAgreesWithDeterminant) {
  Rng rng(17);
  const Pencil p = testing::random_exact_pencil(2, 3, rng);
  const Poly det = det_poly(p);
  for (int t = 0; t < 40; ++t) {
    const std::vector<Quad> a = rng.small_rational_point(2, 6, 5);
    EXPECT_EQ(membership(p, a), rigid_membership(det, a));
  }
}

TEST(Pencil, EigenRootCorrespondence) {
  Rng rng(23);
  const Pencil p = testing::random_numeric_pencil(3, 4, rng);
  for (int t = 0; t < 10; ++t) {
    const auto a = rng.sphere_direction(3);
    const EigenRootReport r = eigen_root_check(p, a);
    EXPECT_TRUE(r.pass) << r.max_mismatch;
    EXPECT_EQ(r.zero_eigenvalues, r.degree_drop);
  }
  // A rank one generator: three zero eigenvalues along the axis.
  const Pencil low = Pencil::from_exact(1, 4, {[] {
                                          CQMatrix m(4, 4);
                                          m(0, 0) = 2;
                                          return m;
                                        }()});
  const std::vector<double> axis{1.0};
  const EigenRootReport r = eigen_root_check(low, axis);
  EXPECT_TRUE(r.pass);
  EXPECT_EQ(r.zero_eigenvalues, 3);
  EXPECT_EQ(r.degree_drop, 3);
}

TEST(Pencil, DoublingSquaresTheDeterminant) {
  const Pencil p = ball3_pencil(1);
  const Pencil d = double_to_symmetric(p);
  EXPECT_EQ(d.size(), 4);
  EXPECT_EQ(d.symmetry(), Symmetry::kSymmetric);
  EXPECT_EQ(det_poly(d), ball_poly(3).pow(2));
}

TEST(Pencil, MakeMonic) {
  CQMatrix m0(2, 2);
  m0(0, 0) = 4;
  m0(1, 1) = 2;
  CQMatrix m1(2, 2);
  m1(0, 1) = 1;
  m1(1, 0) = 1;
  const Pencil p = make_monic(m0, {m1}, 1);
  ASSERT_TRUE(p.is_exact());
  // det(M0 + x M1) / det(M0) = 1 - x^2 / 8.
  EXPECT_EQ(det_poly(p), parse("1 - x0^2/8", 1));
  CQMatrix indefinite = CQMatrix::identity(2);
  indefinite(1, 1) = -1;
  EXPECT_THROW(make_monic(indefinite, {m1}, 1), PreconditionError);
}

}  // namespace
}  // namespace rzpencil

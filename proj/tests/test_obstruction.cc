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

#include <algorithm>

#include "oracles/oracles.inc"
#include "rzpencil/catalog.h"
#include "rzpencil/error.h"
#include "rzpencil/obstruction.h"
#include "rzpencil/realzero.h"
#include "test_util.h"

namespace rzpencil {
namespace {

long alpha_tail(long k, long d) {
  const long e = d / 2;
  return binomial2(e + 1) + e * (k - e) + (d % 2);
}

TEST(Alpha, Oracles) {
  for (const auto& o : kAlpha) EXPECT_EQ(meshulam_alpha(o.k, o.d), o.value) << o.k << "," << o.d;
  EXPECT_THROW(meshulam_alpha(3, 4), PreconditionError);
  EXPECT_THROW(meshulam_alpha(3, 0), PreconditionError);
}

TEST(Alpha, MonotoneAndContinuous) {
  for (long d = 1; d <= 10; ++d) {
    EXPECT_EQ(meshulam_alpha(d, d), binomial2(d + 1));
    const long e = d / 2;
    // Both branches meet at the (possibly fractional) breakpoint.
    const mpq_class kstar = d % 2 == 0 ? mpq_class(5 * e + 1) / 2 : mpq_class(5 * (e + 1)) / 2;
    if (e > 0) {
      EXPECT_EQ(mpq_class(binomial2(e + 1) + d % 2) + e * (kstar - e), mpq_class(binomial2(d + 1)))
          << d;
    }
    long prev = 0;
    for (long k = d; k <= 60; ++k) {
      const long a = meshulam_alpha(k, d);
      EXPECT_GE(a, prev) << k << "," << d;
      EXPECT_EQ(a, std::max(binomial2(d + 1), alpha_tail(k, d))) << k << "," << d;
      EXPECT_LE(a, binomial2(k + 1));
      prev = a;
    }
  }
}

TEST(SizeBound, Oracles) {
  for (const auto& o : kBounds) {
    const auto b = min_size_bound(o.n, o.d, o.symmetric ? RepKind::kSymmetric : RepKind::kHermitian);
    if (o.ceiling < 0) {
      EXPECT_FALSE(b.has_value()) << o.n << "," << o.d;
      continue;
    }
    ASSERT_TRUE(b.has_value()) << o.n << "," << o.d;
    EXPECT_EQ(b->value, mpq_class(o.value));
    EXPECT_EQ(b->ceiling, o.ceiling);
  }
}

TEST(SizeBound, QuadraticAnchors) {
  for (long n = 4; n <= 12; ++n) EXPECT_EQ(min_size_bound(n, 2, RepKind::kSymmetric)->ceiling, n);
  for (long n = 11; n <= 20; ++n) {
    const auto b = min_size_bound(n, 2, RepKind::kHermitian);
    ASSERT_TRUE(b.has_value());
    EXPECT_EQ(b->value, mpq_class(n + 1) / 4);
  }
  EXPECT_FALSE(min_size_bound(5, 1, RepKind::kSymmetric).has_value());
  EXPECT_THROW(min_size_bound(0, 2, RepKind::kSymmetric), PreconditionError);
}

TEST(SizeBound, CeilingIsTight) {
  for (long d = 1; d <= 6; ++d) {
    for (long n = 1; n <= 120; ++n) {
      for (RepKind kind : {RepKind::kSymmetric, RepKind::kHermitian}) {
        const auto b = min_size_bound(n, d, kind);
        if (!b) continue;
        EXPECT_GE(mpq_class(b->ceiling), b->value);
        EXPECT_LT(mpq_class(b->ceiling - 1), b->value);
      }
    }
  }
}

TEST(Lines, InvariantDirection) {
  EXPECT_FALSE(invariant_direction(ball_poly(3)).has_value());
  const Poly cyl = testing::parse("1 - x0^2 - x1^2", 3);
  const auto dir = invariant_direction(cyl);
  ASSERT_TRUE(dir.has_value());
  EXPECT_TRUE((*dir)[0].is_zero());
  EXPECT_TRUE((*dir)[1].is_zero());
  EXPECT_FALSE((*dir)[2].is_zero());
  // Invariant along x0 - x1.
  const auto dir2 = invariant_direction(testing::parse("1 + x0 + x1", 2));
  ASSERT_TRUE(dir2.has_value());
  EXPECT_EQ((*dir2)[0], -(*dir2)[1]);
}

TEST(Cone, Direction) {
  const auto a = cone_direction(hyperboloid_poly(5), 16, 1);
  ASSERT_TRUE(a.has_value());
  const UniPoly<Quad> u = restrict(hyperboloid_poly(5), *a);
  EXPECT_EQ(u.degree(), 2);
  EXPECT_EQ(SturmSequence(u).count_above(Quad(0)), 0);
  EXPECT_FALSE(cone_direction(ball_poly(3), 64, 1).has_value());
}

void expect_status(const ObstructionReport& r, const char* name, HypothesisStatus s) {
  const Hypothesis* h = r.find(name);
  ASSERT_NE(h, nullptr) << name;
  EXPECT_EQ(h->status, s) << name << ": " << h->detail;
}

bool has_tag(const ObstructionReport& r, RepKind kind, const std::string& tag) {
  return std::any_of(r.conclusions.begin(), r.conclusions.end(), [&](const Conclusion& c) {
    return c.kind == kind && c.claim == Claim::kNoneExists && c.theorem == tag;
  });
}

TEST(Report, ShiftedBallThree) {
  const ObstructionReport r = nonexistence_report(shifted_ball_poly(3));
  EXPECT_EQ(r.n, 4);
  EXPECT_EQ(r.d, 2);
  expect_status(r, "real-zero", HypothesisStatus::kVerifiedExact);
  expect_status(r, "no-full-line", HypothesisStatus::kVerifiedExact);
  expect_status(r, "full-dimensional-cone", HypothesisStatus::kVerifiedExact);
  expect_status(r, "base-no-full-line", HypothesisStatus::kVerifiedExact);
  expect_status(r, "degree-mod-8", HypothesisStatus::kVerifiedExact);
  expect_status(r, "simple-zeros", HypothesisStatus::kVerifiedSampled);
  EXPECT_TRUE(r.claims_none(RepKind::kSymmetric));
  EXPECT_FALSE(r.claims_none(RepKind::kHermitian));
  EXPECT_TRUE(has_tag(r, RepKind::kSymmetric, "cone-size-count"));
  EXPECT_TRUE(has_tag(r, RepKind::kSymmetric, "simple-spectrum-crossing"));
  // ptilde_3 has a 2 x 2 hermitian representation, consistent with the report.
  const CatalogEntry ex = catalog_lookup("ex33");
  EXPECT_TRUE(contradiction_flags(r, *ex.pencil, 1, true).empty());
}

TEST(Report, ShiftedBallFour) {
  const ObstructionReport r = nonexistence_report(shifted_ball_poly(4));
  EXPECT_TRUE(r.claims_none(RepKind::kSymmetric));
  EXPECT_TRUE(r.claims_none(RepKind::kHermitian));
  EXPECT_TRUE(has_tag(r, RepKind::kHermitian, "cone-size-count"));
  EXPECT_TRUE(has_tag(r, RepKind::kHermitian, "simple-spectrum-crossing"));
  for (const auto& c : r.conclusions) {
    if (c.theorem == "cone-size-count") EXPECT_TRUE(c.note.empty());
    if (c.theorem == "simple-spectrum-crossing") EXPECT_FALSE(c.note.empty());
  }
  const CatalogEntry ex = catalog_lookup("ex58");
  EXPECT_TRUE(verify_identity(*ex.pencil, *ex.target, ex.power, 200, 1).pass);
  EXPECT_TRUE(contradiction_flags(r, *ex.pencil, ex.power, true).empty());
  // The same pencil read as a representation of ptilde_4 itself is flagged.
  EXPECT_FALSE(contradiction_flags(r, *ex.pencil, 1, true).empty());
  EXPECT_TRUE(contradiction_flags(r, *ex.pencil, 1, false).empty());
}

TEST(Report, Hyperboloid) {
  const ObstructionReport r = nonexistence_report(hyperboloid_poly(5));
  expect_status(r, "full-dimensional-cone", HypothesisStatus::kVerifiedExact);
  ASSERT_TRUE(r.cone_direction.has_value());
  EXPECT_TRUE(r.claims_none(RepKind::kHermitian));
  EXPECT_TRUE(has_tag(r, RepKind::kHermitian, "cone-size-count"));
  EXPECT_EQ(r.find("simple-zeros"), nullptr);
}

TEST(Report, BallTwoHasNoConclusion) {
  const ObstructionReport r = nonexistence_report(ball_poly(2));
  expect_status(r, "full-dimensional-cone", HypothesisStatus::kNotWitnessed);
  ASSERT_EQ(r.conclusions.size(), 2u);
  for (const auto& c : r.conclusions) {
    EXPECT_EQ(c.claim, Claim::kNoConclusion);
    EXPECT_EQ(c.theorem, "no-applicable-theorem");
  }
}

TEST(Report, AssertedConeIsMarked) {
  HypothesisFlags flags;
  flags.assert_cone = true;
  flags.samples = 16;
  const ObstructionReport r = nonexistence_report(ball_poly(4), flags);
  expect_status(r, "full-dimensional-cone", HypothesisStatus::kAssertedByCaller);
  EXPECT_TRUE(r.claims_none(RepKind::kSymmetric));
  for (const auto& c : r.conclusions) {
    if (c.theorem == "cone-size-count") EXPECT_FALSE(c.note.empty());
  }
}

TEST(Report, LineFails) {
  HypothesisFlags flags;
  flags.assert_no_line = true;
  const ObstructionReport r = nonexistence_report(testing::parse("1 - x0^2 - x1^2", 5), flags);
  expect_status(r, "no-full-line", HypothesisStatus::kFailed);
  EXPECT_FALSE(r.claims_none(RepKind::kSymmetric));
  EXPECT_FALSE(r.claims_none(RepKind::kHermitian));
}

TEST(Report, RejectsNonRealZero) {
  EXPECT_THROW(nonexistence_report(testing::parse("1 - x0^4 - x1^4", 2)), DomainError);
}

TEST(Compact, MatchesDisplay) {
  const Poly q = compact_counterexample(shifted_ball_poly(4), Quad(2));
  EXPECT_EQ(q, testing::parse(kCompactR2, 5));
  EXPECT_EQ(q.constant_term(), Quad(1));
  EXPECT_EQ(q.degree(), 4);
  EXPECT_THROW(compact_counterexample(shifted_ball_poly(4), Quad(1)), PreconditionError);
  EXPECT_THROW(compact_counterexample(shifted_ball_poly(4), Quad::sqrt_of(3)), PreconditionError);
  EXPECT_THROW(compact_counterexample(ball_poly(3), Quad(2)), PreconditionError);
}

TEST(Compact, RealZeroAndBounded) {
  for (const Quad r : {Quad(mpq_class(3, 2)), Quad(2), Quad(10)}) {
    const Poly q = compact_counterexample(shifted_ball_poly(4), r);
    const CompactCheck c = check_compact_counterexample(q, r, 64, 5);
    EXPECT_TRUE(c.rz.is_rz) << r.to_string();
    EXPECT_TRUE(c.bounded) << r.to_string() << " " << c.max_distance << " " << c.radius;
    EXPECT_GT(c.directions, 64);
  }
}

}  // namespace
}  // namespace rzpencil

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

#include "rzpencil/catalog.h"
#include "rzpencil/clifford.h"
#include "rzpencil/error.h"
#include "rzpencil/reduction.h"
#include "test_util.h"

namespace rzpencil {
namespace {

// Block diagonal padding with `extra` zero rows and columns.
Pencil pad(const Pencil& p, int extra) {
  const int k = p.size() + extra;
  std::vector<CQMatrix> ms;
  for (const auto& m : p.exact_matrices()) {
    CQMatrix big(k, k);
    for (int i = 0; i < p.size(); ++i) {
      for (int j = 0; j < p.size(); ++j) big(i, j) = m(i, j);
    }
    ms.push_back(std::move(big));
  }
  return Pencil::from_exact(p.nvars(), k, std::move(ms));
}

TEST(Reduction, CommonKernelStaysExactOnCoordinates) {
  const Pencil p = pad(ball3_pencil(1), 2);
  const ReductionResult r = common_kernel_reduce(p);
  EXPECT_EQ(r.removed, 2);
  ASSERT_TRUE(r.reduced.is_exact());
  EXPECT_EQ(r.reduced, ball3_pencil(1));
}

TEST(Reduction, CommonKernelAfterScrambling) {
  Rng rng(31);
  const Pencil p = pad(bw5_pencil(), 3);
  const Eigen::MatrixXcd u = rng.unitary(p.size());
  const Pencil scrambled = p.conjugated(u);
  const ReductionResult r = common_kernel_reduce(scrambled, 9);
  EXPECT_EQ(r.reduced.size(), 4);
  EXPECT_LE(r.max_off_block, kTauBlock);
  EXPECT_LE(r.max_det_error, kTauId);
  const EquivalenceVerdict v = unitary_equiv_test(r.reduced, bw5_pencil(), 4, 100, 9);
  EXPECT_EQ(v.verdict, Equivalence::kEquivalent) << v.reason;
}

TEST(Reduction, NothingToRemove) {
  const ReductionResult r = common_kernel_reduce(arrowhead_pencil(4));
  EXPECT_EQ(r.removed, 0);
  EXPECT_EQ(r.reduced, arrowhead_pencil(4));
}

TEST(Reduction, ConeSplitsShiftedBall) {
  const Pencil base = shifted_ball3_pencil();
  std::vector<CQMatrix> ms;
  const int k = 4;
  for (const auto& m : base.exact_matrices()) {
    CQMatrix big(k, k);
    for (int i = 0; i < 2; ++i) {
      for (int j = 0; j < 2; ++j) big(i, j) = m(i, j);
    }
    ms.push_back(std::move(big));
  }
  ms[0](2, 2) = CQuad(1);
  ms[1](3, 3) = CQuad(mpq_class(1, 2));
  ms[1](2, 2) = CQuad(-1);
  ms[0](3, 3) = CQuad(mpq_class(-1, 3));
  // Full degree determinant: nothing to split off.
  const Pencil padded = Pencil::from_exact(4, k, ms);
  EXPECT_EQ(determinant_degree(padded), 4);
  EXPECT_EQ(cone_reduce(padded).reduced.size(), 4);

  Rng rng(5);
  const Pencil zero_padded = pad(base, 2).conjugated(rng.unitary(4));
  const ReductionResult r = cone_reduce(zero_padded);
  EXPECT_EQ(r.reduced.size(), 2);
  ASSERT_TRUE(r.witness.has_value());
}

TEST(Reduction, ConeNotWitnessedForCompactSets) {
  // Combinations of the arrowhead generators have eigenvalues +-|a|, so
  // none is PSD of rank 2.
  ConeOptions o;
  o.samples = 32;
  EXPECT_THROW(cone_reduce(arrowhead_pencil(3), o), NotWitnessedError);
}

TEST(Reduction, RankProfile) {
  const RankProfile r = rank_profile(bw5_pencil(), 10, 3);
  EXPECT_EQ(r.max_rank, 4);
  EXPECT_TRUE(r.independent);
  EXPECT_EQ(r.span_dimension, 5);
  ASSERT_TRUE(r.det_degree.has_value());
  EXPECT_EQ(*r.det_degree, 4);
  EXPECT_TRUE(r.matches_degree);
  const RankProfile a = rank_profile(arrowhead_pencil(4), 10, 3);
  EXPECT_EQ(a.max_rank, 2);
  EXPECT_EQ(*a.det_degree, 2);
  for (int g : a.generator_ranks) EXPECT_EQ(g, 2);
}

}  // namespace
}  // namespace rzpencil

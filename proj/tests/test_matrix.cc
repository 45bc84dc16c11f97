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

#include "rzpencil/matrix.h"
#include "rzpencil/random.h"

namespace rzpencil {
namespace {

CQMatrix make(int k, std::initializer_list<int> entries) {
  CQMatrix m(k, k);
  auto it = entries.begin();
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) m(i, j) = CQuad(*it++);
  }
  return m;
}

TEST(Matrix, DeterminantRankNullspace) {
  const CQMatrix m = make(3, {1, 2, 3, 4, 5, 6, 7, 8, 9});
  EXPECT_TRUE(determinant(m).is_zero());
  EXPECT_EQ(rank(m), 2);
  const auto kernel = nullspace(m);
  ASSERT_EQ(kernel.size(), 1u);
  CQMatrix v(3, 1);
  for (int i = 0; i < 3; ++i) v(i, 0) = kernel[0][i];
  EXPECT_TRUE((m * v).is_zero());
  EXPECT_EQ(determinant(make(2, {2, 1, 1, 3})), CQuad(5));
}

TEST(Matrix, ExactSemidefiniteness) {
  EXPECT_TRUE(is_psd_exact(make(2, {1, 1, 1, 1})));
  EXPECT_FALSE(is_pd_exact(make(2, {1, 1, 1, 1})));
  EXPECT_TRUE(is_pd_exact(make(2, {2, 1, 1, 2})));
  EXPECT_FALSE(is_psd_exact(make(2, {1, 2, 2, 1})));
  EXPECT_FALSE(is_psd_exact(make(2, {0, 1, 1, 0})));
  EXPECT_TRUE(is_psd_exact(make(3, {0, 0, 0, 0, 1, 0, 0, 0, 0})));
  CQMatrix h(2, 2);
  h(0, 0) = CQuad(1);
  h(1, 1) = CQuad(1);
  h(0, 1) = CQuad::i();
  h(1, 0) = -CQuad::i();
  EXPECT_TRUE(is_psd_exact(h));
  EXPECT_FALSE(is_pd_exact(h));
}

TEST(Matrix, NumericHelpers) {
  Rng rng(3);
  const Eigen::MatrixXcd h = rng.hermitian(4);
  const Eigen::MatrixXcd psd = h * h;
  EXPECT_TRUE(is_psd_numeric(psd, 1e-9));
  const auto root = psd_sqrt(psd, 1e-9);
  ASSERT_TRUE(root.has_value());
  EXPECT_LT(max_norm(*root * *root - psd), 1e-9 * max_norm(psd));
  Eigen::MatrixXcd low = Eigen::MatrixXcd::Zero(4, 4);
  low.col(0) = h.col(0);
  low.col(1) = h.col(0) * 2.0;
  EXPECT_EQ(numeric_rank(low, 1e-9), 1);
  EXPECT_EQ(numeric_kernel(low, 1e-9).cols(), 3);
  const Eigen::MatrixXcd u = rng.unitary(5);
  EXPECT_LT(max_norm(u.adjoint() * u - Eigen::MatrixXcd::Identity(5, 5)), 1e-12);
  const Eigen::MatrixXcd basis = h.leftCols(2);
  const Eigen::MatrixXcd q = complete_to_unitary(basis);
  EXPECT_LT(max_norm(q.adjoint() * q - Eigen::MatrixXcd::Identity(4, 4)), 1e-12);
  EXPECT_LT(max_norm(q.rightCols(2).adjoint() * basis), 1e-12);
}

}  // namespace
}  // namespace rzpencil

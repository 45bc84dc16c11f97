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

#include <sstream>

#include "oracles/oracles.inc"
#include "rzpencil/polynomial.h"
#include "rzpencil/univariate.h"

namespace rzpencil {
namespace {

UniPoly<Quad> from_list(const std::string& text) {
  std::vector<Quad> c;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) c.push_back(parse_real_constant(item));
  return UniPoly<Quad>(c);
}

UniPoly<Quad> linear(int root) { return UniPoly<Quad>({Quad(-root), Quad(1)}); }

TEST(Sturm, DistinctRootCountsMatchOracle) {
  for (const auto& o : kRootCounts) {
    const UniPoly<Quad> u = from_list(o.coeffs);
    EXPECT_EQ(SturmSequence(u).count_all(), o.distinct) << o.coeffs;
  }
}

TEST(Sturm, IntervalCounts) {
  const UniPoly<Quad> u = linear(-2) * linear(1) * linear(3);
  const SturmSequence s(u);
  EXPECT_EQ(s.count(Quad(-2), Quad(3)), 2);  // (-2, 3]
  EXPECT_EQ(s.count(Quad(-3), Quad(1)), 2);
  EXPECT_EQ(s.count_above(Quad(0)), 2);
  EXPECT_EQ(s.count_above(Quad(3)), 0);
}

TEST(Univariate, GcdAndSquarefree) {
  const UniPoly<Quad> a = linear(1) * linear(1) * linear(2);
  const UniPoly<Quad> b = linear(1) * linear(5);
  EXPECT_EQ(gcd(a, b), linear(1));
  const auto parts = squarefree_decomposition(a);
  ASSERT_GE(parts.size(), 2u);
  EXPECT_EQ(parts[0].monic(), linear(2));
  EXPECT_EQ(parts[1].monic(), linear(1));
}

TEST(Univariate, DivisionIdentity) {
  const UniPoly<Quad> a = from_list("1,2,3,4,5");
  const UniPoly<Quad> d = from_list("-1,0,2");
  const auto [q, r] = a.divmod(d);
  EXPECT_EQ(q * d + r, a);
  EXPECT_LT(r.degree(), d.degree());
}

TEST(Univariate, IsolatedRootsAreAccurate) {
  const UniPoly<Quad> u = from_list("1,0,-10,0,1");  // roots +-sqrt(2) +- sqrt(3)
  const auto roots = isolate_real_roots(u);
  ASSERT_EQ(roots.size(), 4u);
  const double s2 = std::sqrt(2.0), s3 = std::sqrt(3.0);
  const double expected[] = {-s2 - s3, s2 - s3, s3 - s2, s2 + s3};
  for (int i = 0; i < 4; ++i) EXPECT_NEAR(roots[i], expected[i], 1e-12);
}

}  // namespace
}  // namespace rzpencil

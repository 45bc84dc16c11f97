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
#include "rzpencil/error.h"
#include "rzpencil/io.h"
#include "rzpencil/random.h"
#include "test_util.h"

namespace rzpencil {
namespace {

TEST(PolyIo, RoundTrip) {
  for (const Poly& p : {ball_poly(3), shifted_ball_poly(4), hyperboloid_poly(5),
                        testing::parse("1 + x0/3 - 7*x0*x1^2/11", 2)}) {
    for (int base : {0, 1}) {
      const PolyFile f = read_poly(write_poly(p, base));
      EXPECT_EQ(f.poly, p);
      EXPECT_EQ(f.base, base);
      EXPECT_EQ(f.poly.domain(), p.domain());
    }
  }
}

TEST(PolyIo, HeaderChecks) {
  EXPECT_NO_THROW(read_poly("poly nvars=2 domain=rational\n1 - x0*x1\n"));
  EXPECT_NO_THROW(read_poly("poly nvars=2 domain=float\n1 - x0*x1\n"));
  EXPECT_EQ(read_poly("poly nvars=2 domain=rational base=1\n1 - x1*x2\n").poly,
            testing::parse("1 - x0*x1", 2));
  EXPECT_THROW(read_poly("poly nvars=2 domain=sqrt:3\n1 + sqrt(2)*x0\n"), FormatError);
  EXPECT_THROW(read_poly("poly nvars=2 domain=rational\n1 + sqrt(2)*x0\n"), FormatError);
  EXPECT_THROW(read_poly("pencil nvars=2 domain=rational\n1\n"), FormatError);
  EXPECT_THROW(read_poly("poly domain=rational\n1\n"), FormatError);
  EXPECT_THROW(read_poly("poly nvars=1 domain=rational\n1 + x3\n"), FormatError);
  EXPECT_THROW(read_poly(""), FormatError);
}

TEST(PencilIo, ExactRoundTrip) {
  for (const Pencil& p : {ball3_pencil(1), bw5_pencil(), hyperboloid5_pencil(),
                          arrowhead_pencil(4), shifted_ball3_pencil()}) {
    const Pencil back = read_pencil(write_pencil(p));
    EXPECT_EQ(back, p);
    EXPECT_EQ(back.symmetry(), p.symmetry());
  }
}

TEST(PencilIo, FloatRoundTripIsBitExact) {
  Rng rng(3);
  const Pencil p = testing::random_numeric_pencil(3, 4, rng);
  const Pencil back = read_pencil(write_pencil(p));
  ASSERT_FALSE(back.is_exact());
  for (int i = 0; i < 3; ++i) EXPECT_TRUE(back.matrices()[i] == p.matrices()[i]);
}

TEST(PencilIo, Errors) {
  const std::string header = "pencil nvars=1 size=2 domain=rational symmetry=hermitian\n";
  EXPECT_NO_THROW(read_pencil(header + "1 2\n2 3\n"));
  // Not hermitian.
  EXPECT_THROW(read_pencil(header + "1 2\n3 3\n"), FormatError);
  // Too few rows, too many entries.
  EXPECT_THROW(read_pencil(header + "1 2\n"), FormatError);
  EXPECT_THROW(read_pencil(header + "1 2 3\n2 3\n"), FormatError);
  EXPECT_THROW(read_pencil(header + "1 x\n2 3\n"), FormatError);
  EXPECT_THROW(read_pencil("pencil nvars=1 size=2 domain=rational symmetry=symmetric\n"
                           "1 i\n-i 3\n"),
               FormatError);
}

TEST(Transcript, RoundTrip) {
  Transcript t;
  t.add("verdict", "pass");
  t.add("points", 126L);
  t.add("ok", true);
  t.add("residual", 0.1);
  t.add_seed(42);
  const auto entries = parse_transcript(t.str());
  ASSERT_EQ(entries.size(), 5u);
  EXPECT_EQ(transcript_value(entries, "points"), "126");
  EXPECT_EQ(transcript_value(entries, "ok"), "true");
  EXPECT_EQ(std::stod(transcript_value(entries, "residual")), 0.1);
  EXPECT_EQ(transcript_value(entries, "seed"), "42");
  EXPECT_EQ(transcript_value(entries, "missing"), "");
  EXPECT_EQ(transcript_value(parse_transcript("# mode: proved\nnoise\n"), "mode"), "proved");
}

TEST(Transcript, DescribesVerdicts) {
  Transcript t;
  const IdentityVerdict v = verify_identity(ball3_pencil(1), ball_poly(3), 1, 50, 9);
  describe(t, v);
  EXPECT_EQ(transcript_value(t.entries(), "identity"), "pass");
  EXPECT_EQ(transcript_value(t.entries(), "mode"), "proved");
  EXPECT_EQ(transcript_value(t.entries(), "seed"), "9");
}

TEST(Files, MissingFile) {
  EXPECT_THROW(read_file("/nonexistent/definitely/missing.txt"), FormatError);
}

}  // namespace
}  // namespace rzpencil

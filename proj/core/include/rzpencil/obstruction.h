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

#pragma once

// Size bounds for determinantal representations, nonexistence reports and
// compact counterexamples.

#include <cstdint>
#include <gmpxx.h>
#include <optional>
#include <string>
#include <vector>

#include "rzpencil/pencil.h"
#include "rzpencil/polynomial.h"
#include "rzpencil/realzero.h"

namespace rzpencil {

enum class RepKind { kSymmetric, kHermitian };
std::string to_string(RepKind kind);
RepKind parse_rep_kind(std::string_view text);

// Largest dimension of a space of real symmetric k x k matrices of rank at
// most d. Requires 1 <= d <= k.
long meshulam_alpha(long k, long d);

long binomial2(long m);  // m (m - 1) / 2

struct SizeBound {
  mpq_class value;  // right-hand side of the bound
  long ceiling = 0;
};

// Lower bound on the size of any representation with a line-free
// spectrahedron; none outside the range where the bound applies.
std::optional<SizeBound> min_size_bound(long n, long d, RepKind kind);

enum class HypothesisStatus {
  kVerifiedExact,
  kVerifiedSampled,
  kAssertedByCaller,
  kFailed,
  kNotWitnessed,
};
std::string to_string(HypothesisStatus s);
bool holds(HypothesisStatus s);

struct Hypothesis {
  std::string name;
  HypothesisStatus status = HypothesisStatus::kNotWitnessed;
  std::string detail;
};

enum class Claim { kNoneExists, kSizeLowerBound, kNoConclusion };
std::string to_string(Claim c);

struct Conclusion {
  RepKind kind = RepKind::kHermitian;
  Claim claim = Claim::kNoConclusion;
  long bound = 0;  // for kSizeLowerBound
  std::string theorem;
  std::vector<std::string> hypotheses;
  std::string note;
};

struct ObstructionReport {
  int n = 0;
  int d = 0;
  std::uint64_t seed = 0;
  std::vector<Hypothesis> hypotheses;
  std::vector<Conclusion> conclusions;
  std::optional<std::vector<Quad>> cone_direction;
  std::optional<std::vector<CQuad>> line_direction;

  const Hypothesis* find(std::string_view name) const;
  bool claims_none(RepKind kind) const;
  std::optional<long> size_lower_bound(RepKind kind) const;
};

struct HypothesisFlags {
  bool assert_no_line = false;
  bool assert_cone = false;
  int samples = kDefaultRzSamples;
  std::uint64_t seed = kDefaultSeed;
};

// Line-free test: S(p) contains a line exactly when p is invariant along a
// direction, i.e. its partial derivatives are linearly dependent. Returns
// such a direction, or none.
std::optional<std::vector<CQuad>> invariant_direction(const Poly& p);

// A direction a with deg p_a = deg p and no root of p_a in [0, inf), found
// with exact root counting; it lies in the interior of the recession cone.
std::optional<std::vector<Quad>> cone_direction(const Poly& p, int samples, std::uint64_t seed);

// Throws DomainError when p is not real zero.
ObstructionReport nonexistence_report(const Poly& p, const HypothesisFlags& flags = {});

// Claims of `report` contradicted by a verified representation of p^power.
std::vector<std::string> contradiction_flags(const ObstructionReport& report,
                                             const Pencil& representation, int power,
                                             bool verified);

// ptilde * r/(r-1) * (1 - ((x0+1)^2 + x1^2 + ... + xn^2)/r).
Poly compact_counterexample(const Poly& ptilde, const Quad& r);

struct CompactCheck {
  RzVerdict rz;
  bool bounded = false;
  double max_distance = 0.0;  // from (-1, 0, ..., 0) over sampled boundary points
  double radius = 0.0;        // 2 sqrt(r) + 1
  int directions = 0;
  std::string note;
};

CompactCheck check_compact_counterexample(const Poly& q, const Quad& r, int samples,
                                          std::uint64_t seed);

}  // namespace rzpencil

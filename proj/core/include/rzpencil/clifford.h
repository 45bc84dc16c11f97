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

// Brauer-Weyl matrices, pencils for quadratic real zero polynomials,
// defining relations and unitary equivalence of pencils.

#include <Eigen/Dense>
#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rzpencil/pencil.h"
#include "rzpencil/realzero.h"

namespace rzpencil {

inline constexpr double kTauEq = 1e-8;
inline constexpr double kTauRelation = 1e-8;

enum class Variant { kStandard, kNegated };
std::string to_string(Variant v);
Variant parse_variant(std::string_view text);

struct CliffordGenerators {
  int n = 0;
  int size = 1;  // 2^floor(n/2)
  Variant variant = Variant::kStandard;
  std::vector<CQMatrix> sigma;
};

// Hermitian, pairwise anticommuting square roots of I. For n = 2m the
// generators are P in slot s (s = 0..m-1) followed by Q in slot s, where
// slot s means 1'^(s) (x) P (x) 1^(m-s-1) read right to left; odd n appends
// 1' (x) ... (x) 1'. Relations are checked exactly on construction.
CliffordGenerators brauer_weyl(int n, Variant variant = Variant::kStandard);
bool satisfies_clifford_relations(const std::vector<CQMatrix>& sigma);

CQMatrix kron(const CQMatrix& a, const CQMatrix& b);

// Size 2^floor(n/2) and power 2^(floor(n/2)-1); requires n >= 2.
int quadratic_pencil_size(int n);
int quadratic_pencil_power(int n);

// M_j = sum_i C_ij Sigma_i + b_j / 2 I. Exact when C is exact.
Pencil quadratic_pencil(const QuadraticData& q, Variant variant = Variant::kStandard);

struct QuadraticConstruction {
  Pencil pencil;
  int power = 1;
  IdentityVerdict verdict;
};

QuadraticConstruction construct_quadratic(const Poly& p, Variant variant, int trials,
                                          std::uint64_t seed);

struct RelationsVerdict {
  bool pass = false;
  bool exact = false;
  int directions = 0;
  std::uint64_t seed = 0;
  double max_residual = 0.0;
  std::optional<std::vector<Quad>> failing_direction;
};

// Checks p^(-W, a) = 0 for W = sum a_i M_i at sampled directions a.
RelationsVerdict relations_check(const Pencil& pencil, const Poly& p, int trials,
                                 std::uint64_t seed);

enum class Equivalence { kEquivalent, kInequivalent, kInconclusive };
std::string to_string(Equivalence e);

struct EquivalenceVerdict {
  Equivalence verdict = Equivalence::kInconclusive;
  std::string reason;
  // Q with Q^* M_i^(1) Q = M_i^(2).
  std::optional<Eigen::MatrixXcd> unitary;
  double residual = 0.0;
  std::vector<int> witness_word;  // 0-based generator indices
  std::complex<double> trace_first{0.0, 0.0};
  std::complex<double> trace_second{0.0, 0.0};
  long words_checked = 0;
};

// Trace words up to `word_length` (all of them when there are at most 20000,
// otherwise `trials` random words per length), then an explicit intertwining
// unitary.
EquivalenceVerdict unitary_equiv_test(const Pencil& first, const Pencil& second,
                                      int word_length, int trials, std::uint64_t seed);

}  // namespace rzpencil

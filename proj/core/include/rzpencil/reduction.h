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

// Size reductions of monic pencils: common kernels and cone splitting.

#include <Eigen/Dense>
#include <cstdint>
#include <optional>
#include <vector>

#include "rzpencil/pencil.h"

namespace rzpencil {

inline constexpr double kTauBlock = 1e-8;
inline constexpr int kConeSamples = 256;

struct ReductionResult {
  Pencil reduced;
  // Unitary Q; the reduced matrices are leading blocks of Q^* M_i Q.
  Eigen::MatrixXcd q;
  int removed = 0;
  // For cone reduction: the direction whose combination was PSD of rank d.
  std::optional<std::vector<double>> witness;
  std::string witness_source;  // "hint", "axis" or "sample"
  double max_off_block = 0.0;
  double max_det_error = 0.0;
};

// Removes the common kernel of M_1..M_n. Exact kernel dimension in exact
// domains; when the kernel is spanned by coordinate vectors the reduced
// pencil stays exact.
ReductionResult common_kernel_reduce(const Pencil& p, std::uint64_t seed = kDefaultSeed);

struct ConeOptions {
  std::vector<std::vector<double>> hints;
  int samples = kConeSamples;
  std::uint64_t seed = kDefaultSeed;
};

// Splits off a zero block using a direction a with sum a_i M_i PSD of rank
// d = deg det P. Throws NotWitnessedError when no such direction is found,
// VerificationError when the off-diagonal blocks do not vanish.
ReductionResult cone_reduce(const Pencil& p, const ConeOptions& options = {});

struct RankProfile {
  int max_rank = 0;
  std::vector<int> generator_ranks;
  bool independent = false;
  int span_dimension = 0;
  std::optional<int> det_degree;
  bool matches_degree = false;
  int trials = 0;
  std::uint64_t seed = 0;
};

RankProfile rank_profile(const Pencil& p, int trials, std::uint64_t seed);

// Degree of det P: exact when available, else the generic rank.
int determinant_degree(const Pencil& p, std::uint64_t seed = kDefaultSeed);

}  // namespace rzpencil

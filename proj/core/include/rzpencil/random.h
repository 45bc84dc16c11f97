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

// Seeded randomness. Every sampled procedure derives per-trial generators
// from one base seed so results do not depend on evaluation order.

#include <Eigen/Dense>
#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "rzpencil/quad.h"

namespace rzpencil {

inline constexpr std::uint64_t kDefaultSeed = 20160407;

// Explicit seed if given, else RZPENCIL_SEED from the environment, else the
// default. A malformed environment value is ignored.
std::uint64_t resolve_seed(std::optional<std::uint64_t> explicit_seed = std::nullopt);

// splitmix64 of (seed, index).
std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t index);

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  double normal() { return normal_(engine_); }
  double uniform() { return uniform_(engine_); }
  long uniform_int(long lo, long hi) {
    return std::uniform_int_distribution<long>(lo, hi)(engine_);
  }
  std::mt19937_64& engine() { return engine_; }

  // Gaussian direction rounded to multiples of 1/1024; never zero.
  std::vector<Quad> rational_direction(int n);
  std::vector<double> sphere_direction(int n);
  // Rational with numerator in [-bound, bound] and denominator in [1, max_den].
  Quad small_rational(long bound, long max_den);
  std::vector<Quad> small_rational_point(int n, long bound, long max_den);

  Eigen::MatrixXcd unitary(int k);
  Eigen::MatrixXcd hermitian(int k);

 private:
  std::mt19937_64 engine_;
  std::normal_distribution<double> normal_{0.0, 1.0};
  std::uniform_real_distribution<double> uniform_{0.0, 1.0};
};

}  // namespace rzpencil

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

#include "rzpencil/random.h"

#include <cmath>
#include <cstdlib>
#include <string>

namespace rzpencil {

std::uint64_t resolve_seed(std::optional<std::uint64_t> explicit_seed) {
  if (explicit_seed) return *explicit_seed;
  if (const char* env = std::getenv("RZPENCIL_SEED")) {
    try {
      std::size_t used = 0;
      const unsigned long long v = std::stoull(env, &used);
      if (used == std::string(env).size()) return v;
    } catch (const std::exception&) {
    }
  }
  return kDefaultSeed;
}

std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t index) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::vector<Quad> Rng::rational_direction(int n) {
  for (;;) {
    std::vector<Quad> a;
    a.reserve(n);
    bool nonzero = false;
    for (int i = 0; i < n; ++i) {
      const long num = std::lround(normal() * 1024.0);
      nonzero = nonzero || num != 0;
      a.emplace_back(mpq_class(num, 1024));
    }
    if (nonzero || n == 0) return a;
  }
}

std::vector<double> Rng::sphere_direction(int n) {
  for (;;) {
    std::vector<double> a(n);
    double norm2 = 0.0;
    for (auto& x : a) {
      x = normal();
      norm2 += x * x;
    }
    if (norm2 > 1e-12 || n == 0) {
      const double s = 1.0 / std::sqrt(norm2);
      for (auto& x : a) x *= s;
      return a;
    }
  }
}

Quad Rng::small_rational(long bound, long max_den) {
  const long num = uniform_int(-bound, bound);
  const long den = uniform_int(1, max_den);
  return Quad(mpq_class(num, den));
}

std::vector<Quad> Rng::small_rational_point(int n, long bound, long max_den) {
  std::vector<Quad> p;
  p.reserve(n);
  for (int i = 0; i < n; ++i) p.push_back(small_rational(bound, max_den));
  return p;
}

Eigen::MatrixXcd Rng::unitary(int k) {
  Eigen::MatrixXcd z(k, k);
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) z(i, j) = {normal(), normal()};
  }
  Eigen::HouseholderQR<Eigen::MatrixXcd> qr(z);
  Eigen::MatrixXcd q = qr.householderQ() * Eigen::MatrixXcd::Identity(k, k);
  const Eigen::MatrixXcd r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int j = 0; j < k; ++j) {
    const double mag = std::abs(r(j, j));
    if (mag > 0) q.col(j) *= r(j, j) / mag;
  }
  return q;
}

Eigen::MatrixXcd Rng::hermitian(int k) {
  Eigen::MatrixXcd z(k, k);
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) z(i, j) = {normal(), normal()};
  }
  return (z + z.adjoint()) * 0.5;
}

}  // namespace rzpencil

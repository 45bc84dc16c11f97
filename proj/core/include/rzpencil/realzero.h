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

// Real-rootedness of restrictions, the real zero property, membership in the
// rigidly convex set and quadratic forms.

#include <Eigen/Dense>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rzpencil/matrix.h"
#include "rzpencil/polynomial.h"
#include "rzpencil/random.h"
#include "rzpencil/univariate.h"

namespace rzpencil {

inline constexpr double kTauRoot = 1e-8;
inline constexpr double kTauPsd = 1e-9;
inline constexpr double kTauSep = 1e-7;
inline constexpr int kDefaultRzSamples = 512;

struct RealRoot {
  double value = 0.0;
  int multiplicity = 1;
};

enum class RootMethod { kExactSturm, kFloatEig };

struct RootProfile {
  std::vector<RealRoot> real_roots;  // sorted by value
  int complex_pair_count = 0;
  int degree_drop = 0;
  RootMethod method = RootMethod::kExactSturm;

  int real_count() const;  // with multiplicity
  bool real_rooted() const { return complex_pair_count == 0; }
};

// Throws DomainError for the zero polynomial and PreconditionError when
// ambient_degree < deg u.
RootProfile real_roots(const UniPoly<Quad>& u, int ambient_degree);
RootProfile real_roots(const UniPoly<double>& u, int ambient_degree);

// Exact: every complex root of u is real.
bool is_real_rooted(const UniPoly<Quad>& u);

struct RzOptions {
  enum class Strategy { kAuto, kSampled, kQuadratic };
  Strategy strategy = Strategy::kAuto;
  int samples = kDefaultRzSamples;
  std::uint64_t seed = kDefaultSeed;
};

struct RzVerdict {
  enum class Mode { kExact, kSampled };
  bool is_rz = false;
  // Present whenever is_rz is false; restrict(p, witness) has a nonreal root.
  std::optional<std::vector<Quad>> witness;
  Mode mode = Mode::kExact;
  std::uint64_t seed = 0;
  int directions_checked = 0;
  std::string method;  // "linear", "quadratic-psd" or "sampled-sturm"
};

RzVerdict is_real_zero(const Poly& p, const RzOptions& options = {});

// a lies in {a : p(t a) has no root in [0,1)}; exact.
bool rigid_membership(const Poly& p, std::span<const Quad> a);
bool rigid_membership(const Poly& p, std::span<const double> a);

struct QuadraticData {
  int n = 0;
  QMatrix A;            // symmetric
  std::vector<Quad> b;  // linear coefficients
  QMatrix G;            // b b^t / 4 - A
  std::optional<QMatrix> C_exact;
  std::optional<Eigen::MatrixXd> C_numeric;

  // C as doubles, from whichever representation exists.
  std::optional<Eigen::MatrixXd> C_double() const;
  Poly reconstruct() const;
};

QuadraticData quadratic_form(const Poly& p);
bool quadratic_rz_check(const QuadraticData& q);
// Exact rational vector v with v^t G v < 0, if G is not PSD.
std::optional<std::vector<Quad>> negative_direction(const QMatrix& g);

struct SimpleZerosResult {
  bool simple = true;
  int directions_checked = 0;
  std::uint64_t seed = 0;
  std::optional<std::vector<Quad>> witness;
};

// Samples directions a and checks that t -> p^(-t, a) is square-free.
SimpleZerosResult simple_zeros_sampled(const Poly& p, int samples, std::uint64_t seed);

}  // namespace rzpencil

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

// Monic hermitian linear matrix polynomials I + x_1 M_1 + ... + x_n M_n.

#include <Eigen/Dense>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "rzpencil/matrix.h"
#include "rzpencil/polynomial.h"
#include "rzpencil/random.h"

namespace rzpencil {

inline constexpr int kExactDetCap = 12;
inline constexpr double kTauId = 1e-9;
inline constexpr double kTauCorr = 1e-8;
inline constexpr double kTauRank = 1e-9;
inline constexpr double kProvedGridLimit = 1e6;

enum class Symmetry { kHermitian, kSymmetric };
std::string to_string(Symmetry s);
Symmetry parse_symmetry(std::string_view text);

class Pencil {
 public:
  Pencil() = default;

  // Matrices must be hermitian (exactly, or within 1e-10 relative for the
  // numeric factory). With no tag, the symmetry is inferred from the entries;
  // a kSymmetric tag on complex entries is rejected.
  static Pencil from_exact(int nvars, int size, std::vector<CQMatrix> matrices,
                           std::optional<Symmetry> tag = std::nullopt);
  static Pencil from_numeric(int nvars, int size, std::vector<Eigen::MatrixXcd> matrices,
                             std::optional<Symmetry> tag = std::nullopt);

  int nvars() const { return nvars_; }
  int size() const { return size_; }
  Symmetry symmetry() const { return symmetry_; }
  bool is_exact() const { return exact_.has_value(); }
  CoefficientDomain domain() const;

  // Throws PreconditionError on a numeric pencil.
  const std::vector<CQMatrix>& exact_matrices() const;
  const std::vector<Eigen::MatrixXcd>& matrices() const { return numeric_; }

  CQMatrix evaluate(std::span<const Quad> a) const;
  Eigen::MatrixXcd evaluate(std::span<const double> a) const;
  // sum a_i M_i without the identity.
  Eigen::MatrixXcd combination(std::span<const double> a) const;
  CQMatrix combination(std::span<const Quad> a) const;

  // Conjugate every matrix: M_i -> Q^* M_i Q. The result is numeric.
  Pencil conjugated(const Eigen::MatrixXcd& q) const;

  friend bool operator==(const Pencil& a, const Pencil& b);

 private:
  void check_point(std::size_t length) const;

  int nvars_ = 0;
  int size_ = 0;
  Symmetry symmetry_ = Symmetry::kHermitian;
  std::optional<std::vector<CQMatrix>> exact_;
  std::vector<Eigen::MatrixXcd> numeric_;
};

// M0^{-1/2} M_i M0^{-1/2}. Exact when M0 is diagonal with square roots in a
// single quadratic field; numeric otherwise.
Pencil make_monic(const CQMatrix& m0, const std::vector<CQMatrix>& ms, int nvars);
Pencil make_monic(const Eigen::MatrixXcd& m0, const std::vector<Eigen::MatrixXcd>& ms,
                  int nvars);

// Exact determinant by fraction-free elimination. Throws LimitError above
// `cap`, PreconditionError on numeric pencils.
Poly det_poly(const Pencil& p, int cap = kExactDetCap);

struct IdentityVerdict {
  enum class Mode { kProved, kSampled };
  bool pass = false;
  Mode mode = Mode::kSampled;
  long points = 0;
  long mismatches = 0;
  std::uint64_t seed = 0;
  double max_rel_error = 0.0;
  std::string reason;
  std::optional<std::vector<Quad>> mismatch_point;
};
std::string to_string(IdentityVerdict::Mode m);

// det P = target^r. Exact pencils are compared exactly, on the lattice
// {alpha in N^n : |alpha| <= size} when (size+1)^n <= 1e6 (a proof, since
// both sides have degree <= size), else at `trials` random rational points.
IdentityVerdict verify_identity(const Pencil& p, const Poly& target, int r, int trials,
                                std::uint64_t seed);

bool membership(const Pencil& p, std::span<const Quad> a);
bool membership(const Pencil& p, std::span<const double> a);

// det(I + t W), W = sum a_i M_i, by interpolation at scaled roots of unity.
// Leading coefficients below 1e-9 of the largest (after scaling t by 1/|W|)
// are dropped.
UniPoly<double> numeric_restriction(const Pencil& p, std::span<const double> a);

struct EigenRootReport {
  bool pass = false;
  std::vector<double> eigenvalues;
  std::vector<double> mapped_roots;  // sorted -1/lambda over nonzero lambda
  std::vector<double> poly_roots;    // sorted, with multiplicity
  int zero_eigenvalues = 0;
  int degree_drop = 0;
  int complex_roots = 0;
  double max_mismatch = 0.0;
  std::string root_source;  // "target", "det-exact" or "det-interpolated"
};

// `det` may carry det P when the caller already has it (or a target
// polynomial when the exact determinant is out of reach).
EigenRootReport eigen_root_check(const Pencil& p, std::span<const double> a,
                                 const Poly* det = nullptr);

// [[R, S], [-S, R]] for M_i = R_i + i S_i.
Pencil double_to_symmetric(const Pencil& p);

int exact_rank(const CQMatrix& m);
int combination_rank(const Pencil& p, std::span<const double> a);

}  // namespace rzpencil

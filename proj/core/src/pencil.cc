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

#include "rzpencil/pencil.h"

#include <algorithm>
#include <cmath>
#include <complex>
#include <functional>
#include <numbers>

#include "rzpencil/realzero.h"

namespace rzpencil {

std::string to_string(Symmetry s) {
  return s == Symmetry::kSymmetric ? "symmetric" : "hermitian";
}

Symmetry parse_symmetry(std::string_view text) {
  if (text == "symmetric") return Symmetry::kSymmetric;
  if (text == "hermitian") return Symmetry::kHermitian;
  throw FormatError("unknown symmetry '" + std::string(text) + "'");
}

std::string to_string(IdentityVerdict::Mode m) {
  return m == IdentityVerdict::Mode::kProved ? "proved" : "sampled";
}

namespace {

bool all_real(const CQMatrix& m) {
  for (int i = 0; i < m.rows(); ++i) {
    for (int j = 0; j < m.cols(); ++j) {
      if (!m(i, j).is_real()) return false;
    }
  }
  return true;
}

}  // namespace

Pencil Pencil::from_exact(int nvars, int size, std::vector<CQMatrix> matrices,
                          std::optional<Symmetry> tag) {
  if (nvars < 0 || size < 0) throw DimensionError("negative pencil dimensions");
  if (static_cast<int>(matrices.size()) != nvars) {
    throw DimensionError("expected " + std::to_string(nvars) + " matrices, got " +
                         std::to_string(matrices.size()));
  }
  bool real = true;
  for (std::size_t i = 0; i < matrices.size(); ++i) {
    const auto& m = matrices[i];
    if (m.rows() != size || m.cols() != size) {
      throw DimensionError("matrix M" + std::to_string(i + 1) + " is not " +
                           std::to_string(size) + "x" + std::to_string(size));
    }
    if (!m.is_hermitian()) {
      throw PreconditionError("matrix M" + std::to_string(i + 1) + " is not hermitian");
    }
    real = real && all_real(m);
  }
  if (tag == Symmetry::kSymmetric && !real) {
    throw PreconditionError("symmetric pencil with complex entries");
  }
  Pencil p;
  p.nvars_ = nvars;
  p.size_ = size;
  p.symmetry_ = tag.value_or(real ? Symmetry::kSymmetric : Symmetry::kHermitian);
  for (const auto& m : matrices) p.numeric_.push_back(to_eigen(m));
  p.exact_ = std::move(matrices);
  return p;
}

Pencil Pencil::from_numeric(int nvars, int size, std::vector<Eigen::MatrixXcd> matrices,
                            std::optional<Symmetry> tag) {
  if (nvars < 0 || size < 0) throw DimensionError("negative pencil dimensions");
  if (static_cast<int>(matrices.size()) != nvars) {
    throw DimensionError("expected " + std::to_string(nvars) + " matrices, got " +
                         std::to_string(matrices.size()));
  }
  bool real = true;
  for (std::size_t i = 0; i < matrices.size(); ++i) {
    auto& m = matrices[i];
    if (m.rows() != size || m.cols() != size) {
      throw DimensionError("matrix M" + std::to_string(i + 1) + " has the wrong shape");
    }
    const double scale = std::max(1.0, max_norm(m));
    if (max_norm(m - m.adjoint()) > 1e-10 * scale) {
      throw PreconditionError("matrix M" + std::to_string(i + 1) + " is not hermitian");
    }
    m = (m + m.adjoint()) * 0.5;
    const double imag = m.size() == 0 ? 0.0 : m.imag().cwiseAbs().maxCoeff();
    if (tag == Symmetry::kSymmetric) {
      if (imag > 1e-10 * scale) throw PreconditionError("symmetric pencil with complex entries");
      m = m.real().cast<std::complex<double>>();
    }
    real = real && imag == 0.0;
  }
  Pencil p;
  p.nvars_ = nvars;
  p.size_ = size;
  p.symmetry_ = tag.value_or(real ? Symmetry::kSymmetric : Symmetry::kHermitian);
  p.numeric_ = std::move(matrices);
  return p;
}

CoefficientDomain Pencil::domain() const {
  if (!exact_) return CoefficientDomain::floating();
  CoefficientDomain d;
  for (const auto& m : *exact_) {
    for (int i = 0; i < size_; ++i) {
      for (int j = 0; j < size_; ++j) {
        const long r = m(i, j).radicand();
        if (r != 0) d = merge_domains(d, CoefficientDomain::sqrt(r));
      }
    }
  }
  return d;
}

const std::vector<CQMatrix>& Pencil::exact_matrices() const {
  if (!exact_) throw PreconditionError("pencil has floating point entries");
  return *exact_;
}

void Pencil::check_point(std::size_t length) const {
  if (static_cast<int>(length) != nvars_) {
    throw DimensionError("point has " + std::to_string(length) + " coordinates, pencil has " +
                         std::to_string(nvars_) + " variables");
  }
}

CQMatrix Pencil::combination(std::span<const Quad> a) const {
  check_point(a.size());
  const auto& ms = exact_matrices();
  CQMatrix w(size_, size_);
  for (int l = 0; l < nvars_; ++l) {
    if (a[l].is_zero()) continue;
    w += ms[l].scaled(CQuad(a[l]));
  }
  return w;
}

CQMatrix Pencil::evaluate(std::span<const Quad> a) const {
  return CQMatrix::identity(size_) + combination(a);
}

Eigen::MatrixXcd Pencil::combination(std::span<const double> a) const {
  check_point(a.size());
  Eigen::MatrixXcd w = Eigen::MatrixXcd::Zero(size_, size_);
  for (int l = 0; l < nvars_; ++l) w += a[l] * numeric_[l];
  return w;
}

Eigen::MatrixXcd Pencil::evaluate(std::span<const double> a) const {
  return Eigen::MatrixXcd::Identity(size_, size_) + combination(a);
}

Pencil Pencil::conjugated(const Eigen::MatrixXcd& q) const {
  if (q.rows() != size_ || q.cols() != size_) throw DimensionError("unitary has the wrong size");
  std::vector<Eigen::MatrixXcd> ms;
  for (const auto& m : numeric_) ms.push_back(q.adjoint() * m * q);
  return from_numeric(nvars_, size_, std::move(ms));
}

bool operator==(const Pencil& a, const Pencil& b) {
  if (a.nvars_ != b.nvars_ || a.size_ != b.size_ || a.symmetry_ != b.symmetry_) return false;
  if (a.exact_.has_value() != b.exact_.has_value()) return false;
  if (a.exact_) return *a.exact_ == *b.exact_;
  for (std::size_t i = 0; i < a.numeric_.size(); ++i) {
    if (a.numeric_[i] != b.numeric_[i]) return false;
  }
  return true;
}

Pencil make_monic(const CQMatrix& m0, const std::vector<CQMatrix>& ms, int nvars) {
  if (!m0.is_hermitian()) throw PreconditionError("M0 is not hermitian");
  if (!is_pd_exact(m0)) throw PreconditionError("M0 is not positive definite");
  const int k = m0.rows();
  bool diagonal = true;
  std::vector<Quad> inv_root(k);
  long radicand = 0;
  for (int i = 0; i < k && diagonal; ++i) {
    for (int j = 0; j < k; ++j) {
      if (i != j && !m0(i, j).is_zero()) diagonal = false;
    }
    if (!diagonal) break;
    const auto s = exact_sqrt(m0(i, i).real());
    if (!s || (s->radicand() != 0 && radicand != 0 && s->radicand() != radicand)) {
      diagonal = false;
      break;
    }
    if (s->radicand() != 0) radicand = s->radicand();
    inv_root[i] = Quad(1) / *s;
  }
  if (!diagonal) {
    std::vector<Eigen::MatrixXcd> numeric;
    for (const auto& m : ms) numeric.push_back(to_eigen(m));
    return make_monic(to_eigen(m0), numeric, nvars);
  }
  std::vector<CQMatrix> out;
  for (const auto& m : ms) {
    if (m.rows() != k || m.cols() != k) throw DimensionError("matrix shape mismatch");
    CQMatrix r(k, k);
    for (int i = 0; i < k; ++i) {
      for (int j = 0; j < k; ++j) r(i, j) = m(i, j) * CQuad(inv_root[i] * inv_root[j]);
    }
    out.push_back(std::move(r));
  }
  return Pencil::from_exact(nvars, k, std::move(out));
}

Pencil make_monic(const Eigen::MatrixXcd& m0, const std::vector<Eigen::MatrixXcd>& ms,
                  int nvars) {
  const double scale = std::max(1.0, max_norm(m0));
  if (max_norm(m0 - m0.adjoint()) > 1e-10 * scale) {
    throw PreconditionError("M0 is not hermitian");
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver((m0 + m0.adjoint()) * 0.5);
  Eigen::VectorXd ev = solver.eigenvalues();
  for (int i = 0; i < ev.size(); ++i) {
    if (ev(i) <= kTauPsd * scale) throw PreconditionError("M0 is not positive definite");
    ev(i) = 1.0 / std::sqrt(ev(i));
  }
  const Eigen::MatrixXcd& v = solver.eigenvectors();
  const Eigen::MatrixXcd r = v * ev.cast<std::complex<double>>().asDiagonal() * v.adjoint();
  std::vector<Eigen::MatrixXcd> out;
  for (const auto& m : ms) out.push_back(r * m * r);
  return Pencil::from_numeric(nvars, static_cast<int>(m0.rows()), std::move(out));
}

Poly det_poly(const Pencil& p, int cap) {
  const int k = p.size();
  const int n = p.nvars();
  if (k > cap) {
    throw LimitError("pencil size " + std::to_string(k) + " exceeds the exact determinant cap " +
                     std::to_string(cap));
  }
  const auto& ms = p.exact_matrices();
  Poly one = Poly::constant(n, Quad(1));
  if (k == 0) return one;
  std::vector<std::vector<ComplexPoly>> a(k, std::vector<ComplexPoly>(k, ComplexPoly(n)));
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) {
      ComplexPoly e(n);
      if (i == j) e.add_term(Monomial(n, 0), CQuad(1));
      for (int l = 0; l < n; ++l) {
        Monomial m(n, 0);
        m[l] = 1;
        e.add_term(std::move(m), ms[l](i, j));
      }
      a[i][j] = std::move(e);
    }
  }
  // Fraction-free elimination. Pivots are leading principal minors, whose
  // constant term is 1, so no row exchanges are needed.
  ComplexPoly previous = ComplexPoly::constant(n, CQuad(1));
  for (int s = 0; s + 1 < k; ++s) {
    if (a[s][s].is_zero()) throw VerificationError("vanishing leading minor");
    for (int i = s + 1; i < k; ++i) {
      for (int j = s + 1; j < k; ++j) {
        ComplexPoly num = a[s][s] * a[i][j] - a[i][s] * a[s][j];
        a[i][j] = num.divide_exact(previous);
      }
    }
    previous = a[s][s];
  }
  Poly det;
  try {
    det = real_part_checked(a[k - 1][k - 1]);
  } catch (const VerificationError&) {
    throw VerificationError("determinant has a nonzero imaginary residue");
  }
  if (det.constant_term() != Quad(1)) {
    throw VerificationError("determinant constant term is not 1");
  }
  return det;
}

namespace {

void enumerate_lattice(int n, int max_degree, std::vector<int>& current, int used,
                       const std::function<bool(const std::vector<int>&)>& visit, bool& stop) {
  if (stop) return;
  const int i = static_cast<int>(current.size());
  if (i == n) {
    if (!visit(current)) stop = true;
    return;
  }
  for (int v = 0; v + used <= max_degree && !stop; ++v) {
    current.push_back(v);
    enumerate_lattice(n, max_degree, current, used + v, visit, stop);
    current.pop_back();
  }
}

}  // namespace

IdentityVerdict verify_identity(const Pencil& p, const Poly& target, int r, int trials,
                                std::uint64_t seed) {
  const int n = p.nvars();
  const int k = p.size();
  if (target.nvars() != n) {
    throw DimensionError("target has " + std::to_string(target.nvars()) +
                         " variables, pencil has " + std::to_string(n));
  }
  if (target.constant_term() != Quad(1)) throw PreconditionError("target must satisfy p(0) = 1");
  if (r < 1) throw PreconditionError("power must be at least 1");
  IdentityVerdict v;
  v.seed = seed;
  if (static_cast<long>(target.degree()) * r > k) {
    v.mode = IdentityVerdict::Mode::kProved;
    v.pass = false;
    v.reason = "degree of target^r exceeds the pencil size";
    return v;
  }

  if (p.is_exact()) {
    auto check_point = [&](const std::vector<Quad>& a) {
      ++v.points;
      const CQuad lhs = determinant(p.evaluate(a));
      const CQuad rhs(pow(target.evaluate(a), r));
      if (lhs != rhs) {
        ++v.mismatches;
        if (!v.mismatch_point) v.mismatch_point = a;
        return false;
      }
      return true;
    };
    if (std::pow(static_cast<double>(k + 1), n) <= kProvedGridLimit) {
      v.mode = IdentityVerdict::Mode::kProved;
      std::vector<int> current;
      bool stop = false;
      enumerate_lattice(
          n, k, current, 0,
          [&](const std::vector<int>& alpha) {
            std::vector<Quad> a(alpha.begin(), alpha.end());
            return check_point(a);
          },
          stop);
    } else {
      v.mode = IdentityVerdict::Mode::kSampled;
      for (int t = 0; t < trials; ++t) {
        Rng rng(trial_seed(seed, static_cast<std::uint64_t>(t)));
        if (!check_point(rng.small_rational_point(n, 20, 7))) break;
      }
    }
    v.pass = v.mismatches == 0;
    if (!v.pass) v.reason = "determinant differs from target^r";
    return v;
  }

  v.mode = IdentityVerdict::Mode::kSampled;
  for (int t = 0; t < trials; ++t) {
    Rng rng(trial_seed(seed, static_cast<std::uint64_t>(t)));
    std::vector<double> a(n);
    for (auto& x : a) x = 0.5 * rng.normal();
    ++v.points;
    const std::complex<double> lhs = p.evaluate(a).partialPivLu().determinant();
    const double rhs = std::pow(evaluate(target, a), r);
    const double err =
        std::abs(lhs - rhs) / std::max({1.0, std::abs(lhs), std::abs(rhs)});
    v.max_rel_error = std::max(v.max_rel_error, err);
    if (err > kTauId) {
      ++v.mismatches;
      if (!v.mismatch_point) {
        std::vector<Quad> exact;
        for (double x : a) exact.push_back(Quad::from_double(x));
        v.mismatch_point = exact;
      }
    }
  }
  v.pass = v.mismatches == 0;
  if (!v.pass) v.reason = "determinant differs from target^r beyond tolerance";
  return v;
}

bool membership(const Pencil& p, std::span<const Quad> a) {
  if (p.is_exact()) return is_psd_exact(p.evaluate(a));
  std::vector<double> d;
  for (const auto& x : a) d.push_back(x.to_double());
  return membership(p, std::span<const double>(d));
}

bool membership(const Pencil& p, std::span<const double> a) {
  if (p.is_exact()) {
    std::vector<Quad> exact;
    for (double x : a) exact.push_back(Quad::from_double(x));
    return is_psd_exact(p.evaluate(exact));
  }
  return is_psd_numeric(p.evaluate(a), kTauPsd);
}

UniPoly<double> numeric_restriction(const Pencil& p, std::span<const double> a) {
  const int k = p.size();
  const Eigen::MatrixXcd w = p.combination(a);
  const double norm = w.size() == 0 ? 0.0 : w.operatorNorm();
  if (k == 0 || norm == 0.0) return UniPoly<double>({1.0});
  const double rho = 1.0 / norm;
  const int count = k + 1;
  std::vector<std::complex<double>> values(count);
  for (int j = 0; j < count; ++j) {
    const std::complex<double> z =
        rho * std::polar(1.0, 2.0 * std::numbers::pi * j / count);
    values[j] = (Eigen::MatrixXcd::Identity(k, k) + z * w).partialPivLu().determinant();
  }
  std::vector<double> scaled(count);
  double largest = 0.0;
  for (int m = 0; m < count; ++m) {
    std::complex<double> sum = 0.0;
    for (int j = 0; j < count; ++j) {
      sum += values[j] * std::polar(1.0, -2.0 * std::numbers::pi * j * m / count);
    }
    scaled[m] = sum.real() / count;
    largest = std::max(largest, std::abs(scaled[m]));
  }
  while (scaled.size() > 1 && std::abs(scaled.back()) <= 1e-9 * largest) scaled.pop_back();
  std::vector<double> coeffs(scaled.size());
  for (std::size_t m = 0; m < scaled.size(); ++m) {
    coeffs[m] = scaled[m] / std::pow(rho, static_cast<double>(m));
  }
  coeffs[0] = 1.0;
  return UniPoly<double>(std::move(coeffs));
}

EigenRootReport eigen_root_check(const Pencil& p, std::span<const double> a, const Poly* det) {
  EigenRootReport report;
  const int k = p.size();
  const Eigen::MatrixXcd w = p.combination(a);
  const Eigen::VectorXd ev = hermitian_eigenvalues(w);
  double largest = 0.0;
  for (int i = 0; i < ev.size(); ++i) largest = std::max(largest, std::abs(ev(i)));
  const double zero_tol = kTauRank * std::max(1.0, largest);
  for (int i = 0; i < ev.size(); ++i) {
    report.eigenvalues.push_back(ev(i));
    if (std::abs(ev(i)) <= zero_tol) {
      ++report.zero_eigenvalues;
    } else {
      report.mapped_roots.push_back(-1.0 / ev(i));
    }
  }
  std::sort(report.mapped_roots.begin(), report.mapped_roots.end());

  RootProfile profile;
  std::optional<Poly> computed;
  if (det == nullptr && p.is_exact() && k <= kExactDetCap) {
    computed = det_poly(p);
    det = &*computed;
  }
  if (det != nullptr) {
    report.root_source = computed ? "det-exact" : "target";
    std::vector<Quad> exact;
    for (double x : a) exact.push_back(Quad::from_double(x));
    profile = real_roots(restrict(*det, exact), k);
  } else {
    report.root_source = "det-interpolated";
    profile = real_roots(numeric_restriction(p, a), k);
  }
  for (const auto& root : profile.real_roots) {
    for (int m = 0; m < root.multiplicity; ++m) report.poly_roots.push_back(root.value);
  }
  report.degree_drop = profile.degree_drop;
  report.complex_roots = 2 * profile.complex_pair_count;

  bool ok = report.complex_roots == 0 && report.zero_eigenvalues == report.degree_drop &&
            report.mapped_roots.size() == report.poly_roots.size();
  if (ok) {
    for (std::size_t i = 0; i < report.poly_roots.size(); ++i) {
      const double x = report.mapped_roots[i];
      const double y = report.poly_roots[i];
      const double rel = std::abs(x - y) / std::max(std::abs(x), std::abs(y));
      report.max_mismatch = std::max(report.max_mismatch, rel);
    }
    ok = report.max_mismatch <= kTauCorr;
  }
  report.pass = ok;
  return report;
}

Pencil double_to_symmetric(const Pencil& p) {
  const int k = p.size();
  if (p.is_exact()) {
    std::vector<CQMatrix> out;
    for (const auto& m : p.exact_matrices()) {
      CQMatrix d(2 * k, 2 * k);
      for (int i = 0; i < k; ++i) {
        for (int j = 0; j < k; ++j) {
          const CQuad re(m(i, j).real());
          const CQuad im(m(i, j).imag());
          d(i, j) = re;
          d(i + k, j + k) = re;
          d(i, j + k) = im;
          d(i + k, j) = -im;
        }
      }
      out.push_back(std::move(d));
    }
    return Pencil::from_exact(p.nvars(), 2 * k, std::move(out), Symmetry::kSymmetric);
  }
  std::vector<Eigen::MatrixXcd> out;
  for (const auto& m : p.matrices()) {
    Eigen::MatrixXd d(2 * k, 2 * k);
    d << m.real(), m.imag(), -m.imag(), m.real();
    out.push_back(d.cast<std::complex<double>>());
  }
  return Pencil::from_numeric(p.nvars(), 2 * k, std::move(out), Symmetry::kSymmetric);
}

int exact_rank(const CQMatrix& m) { return rank(m); }

int combination_rank(const Pencil& p, std::span<const double> a) {
  return numeric_rank(p.combination(a), kTauRank);
}

}  // namespace rzpencil

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

#include "rzpencil/matrix.h"

#include <algorithm>
#include <cmath>

namespace rzpencil {

CQMatrix to_complex(const QMatrix& m) {
  CQMatrix r(m.rows(), m.cols());
  for (int i = 0; i < m.rows(); ++i) {
    for (int j = 0; j < m.cols(); ++j) r(i, j) = CQuad(m(i, j));
  }
  return r;
}

Eigen::MatrixXcd to_eigen(const CQMatrix& m) {
  Eigen::MatrixXcd r(m.rows(), m.cols());
  for (int i = 0; i < m.rows(); ++i) {
    for (int j = 0; j < m.cols(); ++j) r(i, j) = m(i, j).to_complex();
  }
  return r;
}

Eigen::MatrixXd to_eigen(const QMatrix& m) {
  Eigen::MatrixXd r(m.rows(), m.cols());
  for (int i = 0; i < m.rows(); ++i) {
    for (int j = 0; j < m.cols(); ++j) r(i, j) = m(i, j).to_double();
  }
  return r;
}

namespace {

// In-place reduced row echelon form; returns pivot columns.
std::vector<int> rref(CQMatrix& m) {
  std::vector<int> pivots;
  int row = 0;
  for (int col = 0; col < m.cols() && row < m.rows(); ++col) {
    int p = -1;
    for (int i = row; i < m.rows(); ++i) {
      if (!m(i, col).is_zero()) {
        p = i;
        break;
      }
    }
    if (p < 0) continue;
    if (p != row) {
      for (int j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(row, j));
    }
    const CQuad inv = CQuad(1) / m(row, col);
    for (int j = col; j < m.cols(); ++j) m(row, j) *= inv;
    for (int i = 0; i < m.rows(); ++i) {
      if (i == row || m(i, col).is_zero()) continue;
      const CQuad f = m(i, col);
      for (int j = col; j < m.cols(); ++j) {
        if (!m(row, j).is_zero()) m(i, j) -= f * m(row, j);
      }
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

CQuad determinant(CQMatrix m) {
  if (m.rows() != m.cols()) throw DimensionError("determinant of a non-square matrix");
  const int n = m.rows();
  CQuad det(1);
  for (int col = 0; col < n; ++col) {
    int p = -1;
    for (int i = col; i < n; ++i) {
      if (!m(i, col).is_zero()) {
        p = i;
        break;
      }
    }
    if (p < 0) return CQuad(0);
    if (p != col) {
      for (int j = 0; j < n; ++j) std::swap(m(p, j), m(col, j));
      det = -det;
    }
    det *= m(col, col);
    const CQuad inv = CQuad(1) / m(col, col);
    for (int i = col + 1; i < n; ++i) {
      if (m(i, col).is_zero()) continue;
      const CQuad f = m(i, col) * inv;
      for (int j = col; j < n; ++j) {
        if (!m(col, j).is_zero()) m(i, j) -= f * m(col, j);
      }
    }
  }
  return det;
}

int rank(CQMatrix m) { return static_cast<int>(rref(m).size()); }

std::vector<std::vector<CQuad>> nullspace(CQMatrix m) {
  const std::vector<int> pivots = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (int c : pivots) is_pivot[c] = true;
  std::vector<std::vector<CQuad>> basis;
  for (int free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<CQuad> v(m.cols(), CQuad(0));
    v[free] = CQuad(1);
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m(static_cast<int>(r), free);
    basis.push_back(std::move(v));
  }
  return basis;
}

namespace {

void require_hermitian(const CQMatrix& h) {
  if (!h.is_hermitian()) throw PreconditionError("matrix is not hermitian");
}

// Schur complement of `a` with respect to pivot p, dropping row/column p.
CQMatrix schur_complement(const CQMatrix& a, int p) {
  const int n = a.rows();
  CQMatrix r(n - 1, n - 1);
  const CQuad inv = CQuad(1) / a(p, p);
  int ri = 0;
  for (int i = 0; i < n; ++i) {
    if (i == p) continue;
    int rj = 0;
    for (int j = 0; j < n; ++j) {
      if (j == p) continue;
      r(ri, rj) = a(i, j);
      if (!a(i, p).is_zero() && !a(p, j).is_zero()) r(ri, rj) -= a(i, p) * inv * a(p, j);
      ++rj;
    }
    ++ri;
  }
  return r;
}

}  // namespace

bool is_psd_exact(const CQMatrix& h) {
  require_hermitian(h);
  CQMatrix a = h;
  while (a.rows() > 0) {
    int pivot = -1;
    for (int i = 0; i < a.rows(); ++i) {
      const int s = a(i, i).real().sign();
      if (s < 0) return false;
      if (s > 0 && pivot < 0) pivot = i;
    }
    // Zero diagonal forces the whole row to vanish.
    if (pivot < 0) return a.is_zero();
    a = schur_complement(a, pivot);
  }
  return true;
}

bool is_pd_exact(const CQMatrix& h) {
  require_hermitian(h);
  CQMatrix a = h;
  while (a.rows() > 0) {
    if (a(0, 0).real().sign() <= 0) return false;
    a = schur_complement(a, 0);
  }
  return true;
}

double max_norm(const Eigen::MatrixXcd& m) {
  return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

Eigen::VectorXd hermitian_eigenvalues(const Eigen::MatrixXcd& h) {
  if (h.rows() == 0) return Eigen::VectorXd();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(h, Eigen::EigenvaluesOnly);
  return solver.eigenvalues();
}

bool is_psd_numeric(const Eigen::MatrixXcd& h, double rel_tol) {
  if (h.rows() == 0) return true;
  const double scale = std::max(1.0, max_norm(h));
  return hermitian_eigenvalues(h).minCoeff() >= -rel_tol * scale;
}

int numeric_rank(const Eigen::MatrixXcd& m, double rel_tol) {
  if (m.size() == 0) return 0;
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(m);
  const auto& s = svd.singularValues();
  if (s.size() == 0 || s(0) == 0.0) return 0;
  int r = 0;
  for (int i = 0; i < s.size(); ++i) {
    if (s(i) > rel_tol * s(0)) ++r;
  }
  return r;
}

Eigen::MatrixXcd numeric_kernel(const Eigen::MatrixXcd& m, double rel_tol) {
  const int n = static_cast<int>(m.cols());
  if (m.rows() == 0 || max_norm(m) == 0.0) return Eigen::MatrixXcd::Identity(n, n);
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(m, Eigen::ComputeFullV);
  const auto& s = svd.singularValues();
  int r = 0;
  for (int i = 0; i < s.size(); ++i) {
    if (s(i) > rel_tol * s(0)) ++r;
  }
  return svd.matrixV().rightCols(n - r);
}

Eigen::MatrixXcd complete_to_unitary(const Eigen::MatrixXcd& basis) {
  const int k = static_cast<int>(basis.rows());
  if (basis.cols() == 0) return Eigen::MatrixXcd::Identity(k, k);
  Eigen::HouseholderQR<Eigen::MatrixXcd> qr(basis);
  Eigen::MatrixXcd q = qr.householderQ() * Eigen::MatrixXcd::Identity(k, k);
  return q;
}

std::optional<Eigen::MatrixXcd> psd_sqrt(const Eigen::MatrixXcd& h, double tol) {
  if (h.rows() == 0) return h;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(h);
  Eigen::VectorXd ev = solver.eigenvalues();
  for (int i = 0; i < ev.size(); ++i) {
    if (ev(i) < -tol) return std::nullopt;
    ev(i) = ev(i) < 0 ? 0.0 : std::sqrt(ev(i));
  }
  const Eigen::MatrixXcd& v = solver.eigenvectors();
  return Eigen::MatrixXcd(v * ev.cast<std::complex<double>>().asDiagonal() * v.adjoint());
}

}  // namespace rzpencil

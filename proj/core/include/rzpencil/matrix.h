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

// Small dense matrices over exact scalars, plus the handful of floating point
// helpers shared by the pencil, reduction and clifford code.

#include <Eigen/Dense>
#include <optional>
#include <vector>

#include "rzpencil/error.h"
#include "rzpencil/quad.h"

namespace rzpencil {

inline Quad conj_scalar(const Quad& q) { return q; }
inline CQuad conj_scalar(const CQuad& q) { return q.conj(); }

template <class T>
class DenseMatrix {
 public:
  DenseMatrix() = default;
  DenseMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(rows * cols, T(0)) {
    if (rows < 0 || cols < 0) throw DimensionError("negative matrix size");
  }

  static DenseMatrix identity(int n) {
    DenseMatrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  T& operator()(int i, int j) { return data_[i * cols_ + j]; }
  const T& operator()(int i, int j) const { return data_[i * cols_ + j]; }

  bool is_zero() const {
    for (const auto& x : data_) {
      if (!x.is_zero()) return false;
    }
    return true;
  }

  DenseMatrix adjoint() const {
    DenseMatrix r(cols_, rows_);
    for (int i = 0; i < rows_; ++i) {
      for (int j = 0; j < cols_; ++j) r(j, i) = conj_scalar((*this)(i, j));
    }
    return r;
  }

  bool is_hermitian() const {
    if (rows_ != cols_) return false;
    for (int i = 0; i < rows_; ++i) {
      for (int j = i; j < cols_; ++j) {
        if ((*this)(i, j) != conj_scalar((*this)(j, i))) return false;
      }
    }
    return true;
  }

  DenseMatrix scaled(const T& s) const {
    DenseMatrix r = *this;
    for (auto& x : r.data_) x = x * s;
    return r;
  }

  DenseMatrix& operator+=(const DenseMatrix& o) {
    check_same(o);
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += o.data_[k];
    return *this;
  }
  DenseMatrix& operator-=(const DenseMatrix& o) {
    check_same(o);
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= o.data_[k];
    return *this;
  }
  friend DenseMatrix operator+(DenseMatrix a, const DenseMatrix& b) { return a += b; }
  friend DenseMatrix operator-(DenseMatrix a, const DenseMatrix& b) { return a -= b; }
  DenseMatrix operator-() const { return scaled(T(-1)); }

  friend DenseMatrix operator*(const DenseMatrix& a, const DenseMatrix& b) {
    if (a.cols_ != b.rows_) throw DimensionError("matrix product shape mismatch");
    DenseMatrix r(a.rows_, b.cols_);
    for (int i = 0; i < a.rows_; ++i) {
      for (int k = 0; k < a.cols_; ++k) {
        const T& aik = a(i, k);
        if (aik.is_zero()) continue;
        for (int j = 0; j < b.cols_; ++j) {
          if (!b(k, j).is_zero()) r(i, j) += aik * b(k, j);
        }
      }
    }
    return r;
  }

  friend bool operator==(const DenseMatrix& a, const DenseMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }
  friend bool operator!=(const DenseMatrix& a, const DenseMatrix& b) { return !(a == b); }

 private:
  void check_same(const DenseMatrix& o) const {
    if (o.rows_ != rows_ || o.cols_ != cols_) throw DimensionError("matrix shape mismatch");
  }

  int rows_ = 0;
  int cols_ = 0;
  std::vector<T> data_;
};

using QMatrix = DenseMatrix<Quad>;
using CQMatrix = DenseMatrix<CQuad>;

CQMatrix to_complex(const QMatrix& m);
Eigen::MatrixXcd to_eigen(const CQMatrix& m);
Eigen::MatrixXd to_eigen(const QMatrix& m);

CQuad determinant(CQMatrix m);
int rank(CQMatrix m);
// Basis of {v : m v = 0} from the reduced row echelon form.
std::vector<std::vector<CQuad>> nullspace(CQMatrix m);

// Exact semidefiniteness of a hermitian matrix by symmetric pivoting.
bool is_psd_exact(const CQMatrix& h);
// Exact definiteness by leading principal pivots.
bool is_pd_exact(const CQMatrix& h);

// Floating point helpers. Tolerances are relative to the largest entry or
// singular value, as documented per function.
double max_norm(const Eigen::MatrixXcd& m);
Eigen::VectorXd hermitian_eigenvalues(const Eigen::MatrixXcd& h);
// Smallest eigenvalue >= -tol * max(1, max_norm).
bool is_psd_numeric(const Eigen::MatrixXcd& h, double rel_tol);
// Singular values above rel_tol * sigma_max.
int numeric_rank(const Eigen::MatrixXcd& m, double rel_tol);
// Orthonormal columns spanning the numerical kernel of m.
Eigen::MatrixXcd numeric_kernel(const Eigen::MatrixXcd& m, double rel_tol);
// Unitary whose first columns span `basis`; `basis` need not be orthonormal.
Eigen::MatrixXcd complete_to_unitary(const Eigen::MatrixXcd& basis);
// Hermitian PSD square root; eigenvalues in [-tol, 0) clamp to 0, lower ones
// return nullopt.
std::optional<Eigen::MatrixXcd> psd_sqrt(const Eigen::MatrixXcd& h, double tol);

}  // namespace rzpencil

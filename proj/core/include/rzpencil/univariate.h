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

#include <algorithm>
#include <cmath>
#include <utility>
#include <vector>

#include "rzpencil/error.h"
#include "rzpencil/quad.h"

namespace rzpencil {

inline bool is_zero_scalar(const Quad& q) { return q.is_zero(); }
inline bool is_zero_scalar(double x) { return x == 0.0; }

// Dense univariate polynomial, coefficients in ascending degree. Trailing
// zeros are trimmed, so the leading coefficient is nonzero unless the
// polynomial is identically zero.
template <class T>
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<T> coefficients) : c_(std::move(coefficients)) {
    trim();
  }

  const std::vector<T>& coefficients() const { return c_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  T coefficient(int i) const {
    return i >= 0 && i < static_cast<int>(c_.size()) ? c_[i] : T(0);
  }
  const T& leading() const { return c_.back(); }

  T operator()(const T& x) const {
    T acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  UniPoly derivative() const {
    std::vector<T> d;
    for (std::size_t i = 1; i < c_.size(); ++i) d.push_back(c_[i] * T(static_cast<int>(i)));
    return UniPoly(std::move(d));
  }

  friend UniPoly operator+(const UniPoly& a, const UniPoly& b) {
    std::vector<T> r(std::max(a.c_.size(), b.c_.size()), T(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) r[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) r[i] += b.c_[i];
    return UniPoly(std::move(r));
  }
  friend UniPoly operator-(const UniPoly& a, const UniPoly& b) {
    std::vector<T> r(std::max(a.c_.size(), b.c_.size()), T(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) r[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) r[i] -= b.c_[i];
    return UniPoly(std::move(r));
  }
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b) {
    if (a.is_zero() || b.is_zero()) return UniPoly();
    std::vector<T> r(a.c_.size() + b.c_.size() - 1, T(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (is_zero_scalar(a.c_[i])) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    }
    return UniPoly(std::move(r));
  }
  UniPoly operator-() const {
    std::vector<T> r = c_;
    for (auto& x : r) x = -x;
    return UniPoly(std::move(r));
  }
  UniPoly scaled(const T& s) const {
    std::vector<T> r = c_;
    for (auto& x : r) x = x * s;
    return UniPoly(std::move(r));
  }

  // Euclidean division over a field: *this = q * d + r, deg r < deg d.
  std::pair<UniPoly, UniPoly> divmod(const UniPoly& d) const {
    if (d.is_zero()) throw DomainError("polynomial division by zero");
    std::vector<T> rem = c_;
    const int dd = d.degree();
    if (degree() < dd) return {UniPoly(), *this};
    std::vector<T> q(degree() - dd + 1, T(0));
    for (int k = degree() - dd; k >= 0; --k) {
      const T coef = rem[k + dd] / d.leading();
      q[k] = coef;
      if (is_zero_scalar(coef)) continue;
      for (int j = 0; j <= dd; ++j) rem[k + j] -= coef * d.c_[j];
      rem[k + dd] = T(0);
    }
    rem.resize(dd);
    return {UniPoly(std::move(q)), UniPoly(std::move(rem))};
  }

  UniPoly monic() const {
    if (is_zero()) return *this;
    return scaled(T(1) / leading());
  }

  friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.c_ == b.c_; }

 private:
  void trim() {
    while (!c_.empty() && is_zero_scalar(c_.back())) c_.pop_back();
  }
  std::vector<T> c_;
};

// Monic gcd; exact coefficient fields only.
UniPoly<Quad> gcd(UniPoly<Quad> a, UniPoly<Quad> b);

// Yun's square-free decomposition: returns f_1, f_2, ... with
// u = lc * prod f_j^j and each f_j square-free (possibly constant).
std::vector<UniPoly<Quad>> squarefree_decomposition(const UniPoly<Quad>& u);

// Sturm-sequence root counting for exact coefficients.
class SturmSequence {
 public:
  explicit SturmSequence(const UniPoly<Quad>& u);
  // Distinct real roots in the half-open interval (lo, hi].
  int count(const Quad& lo, const Quad& hi) const;
  int count_all() const;
  int count_above(const Quad& lo) const;  // roots in (lo, +inf)

 private:
  int variations_at(const Quad& x) const;
  int variations_at_infinity(bool positive) const;
  std::vector<UniPoly<Quad>> chain_;
};

// Isolated real roots (distinct) of a square-free exact polynomial, refined
// until each bracket is narrower than rel_tol * max(1, |root|).
std::vector<double> isolate_real_roots(const UniPoly<Quad>& squarefree,
                                       double rel_tol = 1e-14);

}  // namespace rzpencil

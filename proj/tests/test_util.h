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

#include <cstdint>
#include <string_view>
#include <vector>

#include "rzpencil/pencil.h"
#include "rzpencil/polynomial.h"
#include "rzpencil/random.h"

namespace rzpencil::testing {

inline Poly parse(std::string_view text, int nvars, int base = 0) {
  ParseOptions options;
  options.base = base;
  return parse_poly(text, nvars, options);
}

// 1 + b^t x + x^t A x with A = b b^t / 4 - C^2 for a random rational
// symmetric C, hence real zero. Redrawn until the degree is exactly 2.
inline Poly random_quadratic_rz(int n, Rng& rng) {
  QMatrix c(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = i; j < n; ++j) {
      c(i, j) = rng.small_rational(3, 3);
      c(j, i) = c(i, j);
    }
  }
  const QMatrix g = c * c;
  std::vector<Quad> b(n);
  for (auto& x : b) x = rng.small_rational(4, 2);
  Poly p = Poly::constant(n, Quad(1));
  for (int i = 0; i < n; ++i) p += Poly::variable(n, i).scaled(b[i]);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const Quad a = b[i] * b[j] / Quad(4) - g(i, j);
      if (!a.is_zero()) p += (Poly::variable(n, i) * Poly::variable(n, j)).scaled(a);
    }
  }
  return p.degree() == 2 ? p : random_quadratic_rz(n, rng);
}

// Hermitian matrix with small Gaussian-rational entries.
inline CQMatrix random_exact_hermitian(int k, Rng& rng, bool real = false) {
  CQMatrix m(k, k);
  for (int i = 0; i < k; ++i) {
    m(i, i) = CQuad(rng.small_rational(3, 2));
    for (int j = i + 1; j < k; ++j) {
      const CQuad z(rng.small_rational(3, 2), real ? Quad(0) : rng.small_rational(3, 2));
      m(i, j) = z;
      m(j, i) = z.conj();
    }
  }
  return m;
}

inline Pencil random_exact_pencil(int n, int k, Rng& rng, bool real = false) {
  std::vector<CQMatrix> ms;
  for (int i = 0; i < n; ++i) ms.push_back(random_exact_hermitian(k, rng, real));
  return Pencil::from_exact(n, k, std::move(ms));
}

inline Pencil random_numeric_pencil(int n, int k, Rng& rng) {
  std::vector<Eigen::MatrixXcd> ms;
  for (int i = 0; i < n; ++i) ms.push_back(rng.hermitian(k));
  return Pencil::from_numeric(n, k, std::move(ms));
}

}  // namespace rzpencil::testing

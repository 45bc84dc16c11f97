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

// Named polynomials and pencils used throughout the examples and tests.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rzpencil/clifford.h"
#include "rzpencil/pencil.h"
#include "rzpencil/polynomial.h"

namespace rzpencil {

// 1 - x1^2 - ... - xn^2.
Poly ball_poly(int n);
// (x0 + 1)^2 - x1^2 - ... - xn^2, in n + 1 variables.
Poly shifted_ball_poly(int n);
// (x1 + sqrt 2)^2 - x2^2 - ... - xn^2 - 1.
Poly hyperboloid_poly(int n);

// Size n + 1: first row and column (1, x1, ..., xn), identity elsewhere.
Pencil arrowhead_pencil(int n);
// The two 2 x 2 hermitian pencils with determinant 1 - x1^2 - x2^2 - x3^2.
Pencil ball3_pencil(int which);
// sum x_i Sigma_i for the five Brauer-Weyl matrices of size 4.
Pencil bw5_pencil(Variant variant = Variant::kStandard);
// Size 4, determinant q_5^2.
Pencil hyperboloid5_pencil();
// Size 4 in x0..x4, determinant ptilde_4^2.
Pencil shifted_ball4_pencil();
// Size 2 in x0..x3, determinant ptilde_3.
Pencil shifted_ball3_pencil();

struct CatalogEntry {
  std::string name;
  std::string description;
  std::optional<Poly> poly;
  std::optional<Pencil> pencil;
  // For pencils: det = target^power.
  std::optional<Poly> target;
  int power = 1;
  int base = 0;  // variable numbering for printing
};

// Names: p_<n>, ptilde_<n>, q_<n>, arrowhead_<n>, p3-rep-1, p3-rep-2, bw5,
// bw5-negated, ex57, ex58, ex33. Throws FormatError for unknown names.
CatalogEntry catalog_lookup(std::string_view name);
std::vector<std::string> catalog_names();

}  // namespace rzpencil

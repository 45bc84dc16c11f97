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

#include "rzpencil/catalog.h"

#include <charconv>

namespace rzpencil {
namespace {

Poly var(int nvars, int i) { return Poly::variable(nvars, i); }
Poly cst(int nvars, const Quad& c) { return Poly::constant(nvars, c); }

CQMatrix entry_matrix(int k, std::initializer_list<std::tuple<int, int, CQuad>> entries) {
  CQMatrix m(k, k);
  for (const auto& [i, j, v] : entries) m(i, j) = v;
  return m;
}

int parse_index(std::string_view name, std::string_view prefix) {
  const std::string_view digits = name.substr(prefix.size());
  int n = 0;
  const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), n);
  if (digits.empty() || ec != std::errc() || ptr != digits.data() + digits.size() || n < 1 ||
      n > 64) {
    throw FormatError("invalid index in example name '" + std::string(name) + "'");
  }
  return n;
}

}  // namespace

Poly ball_poly(int n) {
  if (n < 1) throw PreconditionError("need at least one variable");
  Poly p = cst(n, Quad(1));
  for (int i = 0; i < n; ++i) p -= var(n, i) * var(n, i);
  return p;
}

Poly shifted_ball_poly(int n) { return shifted_homogenize(ball_poly(n)); }

Poly hyperboloid_poly(int n) {
  if (n < 1) throw PreconditionError("need at least one variable");
  const Poly shifted = var(n, 0) + cst(n, Quad::sqrt_of(2));
  Poly p = shifted * shifted - cst(n, Quad(1));
  for (int i = 1; i < n; ++i) p -= var(n, i) * var(n, i);
  return p;
}

Pencil arrowhead_pencil(int n) {
  if (n < 1) throw PreconditionError("need at least one variable");
  std::vector<CQMatrix> ms;
  for (int i = 1; i <= n; ++i) ms.push_back(entry_matrix(n + 1, {{0, i, 1}, {i, 0, 1}}));
  return Pencil::from_exact(n, n + 1, std::move(ms), Symmetry::kSymmetric);
}

Pencil ball3_pencil(int which) {
  // [[1 + x3, x1 + i x2], [x1 - i x2, 1 - x3]] and its negation.
  const CQuad one(1);
  const CQuad i = CQuad::i();
  std::vector<CQMatrix> ms{
      entry_matrix(2, {{0, 1, one}, {1, 0, one}}),
      entry_matrix(2, {{0, 1, i}, {1, 0, -i}}),
      entry_matrix(2, {{0, 0, one}, {1, 1, -one}}),
  };
  if (which == 2) {
    for (auto& m : ms) m = -m;
  } else if (which != 1) {
    throw PreconditionError("there are two listed representations, 1 and 2");
  }
  return Pencil::from_exact(3, 2, std::move(ms));
}

Pencil bw5_pencil(Variant variant) {
  CliffordGenerators g = brauer_weyl(5, variant);
  return Pencil::from_exact(5, g.size, std::move(g.sigma));
}

Pencil hyperboloid5_pencil() {
  CliffordGenerators g = brauer_weyl(5);
  g.sigma[0] += CQMatrix::identity(g.size).scaled(CQuad(Quad::sqrt_of(2)));
  return Pencil::from_exact(5, g.size, std::move(g.sigma));
}

Pencil shifted_ball4_pencil() {
  const CliffordGenerators g = brauer_weyl(5);
  std::vector<CQMatrix> ms{CQMatrix::identity(g.size)};
  for (int i = 0; i < 4; ++i) ms.push_back(g.sigma[i]);
  return Pencil::from_exact(5, g.size, std::move(ms));
}

Pencil shifted_ball3_pencil() {
  // [[1 + x0 + x1, x2 + i x3], [x2 - i x3, 1 + x0 - x1]].
  const CQuad one(1);
  const CQuad i = CQuad::i();
  std::vector<CQMatrix> ms{
      CQMatrix::identity(2),
      entry_matrix(2, {{0, 0, one}, {1, 1, -one}}),
      entry_matrix(2, {{0, 1, one}, {1, 0, one}}),
      entry_matrix(2, {{0, 1, i}, {1, 0, -i}}),
  };
  return Pencil::from_exact(4, 2, std::move(ms));
}

std::vector<std::string> catalog_names() {
  return {"p_<n>", "ptilde_<n>", "q_<n>", "arrowhead_<n>", "p3-rep-1", "p3-rep-2",
          "bw5",   "bw5-negated", "ex57", "ex58",          "ex33"};
}

CatalogEntry catalog_lookup(std::string_view name) {
  CatalogEntry e;
  e.name = std::string(name);
  if (name.starts_with("ptilde_")) {
    const int n = parse_index(name, "ptilde_");
    e.description = "(x0+1)^2 - x1^2 - ... - x" + std::to_string(n) + "^2";
    e.poly = shifted_ball_poly(n);
  } else if (name.starts_with("p_")) {
    const int n = parse_index(name, "p_");
    e.description = "1 - x1^2 - ... - x" + std::to_string(n) + "^2";
    e.poly = ball_poly(n);
    e.base = 1;
  } else if (name.starts_with("q_")) {
    const int n = parse_index(name, "q_");
    e.description = "(x1+sqrt(2))^2 - x2^2 - ... - x" + std::to_string(n) + "^2 - 1";
    e.poly = hyperboloid_poly(n);
    e.base = 1;
  } else if (name.starts_with("arrowhead_")) {
    const int n = parse_index(name, "arrowhead_");
    e.description = "arrowhead pencil of size " + std::to_string(n + 1);
    e.pencil = arrowhead_pencil(n);
    e.target = ball_poly(n);
    e.base = 1;
  } else if (name == "p3-rep-1" || name == "p3-rep-2") {
    e.description = "2x2 hermitian pencil with determinant 1 - x1^2 - x2^2 - x3^2";
    e.pencil = ball3_pencil(name == "p3-rep-1" ? 1 : 2);
    e.target = ball_poly(3);
    e.base = 1;
  } else if (name == "bw5" || name == "bw5-negated") {
    const Variant v = name == "bw5" ? Variant::kStandard : Variant::kNegated;
    e.description = "Brauer-Weyl pencil, " + to_string(v) + " variant";
    e.pencil = bw5_pencil(v);
    e.target = ball_poly(5);
    e.power = 2;
    e.base = 1;
  } else if (name == "ex57") {
    e.description = "4x4 pencil with determinant q_5^2";
    e.pencil = hyperboloid5_pencil();
    e.target = hyperboloid_poly(5);
    e.power = 2;
    e.base = 1;
  } else if (name == "ex58") {
    e.description = "4x4 pencil with determinant ptilde_4^2";
    e.pencil = shifted_ball4_pencil();
    e.target = shifted_ball_poly(4);
    e.power = 2;
  } else if (name == "ex33") {
    e.description = "2x2 hermitian pencil with determinant ptilde_3";
    e.pencil = shifted_ball3_pencil();
    e.target = shifted_ball_poly(3);
  } else {
    throw FormatError("unknown example '" + std::string(name) + "'");
  }
  return e;
}

}  // namespace rzpencil

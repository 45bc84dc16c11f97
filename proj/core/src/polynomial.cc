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

#include "rzpencil/polynomial.h"

#include <charconv>
#include <optional>

namespace rzpencil {

std::string CoefficientDomain::to_string() const {
  switch (kind) {
    case Kind::kRational:
      return "rational";
    case Kind::kSqrt:
      return "sqrt:" + std::to_string(radicand);
    case Kind::kFloat:
      return "float";
  }
  return "rational";
}

CoefficientDomain CoefficientDomain::parse(std::string_view text) {
  if (text == "rational") return rational();
  if (text == "float") return floating();
  if (text.substr(0, 5) == "sqrt:") {
    long m = 0;
    const auto digits = text.substr(5);
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), m);
    if (ec != std::errc() || ptr != digits.data() + digits.size() || m < 2) {
      throw FormatError("bad radicand in domain '" + std::string(text) + "'");
    }
    const Quad root = Quad::sqrt_of(m);
    if (root.is_rational()) {
      throw FormatError("radicand in domain '" + std::string(text) +
                        "' is a perfect square");
    }
    return sqrt(root.radicand());
  }
  throw FormatError("unknown coefficient domain '" + std::string(text) + "'");
}

CoefficientDomain merge_domains(const CoefficientDomain& a,
                                const CoefficientDomain& b) {
  long m = a.radicand;
  if (b.radicand != 0) {
    if (m != 0 && m != b.radicand) {
      throw DomainError("mixed radicals sqrt(" + std::to_string(m) +
                        ") and sqrt(" + std::to_string(b.radicand) +
                        ") are not supported");
    }
    m = b.radicand;
  }
  CoefficientDomain r;
  r.radicand = m;
  if (a.is_float() || b.is_float()) {
    r.kind = CoefficientDomain::Kind::kFloat;
  } else {
    r.kind = m != 0 ? CoefficientDomain::Kind::kSqrt
                    : CoefficientDomain::Kind::kRational;
  }
  return r;
}

ComplexPoly to_complex(const Poly& p) {
  ComplexPoly r(p.nvars());
  for (const auto& [m, c] : p.terms()) r.add_term(m, CQuad(c));
  r.set_domain(p.domain());
  return r;
}

Poly real_part_checked(const ComplexPoly& p) {
  Poly r(p.nvars());
  for (const auto& [m, c] : p.terms()) {
    if (!c.is_real()) {
      throw VerificationError("polynomial has a nonzero imaginary coefficient " +
                              c.to_string());
    }
    r.add_term(m, c.real());
  }
  r.set_domain(p.domain());
  return r;
}

double evaluate(const Poly& p, std::span<const double> point) {
  if (static_cast<int>(point.size()) != p.nvars()) {
    throw DimensionError("point has " + std::to_string(point.size()) +
                         " coordinates, polynomial has " +
                         std::to_string(p.nvars()) + " variables");
  }
  double sum = 0.0;
  for (const auto& [m, c] : p.terms()) {
    double mono = c.to_double();
    for (int i = 0; i < p.nvars(); ++i) {
      for (int e = 0; e < m[i]; ++e) mono *= point[i];
    }
    sum += mono;
  }
  return sum;
}

UniPoly<Quad> restrict(const Poly& p, std::span<const Quad> direction) {
  if (static_cast<int>(direction.size()) != p.nvars()) {
    throw DimensionError("direction length does not match variable count");
  }
  std::vector<Quad> coeffs(std::max(p.degree(), 0) + 1, Quad(0));
  for (const auto& [m, c] : p.terms()) {
    Quad term = c;
    for (int i = 0; i < p.nvars() && !term.is_zero(); ++i) {
      if (m[i] != 0) term *= pow(direction[i], m[i]);
    }
    coeffs[total_degree(m)] += term;
  }
  return UniPoly<Quad>(std::move(coeffs));
}

UniPoly<double> restrict(const Poly& p, std::span<const double> direction) {
  if (static_cast<int>(direction.size()) != p.nvars()) {
    throw DimensionError("direction length does not match variable count");
  }
  std::vector<double> coeffs(std::max(p.degree(), 0) + 1, 0.0);
  for (const auto& [m, c] : p.terms()) {
    double term = c.to_double();
    for (int i = 0; i < p.nvars(); ++i) {
      for (int e = 0; e < m[i]; ++e) term *= direction[i];
    }
    coeffs[total_degree(m)] += term;
  }
  return UniPoly<double>(std::move(coeffs));
}

Poly homogenize(const Poly& p) {
  if (p.is_zero()) throw PreconditionError("cannot homogenize the zero polynomial");
  const int d = p.degree();
  Poly r(p.nvars() + 1);
  r.set_domain(p.domain());
  for (const auto& [m, c] : p.terms()) {
    Monomial hm(p.nvars() + 1);
    hm[0] = d - total_degree(m);
    std::copy(m.begin(), m.end(), hm.begin() + 1);
    r.add_term(std::move(hm), c);
  }
  return r;
}

Poly embed(const Poly& p, int nvars, int offset) {
  if (offset < 0 || offset + p.nvars() > nvars) {
    throw DimensionError("embedding does not fit");
  }
  Poly r(nvars);
  r.set_domain(p.domain());
  for (const auto& [m, c] : p.terms()) {
    Monomial em(nvars, 0);
    std::copy(m.begin(), m.end(), em.begin() + offset);
    r.add_term(std::move(em), c);
  }
  return r;
}

Poly shifted_homogenize(const Poly& p) {
  if (p.constant_term() != Quad(1)) {
    throw PreconditionError("shifted homogenization requires p(0) = 1");
  }
  const int d = p.degree();
  const int n = p.nvars() + 1;
  const Poly shift = Poly::variable(n, 0) + Poly::constant(n, Quad(1));
  Poly r(n);
  r.set_domain(p.domain());
  for (int j = 0; j <= d; ++j) {
    const Poly part = p.homogeneous_part(j);
    if (part.is_zero()) continue;
    r += embed(part, n, 1) * shift.pow(d - j);
  }
  return r;
}

Poly eliminate_variable(const Poly& p, int var, const Quad& value) {
  if (var < 0 || var >= p.nvars()) throw DimensionError("variable index");
  Poly r(p.nvars() - 1);
  r.set_domain(p.domain());
  for (const auto& [m, c] : p.terms()) {
    Monomial rm;
    rm.reserve(p.nvars() - 1);
    for (int i = 0; i < p.nvars(); ++i) {
      if (i != var) rm.push_back(m[i]);
    }
    r.add_term(std::move(rm), c * pow(value, m[var]));
  }
  return r;
}

std::optional<Poly> shifted_dehomogenize(const Poly& p) {
  if (p.nvars() < 1 || p.degree() < 1) return std::nullopt;
  Poly base = eliminate_variable(p, 0, Quad(0));
  if (base.constant_term() != Quad(1) || base.degree() != p.degree()) {
    return std::nullopt;
  }
  if (shifted_homogenize(base) != p) return std::nullopt;
  return base;
}

namespace {

std::string monomial_string(const Monomial& m, int base) {
  std::string out;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] == 0) continue;
    if (!out.empty()) out += "*";
    out += "x" + std::to_string(static_cast<int>(i) + base);
    if (m[i] > 1) out += "^" + std::to_string(m[i]);
  }
  return out;
}

}  // namespace

std::string to_string(const Poly& p, int base) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : p.terms()) {
    const std::string mono = monomial_string(m, base);
    const bool negative = c.is_rational() && c.sign() < 0;
    const Quad mag = negative ? -c : c;
    std::string body;
    if (mono.empty()) {
      body = mag.to_string();
    } else if (mag.is_one()) {
      body = mono;
    } else {
      body = mag.to_string() + "*" + mono;
    }
    if (first) {
      out = negative ? "-" + body : body;
      first = false;
    } else {
      out += negative ? " - " : " + ";
      out += body;
    }
  }
  return out;
}

}  // namespace rzpencil

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

// Sparse multivariate polynomials with exact coefficients.

#include <algorithm>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "rzpencil/error.h"
#include "rzpencil/quad.h"
#include "rzpencil/univariate.h"

namespace rzpencil {

// Coefficient field tag. Coefficients are always stored exactly; kFloat only
// selects floating point algorithms downstream.
struct CoefficientDomain {
  enum class Kind { kRational, kSqrt, kFloat };
  Kind kind = Kind::kRational;
  long radicand = 0;

  static CoefficientDomain rational() { return {}; }
  static CoefficientDomain sqrt(long m) { return {Kind::kSqrt, m}; }
  static CoefficientDomain floating() { return {Kind::kFloat, 0}; }

  bool is_float() const { return kind == Kind::kFloat; }
  // "rational", "sqrt:<m>" or "float".
  std::string to_string() const;
  static CoefficientDomain parse(std::string_view text);

  friend bool operator==(const CoefficientDomain&,
                         const CoefficientDomain&) = default;
};

// Throws DomainError when two different radicands meet.
CoefficientDomain merge_domains(const CoefficientDomain& a,
                                const CoefficientDomain& b);

using Monomial = std::vector<int>;

inline int total_degree(const Monomial& m) {
  int d = 0;
  for (int e : m) d += e;
  return d;
}

// Graded order: lower total degree first, then larger exponents of earlier
// variables first (so x0^2 precedes x0*x1 precedes x1^2). This is a monomial
// order, so the last element of a term map is a valid leading term.
struct GradedOrder {
  bool operator()(const Monomial& a, const Monomial& b) const {
    const int da = total_degree(a);
    const int db = total_degree(b);
    if (da != db) return da < db;
    return b < a;
  }
};

template <class Coeff>
class BasicPoly {
 public:
  using Terms = std::map<Monomial, Coeff, GradedOrder>;

  BasicPoly() = default;
  explicit BasicPoly(int nvars) : nvars_(nvars) {
    if (nvars < 0) throw DimensionError("negative variable count");
  }

  static BasicPoly constant(int nvars, const Coeff& c) {
    BasicPoly p(nvars);
    p.add_term(Monomial(nvars, 0), c);
    return p;
  }
  static BasicPoly variable(int nvars, int index) {
    if (index < 0 || index >= nvars) throw DimensionError("variable index");
    BasicPoly p(nvars);
    Monomial m(nvars, 0);
    m[index] = 1;
    p.add_term(std::move(m), Coeff(1));
    return p;
  }

  int nvars() const { return nvars_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }

  // Largest total degree over stored terms; -1 for the zero polynomial.
  int degree() const {
    return terms_.empty() ? -1 : total_degree(terms_.rbegin()->first);
  }

  const CoefficientDomain& domain() const { return domain_; }
  void set_domain(const CoefficientDomain& d) {
    domain_ = merge_domains(domain_, d);
    if (d.kind == CoefficientDomain::Kind::kFloat) {
      domain_.kind = CoefficientDomain::Kind::kFloat;
    }
  }

  Coeff coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Coeff(0) : it->second;
  }
  Coeff constant_term() const { return coefficient(Monomial(nvars_, 0)); }

  // Accumulates c into the coefficient of m; zero results are erased.
  void add_term(Monomial m, const Coeff& c) {
    if (static_cast<int>(m.size()) != nvars_) {
      throw DimensionError("monomial length does not match variable count");
    }
    if (c.is_zero()) return;
    note_radicand(c.radicand());
    auto [it, inserted] = terms_.try_emplace(std::move(m), c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  BasicPoly operator-() const {
    BasicPoly r(*this);
    for (auto& [m, c] : r.terms_) c = -c;
    return r;
  }
  BasicPoly& operator+=(const BasicPoly& o) {
    check_compatible(o);
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    domain_ = merge(domain_, o.domain_);
    return *this;
  }
  BasicPoly& operator-=(const BasicPoly& o) {
    check_compatible(o);
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    domain_ = merge(domain_, o.domain_);
    return *this;
  }
  friend BasicPoly operator+(BasicPoly a, const BasicPoly& b) { return a += b; }
  friend BasicPoly operator-(BasicPoly a, const BasicPoly& b) { return a -= b; }

  friend BasicPoly operator*(const BasicPoly& a, const BasicPoly& b) {
    a.check_compatible(b);
    BasicPoly r(a.nvars_);
    r.domain_ = merge(a.domain_, b.domain_);
    Monomial m(a.nvars_);
    for (const auto& [ma, ca] : a.terms_) {
      for (const auto& [mb, cb] : b.terms_) {
        for (int i = 0; i < a.nvars_; ++i) m[i] = ma[i] + mb[i];
        r.add_term(m, ca * cb);
      }
    }
    return r;
  }
  BasicPoly& operator*=(const BasicPoly& o) { return *this = *this * o; }

  BasicPoly scaled(const Coeff& s) const {
    BasicPoly r(nvars_);
    r.domain_ = domain_;
    for (const auto& [m, c] : terms_) r.add_term(m, c * s);
    return r;
  }

  BasicPoly pow(int r) const {
    if (r < 0) throw PreconditionError("negative power");
    BasicPoly result = constant(nvars_, Coeff(1));
    result.domain_ = domain_;
    BasicPoly base = *this;
    while (r > 0) {
      if (r & 1) result = result * base;
      r >>= 1;
      if (r > 0) base = base * base;
    }
    return result;
  }

  // Terms of total degree exactly j.
  BasicPoly homogeneous_part(int j) const {
    BasicPoly r(nvars_);
    r.domain_ = domain_;
    for (const auto& [m, c] : terms_) {
      if (total_degree(m) == j) r.add_term(m, c);
    }
    return r;
  }

  bool is_homogeneous() const {
    if (terms_.empty()) return true;
    const int d = degree();
    for (const auto& [m, c] : terms_) {
      if (total_degree(m) != d) return false;
    }
    return true;
  }

  BasicPoly derivative(int var) const {
    if (var < 0 || var >= nvars_) throw DimensionError("variable index");
    BasicPoly r(nvars_);
    r.domain_ = domain_;
    for (const auto& [m, c] : terms_) {
      if (m[var] == 0) continue;
      Monomial dm = m;
      dm[var] -= 1;
      r.add_term(std::move(dm), c * Coeff(m[var]));
    }
    return r;
  }

  // Exact evaluation at a point with coordinates in Quad.
  Coeff evaluate(std::span<const Quad> point) const {
    if (static_cast<int>(point.size()) != nvars_) {
      throw DimensionError("point has " + std::to_string(point.size()) +
                           " coordinates, polynomial has " +
                           std::to_string(nvars_) + " variables");
    }
    const int d = std::max(degree(), 0);
    std::vector<std::vector<Quad>> powers(nvars_);
    for (int i = 0; i < nvars_; ++i) {
      powers[i].reserve(d + 1);
      powers[i].push_back(Quad(1));
      for (int e = 1; e <= d; ++e) powers[i].push_back(powers[i].back() * point[i]);
    }
    Coeff sum(0);
    for (const auto& [m, c] : terms_) {
      Quad mono(1);
      for (int i = 0; i < nvars_; ++i) {
        if (m[i] != 0) mono *= powers[i][m[i]];
      }
      sum += c * Coeff(mono);
    }
    return sum;
  }

  // Exact division; throws VerificationError if `divisor` does not divide.
  BasicPoly divide_exact(const BasicPoly& divisor) const {
    check_compatible(divisor);
    if (divisor.is_zero()) throw DomainError("division by zero polynomial");
    const auto& [lm, lc] = *divisor.terms_.rbegin();
    BasicPoly remainder = *this;
    BasicPoly quotient(nvars_);
    Monomial qm(nvars_);
    while (!remainder.is_zero()) {
      const auto& [rm, rc] = *remainder.terms_.rbegin();
      for (int i = 0; i < nvars_; ++i) {
        qm[i] = rm[i] - lm[i];
        if (qm[i] < 0) throw VerificationError("inexact polynomial division");
      }
      const Coeff qc = rc / lc;
      BasicPoly step(nvars_);
      step.add_term(qm, qc);
      quotient.add_term(qm, qc);
      remainder -= step * divisor;
    }
    quotient.domain_ = merge(domain_, divisor.domain_);
    return quotient;
  }

  friend bool operator==(const BasicPoly& a, const BasicPoly& b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const BasicPoly& a, const BasicPoly& b) {
    return !(a == b);
  }

 private:
  static CoefficientDomain merge(const CoefficientDomain& a,
                                 const CoefficientDomain& b) {
    CoefficientDomain r = merge_domains(a, b);
    return r;
  }
  void check_compatible(const BasicPoly& o) const {
    if (o.nvars_ != nvars_) {
      throw DimensionError("polynomials have different variable counts (" +
                           std::to_string(nvars_) + " vs " +
                           std::to_string(o.nvars_) + ")");
    }
  }
  void note_radicand(long m) {
    if (m == 0) return;
    domain_ = merge_domains(domain_, CoefficientDomain::sqrt(m));
  }

  int nvars_ = 0;
  Terms terms_;
  CoefficientDomain domain_;
};

// Real polynomial with coefficients in Q or Q(sqrt m).
using Poly = BasicPoly<Quad>;
// Polynomial over Q(sqrt m)(i); used for symbolic pencil determinants.
using ComplexPoly = BasicPoly<CQuad>;

ComplexPoly to_complex(const Poly& p);
// Throws VerificationError if any coefficient has a nonzero imaginary part.
Poly real_part_checked(const ComplexPoly& p);

double evaluate(const Poly& p, std::span<const double> point);

// p(t*a) as a univariate polynomial in t.
UniPoly<Quad> restrict(const Poly& p, std::span<const Quad> direction);
UniPoly<double> restrict(const Poly& p, std::span<const double> direction);

// x0^d * p(x/x0); variable 0 is new, old variable i moves to i+1.
Poly homogenize(const Poly& p);
// (x0+1)^d * p(x/(x0+1)); requires p(0) = 1.
Poly shifted_homogenize(const Poly& p);
// Substitutes x_var = value and removes the variable.
Poly eliminate_variable(const Poly& p, int var, const Quad& value);
// Inverse of shifted_homogenize when `p` has that structure.
std::optional<Poly> shifted_dehomogenize(const Poly& p);
// Same polynomial with an extra trailing or leading variable, unused.
Poly embed(const Poly& p, int nvars, int offset);

struct ParseOptions {
  // First variable index: 0 reads x0..x{n-1}, 1 reads x1..xn.
  int base = 0;
  // Accept x,y,z and a,b,c as names for the first three variables.
  bool aliases = true;
};

Poly parse_poly(std::string_view text, int nvars, const ParseOptions& options = {});
// Number of variables implied by the highest variable name in `text`.
int infer_nvars(std::string_view text, const ParseOptions& options = {});
// Constant expression that may use the imaginary unit `i`.
CQuad parse_complex_constant(std::string_view text);
Quad parse_real_constant(std::string_view text);

// Canonical text: graded order, coefficients as n/d or (u+v*sqrt(m)).
std::string to_string(const Poly& p, int base = 0);

}  // namespace rzpencil

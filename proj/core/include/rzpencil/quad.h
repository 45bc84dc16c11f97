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

// Exact scalars: elements u + v*sqrt(m) of a real quadratic extension of the
// rationals, and complex numbers over that field.

#include <gmpxx.h>

#include <complex>
#include <optional>
#include <string>

namespace rzpencil {

class Quad {
 public:
  Quad() = default;
  Quad(int value) : u_(value) {}  // NOLINT(google-explicit-constructor)
  Quad(long value) : u_(value) {}  // NOLINT(google-explicit-constructor)
  Quad(mpq_class value) : u_(std::move(value)) {  // NOLINT
    u_.canonicalize();
  }
  Quad(mpq_class rational, mpq_class radical, long radicand);

  // sqrt(m) for a positive integer m. Square factors are pulled out, so
  // sqrt(8) becomes 2*sqrt(2) and sqrt(9) becomes 3.
  static Quad sqrt_of(long m);
  static Quad from_double(double value);  // exact binary value

  const mpq_class& rational_part() const { return u_; }
  const mpq_class& radical_part() const { return v_; }
  // 0 when the value is rational.
  long radicand() const { return m_; }

  bool is_zero() const { return sgn(u_) == 0 && sgn(v_) == 0; }
  bool is_rational() const { return m_ == 0; }
  bool is_one() const { return m_ == 0 && u_ == 1; }

  // Exact sign of u + v*sqrt(m).
  int sign() const;
  double to_double() const;
  Quad abs() const { return sign() < 0 ? -*this : *this; }
  // u - v*sqrt(m)
  Quad radical_conjugate() const;

  Quad operator-() const;
  Quad& operator+=(const Quad& other);
  Quad& operator-=(const Quad& other);
  Quad& operator*=(const Quad& other);
  Quad& operator/=(const Quad& other);

  friend Quad operator+(Quad a, const Quad& b) { return a += b; }
  friend Quad operator-(Quad a, const Quad& b) { return a -= b; }
  friend Quad operator*(Quad a, const Quad& b) { return a *= b; }
  friend Quad operator/(Quad a, const Quad& b) { return a /= b; }
  friend bool operator==(const Quad& a, const Quad& b) {
    return a.m_ == b.m_ && a.u_ == b.u_ && a.v_ == b.v_;
  }
  friend bool operator!=(const Quad& a, const Quad& b) { return !(a == b); }
  friend bool operator<(const Quad& a, const Quad& b) {
    return (a - b).sign() < 0;
  }
  friend bool operator>(const Quad& a, const Quad& b) { return b < a; }
  friend bool operator<=(const Quad& a, const Quad& b) { return !(b < a); }
  friend bool operator>=(const Quad& a, const Quad& b) { return !(a < b); }

  // "n", "n/d" or "(n/d+n/d*sqrt(m))". Parenthesised whenever irrational so
  // the text can be dropped into a product.
  std::string to_string() const;

 private:
  void normalize();
  static long merge(long a, long b);

  mpq_class u_{0};
  mpq_class v_{0};
  long m_ = 0;
};

Quad pow(const Quad& base, int exponent);

// Square root of a nonnegative rational inside Q or Q(sqrt m); nullopt for
// irrational inputs or numbers too large to factor.
std::optional<Quad> exact_sqrt(const Quad& x);

// Gaussian numbers over Quad.
class CQuad {
 public:
  CQuad() = default;
  CQuad(Quad re) : re_(std::move(re)) {}  // NOLINT(google-explicit-constructor)
  CQuad(int re) : re_(re) {}  // NOLINT(google-explicit-constructor)
  CQuad(Quad re, Quad im) : re_(std::move(re)), im_(std::move(im)) {}

  static CQuad i() { return CQuad(Quad(0), Quad(1)); }

  const Quad& real() const { return re_; }
  const Quad& imag() const { return im_; }
  bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
  bool is_real() const { return im_.is_zero(); }
  bool is_one() const { return re_.is_one() && im_.is_zero(); }
  long radicand() const;

  CQuad conj() const { return CQuad(re_, -im_); }
  Quad norm2() const { return re_ * re_ + im_ * im_; }
  std::complex<double> to_complex() const {
    return {re_.to_double(), im_.to_double()};
  }

  CQuad operator-() const { return CQuad(-re_, -im_); }
  CQuad& operator+=(const CQuad& o);
  CQuad& operator-=(const CQuad& o);
  CQuad& operator*=(const CQuad& o);
  CQuad& operator/=(const CQuad& o);

  friend CQuad operator+(CQuad a, const CQuad& b) { return a += b; }
  friend CQuad operator-(CQuad a, const CQuad& b) { return a -= b; }
  friend CQuad operator*(CQuad a, const CQuad& b) { return a *= b; }
  friend CQuad operator/(CQuad a, const CQuad& b) { return a /= b; }
  friend bool operator==(const CQuad& a, const CQuad& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }
  friend bool operator!=(const CQuad& a, const CQuad& b) { return !(a == b); }

  // "re", "re+im*i" or "re-im*i"; no whitespace.
  std::string to_string() const;

 private:
  Quad re_;
  Quad im_;
};

// Best rational approximation with denominator at most `max_denominator`.
mpq_class rational_approximation(double value, long max_denominator);

}  // namespace rzpencil

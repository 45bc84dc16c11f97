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

#include "rzpencil/quad.h"

#include <cmath>
#include <limits>

#include "rzpencil/error.h"

namespace rzpencil {

Quad::Quad(mpq_class rational, mpq_class radical, long radicand)
    : u_(std::move(rational)), v_(std::move(radical)), m_(radicand) {
  u_.canonicalize();
  v_.canonicalize();
  if (m_ < 0) throw DomainError("negative radicand");
  if (m_ == 1) {
    u_ += v_;
    v_ = 0;
    m_ = 0;
  }
  normalize();
}

Quad Quad::sqrt_of(long m) {
  if (m <= 0) throw DomainError("sqrt of a non-positive integer");
  long coefficient = 1;
  for (long f = 2; f * f <= m; ++f) {
    while (m % (f * f) == 0) {
      coefficient *= f;
      m /= f * f;
    }
  }
  if (m == 1) return Quad(coefficient);
  return Quad(mpq_class(0), mpq_class(coefficient), m);
}

Quad Quad::from_double(double value) {
  if (!std::isfinite(value)) throw DomainError("non-finite value");
  return Quad(mpq_class(value));
}

void Quad::normalize() {
  if (sgn(v_) == 0) m_ = 0;
}

long Quad::merge(long a, long b) {
  if (a == 0) return b;
  if (b == 0 || a == b) return a;
  throw DomainError("mixed radicals sqrt(" + std::to_string(a) + ") and sqrt(" +
                    std::to_string(b) + ") are not supported");
}

int Quad::sign() const {
  const int su = sgn(u_);
  const int sv = sgn(v_);
  if (sv == 0) return su;
  if (su == 0 || su == sv) return sv;
  // Opposite signs: compare u^2 against m v^2.
  const mpq_class lhs = u_ * u_;
  const mpq_class rhs = v_ * v_ * m_;
  if (lhs == rhs) return 0;  // impossible for square-free m, kept for safety
  return lhs > rhs ? su : sv;
}

double Quad::to_double() const {
  if (m_ == 0) return u_.get_d();
  return u_.get_d() + v_.get_d() * std::sqrt(static_cast<double>(m_));
}

Quad Quad::radical_conjugate() const {
  Quad r = *this;
  r.v_ = -r.v_;
  return r;
}

Quad Quad::operator-() const {
  Quad r = *this;
  r.u_ = -r.u_;
  r.v_ = -r.v_;
  return r;
}

Quad& Quad::operator+=(const Quad& other) {
  m_ = merge(m_, other.m_);
  u_ += other.u_;
  if (other.m_ != 0) v_ += other.v_;
  normalize();
  return *this;
}

Quad& Quad::operator-=(const Quad& other) {
  m_ = merge(m_, other.m_);
  u_ -= other.u_;
  if (other.m_ != 0) v_ -= other.v_;
  normalize();
  return *this;
}

Quad& Quad::operator*=(const Quad& other) {
  if (other.m_ == 0) {
    u_ *= other.u_;
    v_ *= other.u_;
    normalize();
    return *this;
  }
  if (m_ == 0) {
    v_ = u_ * other.v_;
    u_ *= other.u_;
    m_ = other.m_;
    normalize();
    return *this;
  }
  const long m = merge(m_, other.m_);
  mpq_class u = u_ * other.u_ + v_ * other.v_ * m;
  mpq_class v = u_ * other.v_ + v_ * other.u_;
  u_ = std::move(u);
  v_ = std::move(v);
  m_ = m;
  normalize();
  return *this;
}

Quad& Quad::operator/=(const Quad& other) {
  if (other.is_zero()) throw DomainError("division by zero");
  if (other.m_ == 0) {
    u_ /= other.u_;
    v_ /= other.u_;
    normalize();
    return *this;
  }
  const mpq_class norm =
      other.u_ * other.u_ - other.v_ * other.v_ * other.m_;
  *this *= other.radical_conjugate();
  u_ /= norm;
  v_ /= norm;
  normalize();
  return *this;
}

std::string Quad::to_string() const {
  if (m_ == 0) return u_.get_str();
  std::string radical = "sqrt(" + std::to_string(m_) + ")";
  mpq_class mag = ::abs(v_);
  std::string vpart = mag == 1 ? radical : mag.get_str() + "*" + radical;
  std::string out = "(";
  if (sgn(u_) != 0) {
    out += u_.get_str();
    out += sgn(v_) > 0 ? "+" : "-";
  } else if (sgn(v_) < 0) {
    out += "-";
  }
  out += vpart;
  out += ")";
  return out;
}

Quad pow(const Quad& base, int exponent) {
  if (exponent < 0) throw DomainError("negative exponent");
  Quad result(1);
  Quad b = base;
  while (exponent > 0) {
    if (exponent & 1) result *= b;
    exponent >>= 1;
    if (exponent > 0) b *= b;
  }
  return result;
}

std::optional<Quad> exact_sqrt(const Quad& x) {
  if (!x.is_rational() || x.sign() < 0) return std::nullopt;
  if (x.is_zero()) return Quad(0);
  const mpq_class& q = x.rational_part();
  const mpz_class prod = q.get_num() * q.get_den();
  if (!prod.fits_slong_p() || prod > 1000000000000L) return std::nullopt;
  return Quad::sqrt_of(prod.get_si()) / Quad(mpq_class(q.get_den()));
}

long CQuad::radicand() const {
  return re_.radicand() != 0 ? re_.radicand() : im_.radicand();
}

CQuad& CQuad::operator+=(const CQuad& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

CQuad& CQuad::operator-=(const CQuad& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

CQuad& CQuad::operator*=(const CQuad& o) {
  if (o.im_.is_zero()) {
    re_ *= o.re_;
    im_ *= o.re_;
    return *this;
  }
  if (im_.is_zero()) {
    im_ = re_ * o.im_;
    re_ *= o.re_;
    return *this;
  }
  Quad re = re_ * o.re_ - im_ * o.im_;
  Quad im = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

CQuad& CQuad::operator/=(const CQuad& o) {
  if (o.im_.is_zero()) {
    re_ /= o.re_;
    im_ /= o.re_;
    return *this;
  }
  const Quad n = o.norm2();
  *this *= o.conj();
  re_ /= n;
  im_ /= n;
  return *this;
}

std::string CQuad::to_string() const {
  if (im_.is_zero()) return re_.to_string();
  std::string out;
  const bool negative = im_.sign() < 0;
  const Quad mag = negative ? -im_ : im_;
  const std::string imag = mag.is_one() ? "i" : mag.to_string() + "*i";
  if (!re_.is_zero()) {
    out = re_.to_string();
    out += negative ? "-" : "+";
  } else if (negative) {
    out = "-";
  }
  return out + imag;
}

mpq_class rational_approximation(double value, long max_denominator) {
  if (!std::isfinite(value) || std::fabs(value) > 1e15) {
    throw DomainError("value out of range for rational approximation");
  }
  const bool negative = value < 0;
  long double x = std::fabs(static_cast<long double>(value));
  long long h0 = 0, h1 = 1, k0 = 1, k1 = 0;
  for (int iter = 0; iter < 64; ++iter) {
    const long double a_ld = std::floor(x);
    const long long a = static_cast<long long>(a_ld);
    const long long h2 = a * h1 + h0;
    const long long k2 = a * k1 + k0;
    if (k2 > max_denominator) break;
    h0 = h1;
    h1 = h2;
    k0 = k1;
    k1 = k2;
    const long double frac = x - a_ld;
    if (frac < 1e-18L) break;
    x = 1.0L / frac;
  }
  mpq_class r(mpz_class(static_cast<long>(h1)), mpz_class(static_cast<long>(k1)));
  r.canonicalize();
  return negative ? mpq_class(-r) : r;
}

}  // namespace rzpencil

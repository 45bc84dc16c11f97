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

#include "rzpencil/realzero.h"

#include <algorithm>
#include <cmath>
#include <complex>

namespace rzpencil {

int RootProfile::real_count() const {
  int c = 0;
  for (const auto& r : real_roots) c += r.multiplicity;
  return c;
}

namespace {

void check_root_input(int degree, int ambient_degree) {
  if (degree < 0) throw DomainError("roots of the zero polynomial");
  if (ambient_degree < degree) {
    throw PreconditionError("ambient degree " + std::to_string(ambient_degree) +
                            " below polynomial degree " + std::to_string(degree));
  }
}

}  // namespace

RootProfile real_roots(const UniPoly<Quad>& u, int ambient_degree) {
  check_root_input(u.degree(), ambient_degree);
  RootProfile profile;
  profile.method = RootMethod::kExactSturm;
  profile.degree_drop = ambient_degree - u.degree();
  int nonreal = 0;
  const auto factors = squarefree_decomposition(u);
  for (std::size_t j = 0; j < factors.size(); ++j) {
    const int mult = static_cast<int>(j) + 1;
    if (factors[j].degree() <= 0) continue;
    const auto roots = isolate_real_roots(factors[j]);
    for (double r : roots) profile.real_roots.push_back({r, mult});
    nonreal += mult * (factors[j].degree() - static_cast<int>(roots.size()));
  }
  profile.complex_pair_count = nonreal / 2;
  std::sort(profile.real_roots.begin(), profile.real_roots.end(),
            [](const RealRoot& a, const RealRoot& b) { return a.value < b.value; });
  return profile;
}

RootProfile real_roots(const UniPoly<double>& u, int ambient_degree) {
  check_root_input(u.degree(), ambient_degree);
  RootProfile profile;
  profile.method = RootMethod::kFloatEig;
  profile.degree_drop = ambient_degree - u.degree();
  const int m = u.degree();
  if (m == 0) return profile;
  Eigen::MatrixXd companion = Eigen::MatrixXd::Zero(m, m);
  for (int i = 1; i < m; ++i) companion(i, i - 1) = 1.0;
  for (int i = 0; i < m; ++i) companion(i, m - 1) = -u.coefficient(i) / u.leading();
  Eigen::EigenSolver<Eigen::MatrixXd> solver(companion, false);
  std::vector<double> reals;
  int nonreal = 0;
  for (int i = 0; i < m; ++i) {
    const std::complex<double> z = solver.eigenvalues()(i);
    if (std::abs(z.imag()) <= kTauRoot * (1.0 + std::abs(z))) {
      reals.push_back(z.real());
    } else {
      ++nonreal;
    }
  }
  std::sort(reals.begin(), reals.end());
  for (double r : reals) {
    if (!profile.real_roots.empty()) {
      RealRoot& last = profile.real_roots.back();
      if (std::abs(r - last.value) <= 1e-6 * (1.0 + std::abs(r))) {
        last.value = (last.value * last.multiplicity + r) / (last.multiplicity + 1);
        ++last.multiplicity;
        continue;
      }
    }
    profile.real_roots.push_back({r, 1});
  }
  profile.complex_pair_count = nonreal / 2;
  return profile;
}

bool is_real_rooted(const UniPoly<Quad>& u) {
  if (u.is_zero()) throw DomainError("roots of the zero polynomial");
  for (const auto& f : squarefree_decomposition(u)) {
    if (f.degree() <= 0) continue;
    if (SturmSequence(f).count_all() != f.degree()) return false;
  }
  return true;
}

namespace {

void require_normalized(const Poly& p) {
  if (p.constant_term() != Quad(1)) {
    throw PreconditionError("polynomial must satisfy p(0) = 1");
  }
}

std::vector<Quad> axis(int n, int i) {
  std::vector<Quad> a(n, Quad(0));
  a[i] = Quad(1);
  return a;
}

RzVerdict quadratic_verdict(const Poly& p) {
  RzVerdict v;
  v.mode = RzVerdict::Mode::kExact;
  v.method = "quadratic-psd";
  const QuadraticData q = quadratic_form(p);
  v.is_rz = quadratic_rz_check(q);
  if (!v.is_rz) {
    v.witness = negative_direction(q.G);
    if (!v.witness || is_real_rooted(restrict(p, *v.witness))) {
      throw VerificationError("quadratic witness failed exact re-check");
    }
  }
  return v;
}

RzVerdict sampled_verdict(const Poly& p, const RzOptions& options) {
  RzVerdict v;
  v.mode = RzVerdict::Mode::kSampled;
  v.method = "sampled-sturm";
  v.seed = options.seed;
  const int n = p.nvars();
  auto check = [&](const std::vector<Quad>& a) {
    ++v.directions_checked;
    if (!is_real_rooted(restrict(p, a))) {
      v.is_rz = false;
      v.witness = a;
      return false;
    }
    return true;
  };
  v.is_rz = true;
  for (int i = 0; i < n; ++i) {
    if (!check(axis(n, i))) return v;
  }
  if (n >= 2 && n <= 12) {
    for (unsigned long mask = 0; mask < (1UL << (n - 1)); ++mask) {
      std::vector<Quad> a(n, Quad(1));
      for (int i = 1; i < n; ++i) {
        if (mask & (1UL << (i - 1))) a[i] = Quad(-1);
      }
      if (!check(a)) return v;
    }
  }
  for (int s = 0; s < options.samples; ++s) {
    Rng rng(trial_seed(options.seed, static_cast<std::uint64_t>(s)));
    if (!check(rng.rational_direction(n))) return v;
  }
  return v;
}

}  // namespace

RzVerdict is_real_zero(const Poly& p, const RzOptions& options) {
  require_normalized(p);
  using Strategy = RzOptions::Strategy;
  if (options.strategy == Strategy::kQuadratic) {
    if (p.degree() != 2) throw PreconditionError("quadratic strategy needs degree 2");
    return quadratic_verdict(p);
  }
  if (options.strategy == Strategy::kAuto) {
    if (p.degree() <= 1) {
      RzVerdict v;
      v.is_rz = true;
      v.mode = RzVerdict::Mode::kExact;
      v.method = "linear";
      return v;
    }
    if (p.degree() == 2) return quadratic_verdict(p);
  }
  return sampled_verdict(p, options);
}

bool rigid_membership(const Poly& p, std::span<const Quad> a) {
  require_normalized(p);
  const UniPoly<Quad> u = restrict(p, a);
  if (u.degree() <= 0) return true;
  const SturmSequence sturm(u);
  int inside = sturm.count(Quad(0), Quad(1));
  if (u(Quad(1)).is_zero()) --inside;
  return inside == 0;
}

bool rigid_membership(const Poly& p, std::span<const double> a) {
  std::vector<Quad> exact;
  exact.reserve(a.size());
  for (double x : a) exact.push_back(Quad::from_double(x));
  return rigid_membership(p, exact);
}

std::optional<Eigen::MatrixXd> QuadraticData::C_double() const {
  if (C_exact) return to_eigen(*C_exact);
  return C_numeric;
}

Poly QuadraticData::reconstruct() const {
  Poly r = Poly::constant(n, Quad(1));
  for (int i = 0; i < n; ++i) {
    r += Poly::variable(n, i).scaled(b[i]);
    for (int j = 0; j < n; ++j) {
      r += (Poly::variable(n, i) * Poly::variable(n, j)).scaled(A(i, j));
    }
  }
  return r;
}

namespace {

std::optional<QMatrix> exact_matrix_sqrt(const QMatrix& g) {
  const int n = g.rows();
  bool diagonal = true;
  for (int i = 0; i < n && diagonal; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i != j && !g(i, j).is_zero()) {
        diagonal = false;
        break;
      }
    }
  }
  if (diagonal) {
    QMatrix c(n, n);
    long radicand = 0;
    for (int i = 0; i < n; ++i) {
      const auto s = exact_sqrt(g(i, i));
      if (!s) return std::nullopt;
      if (s->radicand() != 0) {
        if (radicand != 0 && radicand != s->radicand()) return std::nullopt;
        radicand = s->radicand();
      }
      c(i, i) = *s;
    }
    return c;
  }
  // Any symmetric S with S^2 = G will do, not only the PSD root: try the
  // sign patterns of the eigenvalue square roots, reconstruct rationally and
  // accept only an exact match.
  if (n > 12) return std::nullopt;
  const Eigen::MatrixXd gd = to_eigen(g);
  const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(gd);
  if (eig.info() != Eigen::Success) return std::nullopt;
  const double scale = std::max(1.0, eig.eigenvalues().cwiseAbs().maxCoeff());
  Eigen::VectorXd roots(n);
  for (int i = 0; i < n; ++i) {
    const double l = eig.eigenvalues()(i);
    if (l < -kTauPsd * scale) return std::nullopt;
    roots(i) = std::sqrt(std::max(l, 0.0));
  }
  const Eigen::MatrixXd& u = eig.eigenvectors();
  for (unsigned long mask = 0; mask < (1ul << n); ++mask) {
    Eigen::VectorXd signed_roots = roots;
    bool redundant = false;
    for (int i = 0; i < n; ++i) {
      if (((mask >> i) & 1ul) == 0) continue;
      if (roots(i) == 0.0) redundant = true;
      signed_roots(i) = -roots(i);
    }
    if (redundant) continue;
    const Eigen::MatrixXd numeric = u * signed_roots.asDiagonal() * u.transpose();
    QMatrix c(n, n);
    bool ok = true;
    for (int i = 0; i < n && ok; ++i) {
      for (int j = i; j < n; ++j) {
        const double v = numeric(i, j);
        if (std::abs(v) > 1e12) {
          ok = false;
          break;
        }
        c(i, j) = Quad(rational_approximation(v, 1000000));
        c(j, i) = c(i, j);
      }
    }
    if (ok && c * c == g) return c;
  }
  return std::nullopt;
}

}  // namespace

QuadraticData quadratic_form(const Poly& p) {
  if (p.degree() != 2) {
    throw PreconditionError("quadratic form needs degree 2, got " + std::to_string(p.degree()));
  }
  require_normalized(p);
  QuadraticData q;
  const int n = p.nvars();
  q.n = n;
  q.A = QMatrix(n, n);
  q.b.assign(n, Quad(0));
  for (const auto& [m, c] : p.terms()) {
    const int deg = total_degree(m);
    if (deg == 1) {
      for (int i = 0; i < n; ++i) {
        if (m[i] == 1) q.b[i] = c;
      }
    } else if (deg == 2) {
      std::vector<int> idx;
      for (int i = 0; i < n; ++i) {
        for (int e = 0; e < m[i]; ++e) idx.push_back(i);
      }
      if (idx[0] == idx[1]) {
        q.A(idx[0], idx[0]) = c;
      } else {
        const Quad half = c / Quad(2);
        q.A(idx[0], idx[1]) = half;
        q.A(idx[1], idx[0]) = half;
      }
    }
  }
  q.G = QMatrix(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) q.G(i, j) = q.b[i] * q.b[j] / Quad(4) - q.A(i, j);
  }
  if (!is_psd_exact(to_complex(q.G))) return q;
  q.C_exact = exact_matrix_sqrt(q.G);
  if (!q.C_exact) {
    const auto numeric = psd_sqrt(to_eigen(to_complex(q.G)), kTauPsd * std::max(1.0, max_norm(to_eigen(to_complex(q.G)))));
    if (numeric) q.C_numeric = numeric->real();
  }
  return q;
}

bool quadratic_rz_check(const QuadraticData& q) { return is_psd_exact(to_complex(q.G)); }

namespace {

std::optional<std::vector<Quad>> negative_direction_rec(const QMatrix& g) {
  const int n = g.rows();
  if (n == 0) return std::nullopt;
  int pivot = -1;
  for (int i = 0; i < n; ++i) {
    const int s = g(i, i).sign();
    if (s < 0) {
      std::vector<Quad> v(n, Quad(0));
      v[i] = Quad(1);
      return v;
    }
    if (s > 0 && pivot < 0) pivot = i;
  }
  if (pivot < 0) {
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        if (g(i, j).is_zero()) continue;
        std::vector<Quad> v(n, Quad(0));
        v[i] = Quad(1);
        v[j] = g(i, j).sign() > 0 ? Quad(-1) : Quad(1);
        return v;
      }
    }
    return std::nullopt;
  }
  QMatrix s(n - 1, n - 1);
  std::vector<int> rest;
  for (int i = 0; i < n; ++i) {
    if (i != pivot) rest.push_back(i);
  }
  for (int a = 0; a < n - 1; ++a) {
    for (int b = 0; b < n - 1; ++b) {
      s(a, b) = g(rest[a], rest[b]) - g(rest[a], pivot) * g(pivot, rest[b]) / g(pivot, pivot);
    }
  }
  const auto w = negative_direction_rec(s);
  if (!w) return std::nullopt;
  std::vector<Quad> v(n, Quad(0));
  Quad dot(0);
  for (int a = 0; a < n - 1; ++a) {
    v[rest[a]] = (*w)[a];
    dot += g(pivot, rest[a]) * (*w)[a];
  }
  v[pivot] = -dot / g(pivot, pivot);
  return v;
}

}  // namespace

std::optional<std::vector<Quad>> negative_direction(const QMatrix& g) {
  auto v = negative_direction_rec(g);
  if (!v) return v;
  Quad form(0);
  for (int i = 0; i < g.rows(); ++i) {
    for (int j = 0; j < g.cols(); ++j) form += (*v)[i] * g(i, j) * (*v)[j];
  }
  if (form.sign() >= 0) throw VerificationError("negative direction failed exact check");
  return v;
}

SimpleZerosResult simple_zeros_sampled(const Poly& p, int samples, std::uint64_t seed) {
  require_normalized(p);
  SimpleZerosResult result;
  result.seed = seed;
  const int d = p.degree();
  const int n = p.nvars();
  if (d <= 1) return result;
  std::vector<Poly> parts;
  for (int j = 0; j <= d; ++j) parts.push_back(p.homogeneous_part(j));
  for (int s = 0; s < samples; ++s) {
    Rng rng(trial_seed(seed, static_cast<std::uint64_t>(s)));
    const std::vector<Quad> a = rng.rational_direction(n);
    std::vector<Quad> coeffs(d + 1, Quad(0));
    for (int j = 0; j <= d; ++j) {
      const Quad value = parts[j].evaluate(a);
      coeffs[d - j] = (d - j) % 2 == 0 ? value : -value;
    }
    const UniPoly<Quad> h(std::move(coeffs));
    ++result.directions_checked;
    if (gcd(h, h.derivative()).degree() > 0) {
      result.simple = false;
      result.witness = a;
      return result;
    }
  }
  return result;
}

}  // namespace rzpencil

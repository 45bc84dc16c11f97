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

#include "rzpencil/clifford.h"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>

namespace rzpencil {

std::string to_string(Variant v) { return v == Variant::kNegated ? "negated" : "standard"; }

Variant parse_variant(std::string_view text) {
  if (text == "standard") return Variant::kStandard;
  if (text == "negated") return Variant::kNegated;
  throw FormatError("unknown variant '" + std::string(text) + "'");
}

std::string to_string(Equivalence e) {
  switch (e) {
    case Equivalence::kEquivalent:
      return "equivalent";
    case Equivalence::kInequivalent:
      return "inequivalent";
    case Equivalence::kInconclusive:
      return "inconclusive";
  }
  return "inconclusive";
}

CQMatrix kron(const CQMatrix& a, const CQMatrix& b) {
  CQMatrix r(a.rows() * b.rows(), a.cols() * b.cols());
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < a.cols(); ++j) {
      if (a(i, j).is_zero()) continue;
      for (int k = 0; k < b.rows(); ++k) {
        for (int l = 0; l < b.cols(); ++l) {
          r(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
        }
      }
    }
  }
  return r;
}

namespace {

CQMatrix block_one() { return CQMatrix::identity(2); }

CQMatrix block_one_prime() {
  CQMatrix m(2, 2);
  m(0, 0) = CQuad(1);
  m(1, 1) = CQuad(-1);
  return m;
}

CQMatrix block_p() {
  CQMatrix m(2, 2);
  m(0, 1) = CQuad(1);
  m(1, 0) = CQuad(1);
  return m;
}

CQMatrix block_q() {
  CQMatrix m(2, 2);
  m(0, 1) = CQuad::i();
  m(1, 0) = -CQuad::i();
  return m;
}

// Kronecker product of m factors where factor at slot s is taken from
// `at(s)`; slot 0 is the rightmost standard factor.
CQMatrix slot_product(int m, const std::function<CQMatrix(int)>& at) {
  CQMatrix r = CQMatrix::identity(1);
  for (int pos = m - 1; pos >= 0; --pos) r = kron(r, at(pos));
  return r;
}

}  // namespace

bool satisfies_clifford_relations(const std::vector<CQMatrix>& sigma) {
  if (sigma.empty()) return true;
  const CQMatrix id = CQMatrix::identity(sigma[0].rows());
  for (std::size_t i = 0; i < sigma.size(); ++i) {
    if (!sigma[i].is_hermitian()) return false;
    if (sigma[i] * sigma[i] != id) return false;
    for (std::size_t j = 0; j < i; ++j) {
      if (!(sigma[i] * sigma[j] + sigma[j] * sigma[i]).is_zero()) return false;
    }
  }
  return true;
}

CliffordGenerators brauer_weyl(int n, Variant variant) {
  if (n < 1) throw PreconditionError("Brauer-Weyl construction needs n >= 1");
  if (n > 24) throw LimitError("Brauer-Weyl construction capped at n = 24");
  const int m = n / 2;
  CliffordGenerators g;
  g.n = n;
  g.size = 1 << m;
  g.variant = variant;
  for (const CQMatrix& base : {block_p(), block_q()}) {
    for (int s = 0; s < m; ++s) {
      g.sigma.push_back(slot_product(m, [&](int pos) {
        if (pos < s) return block_one_prime();
        if (pos == s) return base;
        return block_one();
      }));
    }
  }
  if (n % 2 == 1) g.sigma.push_back(slot_product(m, [](int) { return block_one_prime(); }));
  if (variant == Variant::kNegated) {
    for (auto& s : g.sigma) s = -s;
  }
  if (!satisfies_clifford_relations(g.sigma)) {
    throw VerificationError("Brauer-Weyl generators violate the Clifford relations");
  }
  return g;
}

int quadratic_pencil_size(int n) {
  if (n < 2) throw PreconditionError("quadratic pencils need at least two variables");
  return 1 << (n / 2);
}

int quadratic_pencil_power(int n) {
  if (n < 2) throw PreconditionError("quadratic pencils need at least two variables");
  return 1 << (n / 2 - 1);
}

Pencil quadratic_pencil(const QuadraticData& q, Variant variant) {
  const int n = q.n;
  const int k = quadratic_pencil_size(n);
  if (!quadratic_rz_check(q)) {
    throw PreconditionError("polynomial is not real zero (b b^t / 4 - A is not PSD)");
  }
  const CliffordGenerators g = brauer_weyl(n, variant);
  if (q.C_exact) {
    const QMatrix& c = *q.C_exact;
    std::vector<CQMatrix> ms;
    for (int j = 0; j < n; ++j) {
      CQMatrix m = CQMatrix::identity(k).scaled(CQuad(q.b[j] / Quad(2)));
      for (int i = 0; i < n; ++i) {
        if (!c(i, j).is_zero()) m += g.sigma[i].scaled(CQuad(c(i, j)));
      }
      ms.push_back(std::move(m));
    }
    return Pencil::from_exact(n, k, std::move(ms));
  }
  if (!q.C_numeric) throw PreconditionError("square root of b b^t / 4 - A unavailable");
  const Eigen::MatrixXd& c = *q.C_numeric;
  std::vector<Eigen::MatrixXcd> sigma;
  for (const auto& s : g.sigma) sigma.push_back(to_eigen(s));
  std::vector<Eigen::MatrixXcd> ms;
  for (int j = 0; j < n; ++j) {
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Identity(k, k) * (q.b[j].to_double() / 2.0);
    for (int i = 0; i < n; ++i) m += c(i, j) * sigma[i];
    ms.push_back(std::move(m));
  }
  return Pencil::from_numeric(n, k, std::move(ms));
}

QuadraticConstruction construct_quadratic(const Poly& p, Variant variant, int trials,
                                          std::uint64_t seed) {
  const QuadraticData q = quadratic_form(p);
  QuadraticConstruction out;
  out.pencil = quadratic_pencil(q, variant);
  out.power = quadratic_pencil_power(q.n);
  out.verdict = verify_identity(out.pencil, p, out.power, trials, seed);
  return out;
}

RelationsVerdict relations_check(const Pencil& pencil, const Poly& p, int trials,
                                 std::uint64_t seed) {
  const int n = pencil.nvars();
  const int k = pencil.size();
  if (p.nvars() != n) throw DimensionError("polynomial and pencil have different variable counts");
  if (p.degree() < 1) throw PreconditionError("relations need degree >= 1");
  if (p.constant_term() != Quad(1)) throw PreconditionError("polynomial must satisfy p(0) = 1");
  const int d = p.degree();
  std::vector<Poly> parts;
  for (int j = 0; j <= d; ++j) parts.push_back(p.homogeneous_part(j));

  RelationsVerdict v;
  v.seed = seed;
  v.exact = pencil.is_exact();
  v.pass = true;
  for (int t = 0; t < trials; ++t) {
    Rng rng(trial_seed(seed, static_cast<std::uint64_t>(t)));
    const std::vector<Quad> a = rng.rational_direction(n);
    std::vector<Quad> c(d + 1);
    for (int j = 0; j <= d; ++j) {
      const Quad value = parts[j].evaluate(a);
      c[d - j] = (d - j) % 2 == 0 ? value : -value;
    }
    ++v.directions;
    bool ok = true;
    if (pencil.is_exact()) {
      const CQMatrix w = pencil.combination(a);
      CQMatrix h = CQMatrix::identity(k).scaled(CQuad(c[d]));
      for (int m = d - 1; m >= 0; --m) h = h * w + CQMatrix::identity(k).scaled(CQuad(c[m]));
      ok = h.is_zero();
    } else {
      std::vector<double> ad;
      for (const auto& x : a) ad.push_back(x.to_double());
      const Eigen::MatrixXcd w = pencil.combination(ad);
      Eigen::MatrixXcd h = Eigen::MatrixXcd::Identity(k, k) * c[d].to_double();
      double coeff_scale = 0.0;
      for (const auto& x : c) coeff_scale = std::max(coeff_scale, std::abs(x.to_double()));
      for (int m = d - 1; m >= 0; --m) {
        h = h * w + Eigen::MatrixXcd::Identity(k, k) * c[m].to_double();
      }
      const double wn = std::max(1.0, max_norm(w));
      const double residual = max_norm(h) / (std::pow(wn, d) * std::max(1.0, coeff_scale));
      v.max_residual = std::max(v.max_residual, residual);
      ok = residual <= kTauRelation;
    }
    if (!ok) {
      v.pass = false;
      v.failing_direction = a;
      break;
    }
  }
  return v;
}

namespace {

struct WordSearch {
  const Pencil& first;
  const Pencil& second;
  bool exact;
  std::vector<double> norms;
  EquivalenceVerdict& out;

  bool mismatch_exact(const CQMatrix& a, const CQMatrix& b, const std::vector<int>& word) {
    CQuad ta(0), tb(0);
    for (int i = 0; i < a.rows(); ++i) {
      ta += a(i, i);
      tb += b(i, i);
    }
    ++out.words_checked;
    if (ta == tb) return false;
    out.witness_word = word;
    out.trace_first = ta.to_complex();
    out.trace_second = tb.to_complex();
    return true;
  }

  bool mismatch_numeric(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b,
                        const std::vector<int>& word) {
    const std::complex<double> ta = a.trace();
    const std::complex<double> tb = b.trace();
    double scale = static_cast<double>(a.rows());
    for (int l : word) scale *= std::max(1.0, norms[l]);
    ++out.words_checked;
    if (std::abs(ta - tb) <= 1e-8 * scale) return false;
    out.witness_word = word;
    out.trace_first = ta;
    out.trace_second = tb;
    return true;
  }

  bool exhaustive_exact(const CQMatrix& a, const CQMatrix& b, std::vector<int>& word, int max_len) {
    for (int l = 0; l < first.nvars(); ++l) {
      word.push_back(l);
      const CQMatrix na = a * first.exact_matrices()[l];
      const CQMatrix nb = b * second.exact_matrices()[l];
      if (mismatch_exact(na, nb, word)) return true;
      if (static_cast<int>(word.size()) < max_len && exhaustive_exact(na, nb, word, max_len)) {
        return true;
      }
      word.pop_back();
    }
    return false;
  }

  bool exhaustive_numeric(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b,
                          std::vector<int>& word, int max_len) {
    for (int l = 0; l < first.nvars(); ++l) {
      word.push_back(l);
      const Eigen::MatrixXcd na = a * first.matrices()[l];
      const Eigen::MatrixXcd nb = b * second.matrices()[l];
      if (mismatch_numeric(na, nb, word)) return true;
      if (static_cast<int>(word.size()) < max_len && exhaustive_numeric(na, nb, word, max_len)) {
        return true;
      }
      word.pop_back();
    }
    return false;
  }

  bool check_word(const std::vector<int>& word) {
    if (exact) {
      CQMatrix a = CQMatrix::identity(first.size());
      CQMatrix b = CQMatrix::identity(second.size());
      for (int l : word) {
        a = a * first.exact_matrices()[l];
        b = b * second.exact_matrices()[l];
      }
      return mismatch_exact(a, b, word);
    }
    Eigen::MatrixXcd a = Eigen::MatrixXcd::Identity(first.size(), first.size());
    Eigen::MatrixXcd b = a;
    for (int l : word) {
      a = a * first.matrices()[l];
      b = b * second.matrices()[l];
    }
    return mismatch_numeric(a, b, word);
  }
};

}  // namespace

EquivalenceVerdict unitary_equiv_test(const Pencil& first, const Pencil& second,
                                      int word_length, int trials, std::uint64_t seed) {
  EquivalenceVerdict out;
  if (first.nvars() != second.nvars()) {
    throw DimensionError("pencils have different variable counts");
  }
  if (first.size() != second.size()) {
    out.verdict = Equivalence::kInequivalent;
    out.reason = "size mismatch";
    return out;
  }
  const int n = first.nvars();
  const int k = first.size();
  if (k == 0) {
    out.verdict = Equivalence::kEquivalent;
    out.reason = "empty pencils";
    out.unitary = Eigen::MatrixXcd(0, 0);
    return out;
  }

  WordSearch search{first, second, first.is_exact() && second.is_exact(), {}, out};
  for (int l = 0; l < n; ++l) {
    search.norms.push_back(std::max(first.matrices()[l].operatorNorm(),
                                    second.matrices()[l].operatorNorm()));
  }
  double total = 0.0;
  for (int len = 1; len <= word_length; ++len) total += std::pow(static_cast<double>(n), len);
  bool found = false;
  if (n > 0 && word_length > 0) {
    std::vector<int> word;
    if (total <= 20000) {
      found = search.exact ? search.exhaustive_exact(CQMatrix::identity(k), CQMatrix::identity(k),
                                                     word, word_length)
                           : search.exhaustive_numeric(Eigen::MatrixXcd::Identity(k, k),
                                                       Eigen::MatrixXcd::Identity(k, k), word,
                                                       word_length);
    } else {
      for (int len = 1; len <= word_length && !found; ++len) {
        for (int t = 0; t < trials && !found; ++t) {
          Rng rng(trial_seed(seed, static_cast<std::uint64_t>(len) * 1000003ULL + t));
          std::vector<int> w(len);
          for (auto& x : w) x = static_cast<int>(rng.uniform_int(0, n - 1));
          found = search.check_word(w);
        }
      }
    }
  }
  if (found) {
    out.verdict = Equivalence::kInequivalent;
    out.reason = "trace word mismatch";
    return out;
  }

  // Intertwiners X with M1_i X = X M2_i, unknowns vec(X) column-major.
  const int kk = k * k;
  Eigen::MatrixXcd system = Eigen::MatrixXcd::Zero(std::max(1, n) * kk, kk);
  for (int l = 0; l < n; ++l) {
    const auto& m1 = first.matrices()[l];
    const auto& m2 = second.matrices()[l];
    for (int j = 0; j < k; ++j) {
      for (int i = 0; i < k; ++i) {
        const int row = l * kk + i + j * k;
        for (int c = 0; c < k; ++c) {
          system(row, c + j * k) += m1(i, c);
          system(row, i + c * k) -= m2(c, j);
        }
      }
    }
  }
  const Eigen::MatrixXcd kernel = numeric_kernel(system, 1e-9);
  if (kernel.cols() == 0) {
    out.verdict = Equivalence::kInconclusive;
    out.reason = "traces agree but no intertwiner found";
    return out;
  }
  double best = std::numeric_limits<double>::infinity();
  for (int attempt = 0; attempt < 5; ++attempt) {
    Rng rng(trial_seed(seed ^ 0x5151ULL, static_cast<std::uint64_t>(attempt)));
    Eigen::VectorXcd coeffs(kernel.cols());
    for (int c = 0; c < kernel.cols(); ++c) coeffs(c) = {rng.normal(), rng.normal()};
    const Eigen::VectorXcd vec = kernel * coeffs;
    const Eigen::MatrixXcd x = Eigen::Map<const Eigen::MatrixXcd>(vec.data(), k, k);
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(x, Eigen::ComputeFullU | Eigen::ComputeFullV);
    const auto& s = svd.singularValues();
    if (k > 0 && s(k - 1) <= 1e-8 * s(0)) continue;
    const Eigen::MatrixXcd u = svd.matrixU() * svd.matrixV().adjoint();
    double residual = 0.0;
    for (int l = 0; l < n; ++l) {
      const Eigen::MatrixXcd diff = u.adjoint() * first.matrices()[l] * u - second.matrices()[l];
      residual = std::max(residual,
                          max_norm(diff) / std::max(1.0, max_norm(second.matrices()[l])));
    }
    best = std::min(best, residual);
    if (residual <= kTauEq) {
      out.verdict = Equivalence::kEquivalent;
      out.reason = "explicit unitary";
      out.unitary = u;
      out.residual = residual;
      return out;
    }
  }
  out.verdict = Equivalence::kInconclusive;
  out.reason = "traces agree but no unitary met the tolerance";
  out.residual = best;
  return out;
}

}  // namespace rzpencil

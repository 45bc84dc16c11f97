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

#include "rzpencil/reduction.h"

#include <algorithm>
#include <cmath>

#include "rzpencil/realzero.h"

namespace rzpencil {
namespace {

// Largest relative determinant discrepancy between two pencils at random
// points.
double det_discrepancy(const Pencil& a, const Pencil& b, std::uint64_t seed) {
  double worst = 0.0;
  for (int t = 0; t < 20; ++t) {
    Rng rng(trial_seed(seed, static_cast<std::uint64_t>(t)));
    std::vector<double> x(a.nvars());
    for (auto& v : x) v = 0.5 * rng.normal();
    const std::complex<double> da =
        a.size() == 0 ? 1.0 : a.evaluate(x).partialPivLu().determinant();
    const std::complex<double> db =
        b.size() == 0 ? 1.0 : b.evaluate(x).partialPivLu().determinant();
    const double err = std::abs(da - db) / std::max({1.0, std::abs(da), std::abs(db)});
    worst = std::max(worst, err);
  }
  return worst;
}

// Conjugates by q, checks that everything outside the leading d x d block
// vanishes, and returns the leading blocks.
ReductionResult split_leading_block(const Pencil& p, const Eigen::MatrixXcd& q, int d,
                                    std::uint64_t seed) {
  ReductionResult result;
  result.q = q;
  result.removed = p.size() - d;
  std::vector<Eigen::MatrixXcd> blocks;
  for (const auto& m : p.matrices()) {
    const Eigen::MatrixXcd c = q.adjoint() * m * q;
    const double scale = std::max(1.0, max_norm(m));
    Eigen::MatrixXcd rest = c;
    rest.topLeftCorner(d, d).setZero();
    result.max_off_block = std::max(result.max_off_block, max_norm(rest) / scale);
    blocks.push_back(c.topLeftCorner(d, d));
  }
  if (result.max_off_block > kTauBlock) {
    throw VerificationError("off-block residue " + std::to_string(result.max_off_block) +
                            " exceeds tolerance; reduction precondition violated");
  }
  result.reduced = Pencil::from_numeric(p.nvars(), d, std::move(blocks));
  result.max_det_error = det_discrepancy(p, result.reduced, seed);
  if (result.max_det_error > kTauId) {
    throw VerificationError("reduction changed the determinant");
  }
  return result;
}

ReductionResult unchanged(const Pencil& p) {
  ReductionResult r;
  r.reduced = p;
  r.q = Eigen::MatrixXcd::Identity(p.size(), p.size());
  return r;
}

}  // namespace

ReductionResult common_kernel_reduce(const Pencil& p, std::uint64_t seed) {
  const int k = p.size();
  const int n = p.nvars();
  Eigen::MatrixXcd kernel;
  if (p.is_exact()) {
    CQMatrix stacked(n * k, k);
    const auto& ms = p.exact_matrices();
    for (int l = 0; l < n; ++l) {
      for (int i = 0; i < k; ++i) {
        for (int j = 0; j < k; ++j) stacked(l * k + i, j) = ms[l](i, j);
      }
    }
    const auto basis = nullspace(stacked);
    if (basis.empty()) return unchanged(p);
    std::vector<bool> in_kernel(k, false);
    bool coordinate = true;
    for (const auto& v : basis) {
      int nonzero = 0;
      for (int j = 0; j < k; ++j) {
        if (!v[j].is_zero()) {
          ++nonzero;
          in_kernel[j] = true;
        }
      }
      coordinate = coordinate && nonzero == 1;
    }
    if (coordinate) {
      std::vector<int> order;
      for (int j = 0; j < k; ++j) {
        if (!in_kernel[j]) order.push_back(j);
      }
      const int d = static_cast<int>(order.size());
      for (int j = 0; j < k; ++j) {
        if (in_kernel[j]) order.push_back(j);
      }
      ReductionResult r;
      r.q = Eigen::MatrixXcd::Zero(k, k);
      for (int c = 0; c < k; ++c) r.q(order[c], c) = 1.0;
      r.removed = k - d;
      std::vector<CQMatrix> blocks;
      for (const auto& m : ms) {
        CQMatrix b(d, d);
        for (int i = 0; i < d; ++i) {
          for (int j = 0; j < d; ++j) b(i, j) = m(order[i], order[j]);
        }
        blocks.push_back(std::move(b));
      }
      r.reduced = Pencil::from_exact(n, d, std::move(blocks), p.symmetry());
      return r;
    }
    kernel.resize(k, static_cast<Eigen::Index>(basis.size()));
    for (std::size_t c = 0; c < basis.size(); ++c) {
      for (int j = 0; j < k; ++j) kernel(j, static_cast<Eigen::Index>(c)) = basis[c][j].to_complex();
    }
  } else {
    Eigen::MatrixXcd stacked(n * k, k);
    for (int l = 0; l < n; ++l) stacked.block(l * k, 0, k, k) = p.matrices()[l];
    if (n == 0) {
      kernel = Eigen::MatrixXcd::Identity(k, k);
    } else {
      kernel = numeric_kernel(stacked, kTauRank);
    }
    if (kernel.cols() == 0) return unchanged(p);
  }
  const int dim = static_cast<int>(kernel.cols());
  const Eigen::MatrixXcd u = complete_to_unitary(kernel);
  Eigen::MatrixXcd q(k, k);
  q << u.rightCols(k - dim), u.leftCols(dim);
  return split_leading_block(p, q, k - dim, seed);
}

int determinant_degree(const Pencil& p, std::uint64_t seed) {
  if (p.is_exact() && p.size() <= kExactDetCap) return std::max(det_poly(p).degree(), 0);
  int best = 0;
  for (int t = 0; t < 20; ++t) {
    Rng rng(trial_seed(seed, static_cast<std::uint64_t>(t)));
    best = std::max(best, combination_rank(p, rng.sphere_direction(p.nvars())));
  }
  return best;
}

ReductionResult cone_reduce(const Pencil& p, const ConeOptions& options) {
  const int k = p.size();
  const int n = p.nvars();
  const int d = determinant_degree(p, options.seed);
  if (d == k) return unchanged(p);

  struct Candidate {
    std::vector<double> a;
    std::string source;
  };
  std::vector<Candidate> candidates;
  for (const auto& h : options.hints) {
    if (static_cast<int>(h.size()) != n) throw DimensionError("cone hint has the wrong length");
    candidates.push_back({h, "hint"});
  }
  for (int i = 0; i < n; ++i) {
    for (double s : {1.0, -1.0}) {
      std::vector<double> a(n, 0.0);
      a[i] = s;
      candidates.push_back({a, "axis"});
    }
  }
  for (int t = 0; t < options.samples; ++t) {
    Rng rng(trial_seed(options.seed, static_cast<std::uint64_t>(t)));
    candidates.push_back({rng.sphere_direction(n), "sample"});
  }

  for (const auto& c : candidates) {
    const Eigen::MatrixXcd w = p.combination(c.a);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(w);
    const Eigen::VectorXd& ev = solver.eigenvalues();
    const double top = ev.cwiseAbs().maxCoeff();
    if (top == 0.0) continue;
    if (ev.minCoeff() < -kTauPsd * std::max(1.0, top)) continue;
    int positive = 0;
    for (int i = 0; i < ev.size(); ++i) {
      if (ev(i) > kTauRank * top) ++positive;
    }
    if (positive != d) continue;
    // Eigenvalues ascend, so the range sits in the last d columns.
    const Eigen::MatrixXcd& v = solver.eigenvectors();
    Eigen::MatrixXcd q(k, k);
    q << v.rightCols(d), v.leftCols(k - d);
    ReductionResult r = split_leading_block(p, q, d, options.seed);
    r.witness = c.a;
    r.witness_source = c.source;
    return r;
  }
  throw NotWitnessedError("cone condition not witnessed after " +
                          std::to_string(candidates.size()) + " directions");
}

RankProfile rank_profile(const Pencil& p, int trials, std::uint64_t seed) {
  RankProfile r;
  r.trials = trials;
  r.seed = seed;
  const int k = p.size();
  const int n = p.nvars();
  if (p.is_exact()) {
    const auto& ms = p.exact_matrices();
    CQMatrix coeffs(n, 2 * k * k);
    for (int l = 0; l < n; ++l) {
      r.generator_ranks.push_back(rank(ms[l]));
      for (int i = 0; i < k; ++i) {
        for (int j = 0; j < k; ++j) {
          coeffs(l, i * k + j) = CQuad(ms[l](i, j).real());
          coeffs(l, k * k + i * k + j) = CQuad(ms[l](i, j).imag());
        }
      }
    }
    r.span_dimension = rank(coeffs);
    for (int t = 0; t < trials; ++t) {
      Rng rng(trial_seed(seed, static_cast<std::uint64_t>(t)));
      r.max_rank = std::max(r.max_rank, rank(p.combination(rng.rational_direction(n))));
    }
    if (k <= kExactDetCap) r.det_degree = std::max(det_poly(p).degree(), 0);
  } else {
    Eigen::MatrixXcd coeffs(n, 2 * k * k);
    for (int l = 0; l < n; ++l) {
      const auto& m = p.matrices()[l];
      r.generator_ranks.push_back(numeric_rank(m, kTauRank));
      for (int i = 0; i < k; ++i) {
        for (int j = 0; j < k; ++j) {
          coeffs(l, i * k + j) = m(i, j).real();
          coeffs(l, k * k + i * k + j) = m(i, j).imag();
        }
      }
    }
    r.span_dimension = numeric_rank(coeffs, kTauRank);
    for (int t = 0; t < trials; ++t) {
      Rng rng(trial_seed(seed, static_cast<std::uint64_t>(t)));
      r.max_rank = std::max(r.max_rank, combination_rank(p, rng.sphere_direction(n)));
    }
  }
  r.independent = r.span_dimension == n;
  r.matches_degree = r.det_degree.has_value() && *r.det_degree == r.max_rank;
  return r;
}

}  // namespace rzpencil

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

#include "rzpencil/obstruction.h"

#include <algorithm>
#include <cmath>
#include <map>

namespace rzpencil {

std::string to_string(RepKind kind) {
  return kind == RepKind::kSymmetric ? "symmetric" : "hermitian";
}

RepKind parse_rep_kind(std::string_view text) {
  if (text == "symmetric") return RepKind::kSymmetric;
  if (text == "hermitian") return RepKind::kHermitian;
  throw FormatError("unknown representation kind '" + std::string(text) + "'");
}

std::string to_string(HypothesisStatus s) {
  switch (s) {
    case HypothesisStatus::kVerifiedExact:
      return "verified-exact";
    case HypothesisStatus::kVerifiedSampled:
      return "verified-sampled";
    case HypothesisStatus::kAssertedByCaller:
      return "asserted-by-caller";
    case HypothesisStatus::kFailed:
      return "failed";
    case HypothesisStatus::kNotWitnessed:
      return "not-witnessed";
  }
  return "not-witnessed";
}

bool holds(HypothesisStatus s) {
  return s == HypothesisStatus::kVerifiedExact || s == HypothesisStatus::kVerifiedSampled ||
         s == HypothesisStatus::kAssertedByCaller;
}

std::string to_string(Claim c) {
  switch (c) {
    case Claim::kNoneExists:
      return "none-exists";
    case Claim::kSizeLowerBound:
      return "size-lower-bound";
    case Claim::kNoConclusion:
      return "no-conclusion";
  }
  return "no-conclusion";
}

long binomial2(long m) { return m * (m - 1) / 2; }

namespace {

mpq_class ratio(long a, long b) {
  mpq_class q(a, b);
  q.canonicalize();
  return q;
}

}  // namespace

long meshulam_alpha(long k, long d) {
  if (d < 1) throw PreconditionError("rank bound d must be at least 1");
  if (d > k) throw PreconditionError("rank bound d must not exceed the size k");
  const long e = d / 2;
  if (d % 2 == 0) {
    if (2 * k <= 5 * e + 1) return binomial2(d + 1);
    return binomial2(e + 1) + e * (k - e);
  }
  if (2 * k <= 5 * (e + 1)) return binomial2(d + 1);
  return binomial2(e + 1) + e * (k - e) + 1;
}

std::optional<SizeBound> min_size_bound(long n, long d, RepKind kind) {
  if (n < 1) throw PreconditionError("number of variables must be positive");
  if (d < 1) throw PreconditionError("degree must be positive");
  mpq_class value;
  if (kind == RepKind::kSymmetric) {
    if (n <= binomial2(d + 1) || d == 1) return std::nullopt;
    if (d % 2 == 0) {
      value = ratio(2 * n, d) + ratio(d - 2, 4);
    } else {
      value = ratio(2 * (n - 1), d - 1) + ratio(d - 3, 4);
    }
  } else {
    if (n <= binomial2(2 * d + 1)) return std::nullopt;
    value = ratio(n, 2 * d) + ratio(d - 1, 4);
  }
  value.canonicalize();
  mpz_class ceil;
  mpz_cdiv_q(ceil.get_mpz_t(), value.get_num_mpz_t(), value.get_den_mpz_t());
  return SizeBound{value, ceil.get_si()};
}

const Hypothesis* ObstructionReport::find(std::string_view name) const {
  for (const auto& h : hypotheses) {
    if (h.name == name) return &h;
  }
  return nullptr;
}

bool ObstructionReport::claims_none(RepKind kind) const {
  return std::any_of(conclusions.begin(), conclusions.end(), [&](const Conclusion& c) {
    return c.kind == kind && c.claim == Claim::kNoneExists;
  });
}

std::optional<long> ObstructionReport::size_lower_bound(RepKind kind) const {
  std::optional<long> best;
  for (const auto& c : conclusions) {
    if (c.kind == kind && c.claim == Claim::kSizeLowerBound) {
      best = std::max(best.value_or(0), c.bound);
    }
  }
  return best;
}

std::optional<std::vector<CQuad>> invariant_direction(const Poly& p) {
  const int n = p.nvars();
  if (n == 0) return std::nullopt;
  std::map<Monomial, int, GradedOrder> rows;
  std::vector<Poly> partials;
  for (int i = 0; i < n; ++i) {
    partials.push_back(p.derivative(i));
    for (const auto& [m, c] : partials.back().terms()) rows.emplace(m, 0);
  }
  int r = 0;
  for (auto& [m, idx] : rows) idx = r++;
  CQMatrix coeffs(std::max(r, 1), n);
  for (int i = 0; i < n; ++i) {
    for (const auto& [m, c] : partials[i].terms()) coeffs(rows.at(m), i) = CQuad(c);
  }
  const auto kernel = nullspace(coeffs);
  if (kernel.empty()) return std::nullopt;
  return kernel.front();
}

std::optional<std::vector<Quad>> cone_direction(const Poly& p, int samples, std::uint64_t seed) {
  const int n = p.nvars();
  const int d = p.degree();
  if (n == 0 || d < 1) return std::nullopt;
  auto works = [&](const std::vector<Quad>& a) {
    const UniPoly<Quad> u = restrict(p, a);
    if (u.degree() != d) return false;
    return SturmSequence(u).count_above(Quad(0)) == 0;
  };
  for (int i = 0; i < n; ++i) {
    for (int s : {1, -1}) {
      std::vector<Quad> a(n, Quad(0));
      a[i] = Quad(s);
      if (works(a)) return a;
    }
  }
  for (int t = 0; t < samples; ++t) {
    Rng rng(trial_seed(seed, static_cast<std::uint64_t>(t)));
    std::vector<Quad> a = rng.rational_direction(n);
    if (works(a)) return a;
  }
  return std::nullopt;
}

namespace {

constexpr const char* kConeTag = "cone-size-count";
constexpr const char* kSpectrumTag = "simple-spectrum-crossing";
constexpr const char* kNoTheorem = "no-applicable-theorem";

struct ReportBuilder {
  ObstructionReport& report;

  void add(std::string name, HypothesisStatus status, std::string detail) {
    report.hypotheses.push_back({std::move(name), status, std::move(detail)});
  }

  bool all_hold(const std::vector<std::string>& names) const {
    for (const auto& name : names) {
      const Hypothesis* h = report.find(name);
      if (h == nullptr || !holds(h->status)) return false;
    }
    return true;
  }

  void conclude(RepKind kind, Claim claim, long bound, const char* theorem,
                std::vector<std::string> names) {
    Conclusion c;
    c.kind = kind;
    c.claim = claim;
    c.bound = bound;
    c.theorem = theorem;
    bool sampled = false;
    for (const auto& name : names) {
      sampled = sampled || report.find(name)->status != HypothesisStatus::kVerifiedExact;
    }
    if (sampled) c.note = "contingent on sampled or asserted hypotheses";
    c.hypotheses = std::move(names);
    report.conclusions.push_back(std::move(c));
  }
};

}  // namespace

ObstructionReport nonexistence_report(const Poly& p, const HypothesisFlags& flags) {
  ObstructionReport report;
  report.n = p.nvars();
  report.d = p.degree();
  report.seed = flags.seed;
  ReportBuilder b{report};
  const long n = report.n;
  const long d = report.d;

  RzOptions options;
  options.samples = flags.samples;
  options.seed = flags.seed;
  const RzVerdict rz = is_real_zero(p, options);
  if (!rz.is_rz) throw DomainError("polynomial is not real zero");
  b.add("real-zero",
        rz.mode == RzVerdict::Mode::kExact ? HypothesisStatus::kVerifiedExact
                                            : HypothesisStatus::kVerifiedSampled,
        rz.method + ", " + std::to_string(rz.directions_checked) + " directions");

  const std::string asserted = flags.assert_no_line ? "; also asserted by caller" : "";
  report.line_direction = invariant_direction(p);
  if (!report.line_direction) {
    b.add("no-full-line", HypothesisStatus::kVerifiedExact,
          "partial derivatives linearly independent" + asserted);
  } else {
    b.add("no-full-line", HypothesisStatus::kFailed,
          std::string("p is invariant along a direction") +
              (flags.assert_no_line ? "; caller assertion contradicted" : ""));
  }

  const std::optional<Poly> base = shifted_dehomogenize(p);
  if (base) {
    b.add("full-dimensional-cone", HypothesisStatus::kVerifiedExact,
          "shifted homogenization structure");
  } else if ((report.cone_direction = cone_direction(p, flags.samples, flags.seed))) {
    b.add("full-dimensional-cone", HypothesisStatus::kVerifiedExact,
          "recession direction with all roots negative");
  } else if (flags.assert_cone) {
    b.add("full-dimensional-cone", HypothesisStatus::kAssertedByCaller, "");
  } else {
    b.add("full-dimensional-cone", HypothesisStatus::kNotWitnessed,
          "no recession direction found after " + std::to_string(2 * n + flags.samples) +
              " directions");
  }

  const std::vector<std::string> cone_hyps{"real-zero", "no-full-line", "full-dimensional-cone"};
  if (d >= 1 && b.all_hold(cone_hyps)) {
    if (n > binomial2(d + 1)) b.conclude(RepKind::kSymmetric, Claim::kNoneExists, 0, kConeTag, cone_hyps);
    if (n > d * d) b.conclude(RepKind::kHermitian, Claim::kNoneExists, 0, kConeTag, cone_hyps);
  }

  if (base) {
    const long n0 = n - 1;
    if (!invariant_direction(*base)) {
      b.add("base-no-full-line", HypothesisStatus::kVerifiedExact,
            "partial derivatives of the dehomogenization linearly independent");
    } else {
      b.add("base-no-full-line", HypothesisStatus::kFailed,
            "dehomogenization is invariant along a direction");
    }
    const long r8 = d % 8;
    b.add("degree-mod-8", r8 == 0 || r8 == 1 || r8 == 7 ? HypothesisStatus::kFailed
                                                         : HypothesisStatus::kVerifiedExact,
          "d mod 8 = " + std::to_string(r8));
    const SimpleZerosResult simple = simple_zeros_sampled(*base, flags.samples, flags.seed);
    b.add("simple-zeros",
          simple.simple ? HypothesisStatus::kVerifiedSampled : HypothesisStatus::kFailed,
          std::to_string(simple.directions_checked) + " directions");
    const std::vector<std::string> hyps{"real-zero", "base-no-full-line", "degree-mod-8",
                                        "simple-zeros"};
    if (b.all_hold(hyps)) {
      if (n0 >= 3) b.conclude(RepKind::kSymmetric, Claim::kNoneExists, 0, kSpectrumTag, hyps);
      if (n0 >= 4) b.conclude(RepKind::kHermitian, Claim::kNoneExists, 0, kSpectrumTag, hyps);
    }
  }

  if (d >= 1 && b.all_hold({"no-full-line"})) {
    for (RepKind kind : {RepKind::kSymmetric, RepKind::kHermitian}) {
      if (const auto bound = min_size_bound(n, d, kind)) {
        b.conclude(kind, Claim::kSizeLowerBound, bound->ceiling,
                   kind == RepKind::kSymmetric ? "low-rank-symmetric-bound"
                                               : "low-rank-hermitian-bound",
                   {"no-full-line"});
      }
    }
  }

  for (RepKind kind : {RepKind::kSymmetric, RepKind::kHermitian}) {
    const bool any = std::any_of(report.conclusions.begin(), report.conclusions.end(),
                                 [&](const Conclusion& c) { return c.kind == kind; });
    if (!any) b.conclude(kind, Claim::kNoConclusion, 0, kNoTheorem, {});
  }
  return report;
}

std::vector<std::string> contradiction_flags(const ObstructionReport& report,
                                             const Pencil& representation, int power,
                                             bool verified) {
  std::vector<std::string> flags;
  if (representation.nvars() != report.n) {
    throw DimensionError("representation and report have different variable counts");
  }
  if (!verified || power != 1) return flags;
  std::vector<RepKind> kinds{RepKind::kHermitian};
  if (representation.symmetry() == Symmetry::kSymmetric) kinds.push_back(RepKind::kSymmetric);
  for (RepKind kind : kinds) {
    if (report.claims_none(kind)) {
      flags.push_back("report claims no " + to_string(kind) +
                      " representation, but a verified one of size " +
                      std::to_string(representation.size()) + " exists");
    }
    if (const auto bound = report.size_lower_bound(kind); bound && *bound > representation.size()) {
      flags.push_back("report claims " + to_string(kind) + " size >= " + std::to_string(*bound) +
                      ", but a verified one of size " + std::to_string(representation.size()) +
                      " exists");
    }
  }
  return flags;
}

Poly compact_counterexample(const Poly& ptilde, const Quad& r) {
  if (!r.is_rational()) throw PreconditionError("r must be rational");
  if (r <= Quad(1)) throw PreconditionError("r must exceed 1");
  if (!shifted_dehomogenize(ptilde)) {
    throw PreconditionError("polynomial is not a shifted homogenization in x0");
  }
  const int n = ptilde.nvars();
  Poly sum(n);
  const Poly shifted = Poly::variable(n, 0) + Poly::constant(n, Quad(1));
  sum += shifted * shifted;
  for (int i = 1; i < n; ++i) sum += Poly::variable(n, i) * Poly::variable(n, i);
  const Poly ball = (Poly::constant(n, r) - sum).scaled(Quad(1) / (r - Quad(1)));
  return ptilde * ball;
}

CompactCheck check_compact_counterexample(const Poly& q, const Quad& r, int samples,
                                          std::uint64_t seed) {
  CompactCheck out;
  out.note = "nonexistence of a representation for r > 1 is not machine-verified";
  out.radius = 2.0 * std::sqrt(r.to_double()) + 1.0;
  RzOptions options;
  options.strategy = RzOptions::Strategy::kSampled;
  options.samples = samples;
  options.seed = seed;
  out.rz = is_real_zero(q, options);

  const int n = q.nvars();
  const int d = q.degree();
  out.bounded = true;
  auto probe = [&](const std::vector<Quad>& a) {
    ++out.directions;
    const RootProfile roots = real_roots(restrict(q, a), d);
    std::optional<double> first;
    for (const auto& root : roots.real_roots) {
      if (root.value > 0.0) {
        first = root.value;
        break;
      }
    }
    if (!first) {
      out.bounded = false;
      return;
    }
    double dist2 = 0.0;
    for (int i = 0; i < n; ++i) {
      const double x = *first * a[i].to_double() + (i == 0 ? 1.0 : 0.0);
      dist2 += x * x;
    }
    out.max_distance = std::max(out.max_distance, std::sqrt(dist2));
  };
  for (int i = 0; i < n; ++i) {
    for (int s : {1, -1}) {
      std::vector<Quad> a(n, Quad(0));
      a[i] = Quad(s);
      probe(a);
    }
  }
  for (int t = 0; t < samples; ++t) {
    Rng rng(trial_seed(seed, static_cast<std::uint64_t>(t)));
    probe(rng.rational_direction(n));
  }
  out.bounded = out.bounded && out.max_distance <= out.radius;
  return out;
}

}  // namespace rzpencil

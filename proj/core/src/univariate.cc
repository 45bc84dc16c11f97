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

#include "rzpencil/univariate.h"

#include <cmath>

namespace rzpencil {

UniPoly<Quad> gcd(UniPoly<Quad> a, UniPoly<Quad> b) {
  while (!b.is_zero()) {
    auto r = a.divmod(b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

std::vector<UniPoly<Quad>> squarefree_decomposition(const UniPoly<Quad>& u) {
  if (u.is_zero()) throw DomainError("square-free decomposition of zero");
  std::vector<UniPoly<Quad>> factors;
  if (u.degree() == 0) return factors;
  const UniPoly<Quad> f = u.monic();
  const UniPoly<Quad> df = f.derivative();
  UniPoly<Quad> a0 = gcd(f, df);
  UniPoly<Quad> b = f.divmod(a0).first;
  UniPoly<Quad> c = df.divmod(a0).first;
  UniPoly<Quad> d = c - b.derivative();
  while (b.degree() > 0) {
    UniPoly<Quad> a = gcd(b, d);
    b = b.divmod(a).first;
    c = d.divmod(a).first;
    d = c - b.derivative();
    factors.push_back(a);
  }
  return factors;
}

namespace {

UniPoly<Quad> normalized_positive(const UniPoly<Quad>& p) {
  if (p.is_zero()) return p;
  return p.scaled(Quad(1) / p.leading().abs());
}

}  // namespace

SturmSequence::SturmSequence(const UniPoly<Quad>& u) {
  if (u.is_zero()) throw DomainError("Sturm sequence of zero polynomial");
  UniPoly<Quad> p = u;
  if (u.degree() > 0) {
    UniPoly<Quad> g = gcd(u, u.derivative());
    if (g.degree() > 0) p = u.divmod(g).first;
  }
  chain_.push_back(normalized_positive(p));
  if (p.degree() <= 0) return;
  chain_.push_back(normalized_positive(p.derivative()));
  while (chain_.back().degree() > 0) {
    UniPoly<Quad> r = chain_[chain_.size() - 2].divmod(chain_.back()).second;
    if (r.is_zero()) break;
    chain_.push_back(normalized_positive(-r));
  }
}

int SturmSequence::variations_at(const Quad& x) const {
  int variations = 0;
  int last = 0;
  for (const auto& p : chain_) {
    const int s = p(x).sign();
    if (s == 0) continue;
    if (last != 0 && s != last) ++variations;
    last = s;
  }
  return variations;
}

int SturmSequence::variations_at_infinity(bool positive) const {
  int variations = 0;
  int last = 0;
  for (const auto& p : chain_) {
    if (p.is_zero()) continue;
    int s = p.leading().sign();
    if (!positive && (p.degree() % 2 == 1)) s = -s;
    if (last != 0 && s != last) ++variations;
    last = s;
  }
  return variations;
}

int SturmSequence::count(const Quad& lo, const Quad& hi) const {
  if (!(lo < hi)) return 0;
  return variations_at(lo) - variations_at(hi);
}

int SturmSequence::count_all() const {
  return variations_at_infinity(false) - variations_at_infinity(true);
}

int SturmSequence::count_above(const Quad& lo) const {
  return variations_at(lo) - variations_at_infinity(true);
}

std::vector<double> isolate_real_roots(const UniPoly<Quad>& squarefree,
                                       double rel_tol) {
  std::vector<double> roots;
  if (squarefree.degree() <= 0) return roots;
  const SturmSequence sturm(squarefree);
  if (sturm.count_all() == 0) return roots;

  // Every root satisfies |x| < 1 + max |c_i / c_n|.
  const Quad& lead = squarefree.leading();
  double max_ratio = 0.0;
  for (int i = 0; i < squarefree.degree(); ++i) {
    max_ratio = std::max(max_ratio,
                         std::fabs((squarefree.coefficient(i) / lead).to_double()));
  }
  const Quad bound(static_cast<long>(std::ceil(max_ratio)) + 2);

  struct Bracket {
    Quad lo, hi;
    int count;
  };
  std::vector<Bracket> stack{{-bound, bound, sturm.count(-bound, bound)}};
  std::vector<std::pair<Quad, Quad>> isolated;
  while (!stack.empty()) {
    Bracket b = std::move(stack.back());
    stack.pop_back();
    if (b.count == 0) continue;
    if (b.count == 1) {
      isolated.emplace_back(std::move(b.lo), std::move(b.hi));
      continue;
    }
    Quad mid = (b.lo + b.hi) / Quad(2);
    const int left = sturm.count(b.lo, mid);
    stack.push_back({mid, b.hi, b.count - left});
    stack.push_back({b.lo, std::move(mid), left});
  }

  for (auto& [lo, hi] : isolated) {
    if (squarefree(hi).is_zero()) {
      roots.push_back(hi.to_double());
      continue;
    }
    for (int iter = 0; iter < 200; ++iter) {
      const double width = (hi - lo).to_double();
      const double scale = std::max(1.0, std::fabs(hi.to_double()));
      if (width <= rel_tol * scale) break;
      Quad mid = (lo + hi) / Quad(2);
      if (squarefree(mid).is_zero()) {
        lo = mid;
        hi = mid;
        break;
      }
      if (sturm.count(lo, mid) == 1) {
        hi = std::move(mid);
      } else {
        lo = std::move(mid);
      }
    }
    roots.push_back(((lo + hi) / Quad(2)).to_double());
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

}  // namespace rzpencil

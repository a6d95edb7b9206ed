// Copyright 2026 The riskgrid Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef RISKGRID_TESTS_ORACLES_H_
#define RISKGRID_TESTS_ORACLES_H_

// Brute-force reference computations used only by tests. None of these call
// into the library's AVaR, dominance or Kusuoka code paths; they work from
// first principles on plain vectors.

#include <algorithm>
#include <cstddef>
#include <vector>

#include "riskgrid/outcome.h"
#include "riskgrid/rational.h"

namespace riskgrid::oracle {

inline std::vector<Rational> sorted_copy(const OutcomeVector& x) {
  std::vector<Rational> s(x.begin(), x.end());
  std::sort(s.begin(), s.end());
  return s;
}

// (1/(1-alpha)) * integral_alpha^1 VaR_u du, integrating the step quantile
// function cell by cell: VaR_u = s[k] on (k/n, (k+1)/n]. alpha = 1 gives
// max.
inline Rational avar_by_quantile_integral(const OutcomeVector& x,
                                          const Rational& alpha) {
  const std::vector<Rational> s = sorted_copy(x);
  const Rational n(s.size());
  if (alpha == Rational(1)) return s.back();
  Rational integral;
  for (std::size_t k = 0; k < s.size(); ++k) {
    const Rational left = max(alpha, Rational(k) / n);
    const Rational right = Rational(k + 1) / n;
    if (left < right) integral += s[k] * (right - left);
  }
  return integral / (Rational(1) - alpha);
}

// Literal integral of the step CDF from min(X) to t.
inline Rational integrated_cdf_by_pieces(const OutcomeVector& x,
                                         const Rational& t) {
  const std::vector<Rational> s = sorted_copy(x);
  const Rational n(s.size());
  Rational total;
  // F = (k+1)/n on [s[k], s[k+1]); F = 1 from s.back() on.
  for (std::size_t k = 0; k < s.size(); ++k) {
    const Rational& left = s[k];
    if (!(left < t)) break;
    Rational right = k + 1 < s.size() ? min(s[k + 1], t) : t;
    total += Rational(k + 1) / n * (right - left);
  }
  return total;
}

// min over breakpoints of s + E[(X - s)^+] / (1 - alpha).
inline Rational ru_minimum_by_enumeration(const OutcomeVector& x,
                                          const Rational& alpha) {
  const Rational c = Rational(1) / (Rational(1) - alpha);
  const Rational n(x.size());
  bool first = true;
  Rational best;
  for (const Rational& s : x) {
    Rational tail;
    for (const Rational& v : x) tail += positive_part(v - s);
    const Rational g = s + c * tail / n;
    if (first || g < best) best = g;
    first = false;
  }
  return best;
}

// Max of sum w_j x_j over vertices of {0 <= w <= cap, sum w = 1}: k atoms at
// the cap and one atom with the remainder. Exponential; n <= 10.
inline Rational dual_by_vertex_enumeration(const OutcomeVector& x,
                                           const Rational& alpha) {
  const std::size_t n = x.size();
  const Rational cap = Rational(1) / (Rational(n) * (Rational(1) - alpha));
  const auto full = static_cast<std::size_t>((Rational(1) / cap).floor());
  const Rational rest = Rational(1) - Rational(full) * cap;
  bool first = true;
  Rational best;
  for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
    if (static_cast<std::size_t>(__builtin_popcountll(mask)) != full) continue;
    Rational base;
    for (std::size_t j = 0; j < n; ++j) {
      if (mask >> j & 1) base += cap * x[j];
    }
    for (std::size_t extra = 0; extra < n; ++extra) {
      if (mask >> extra & 1) continue;
      const Rational v = base + rest * x[extra];
      if (first || best < v) best = v;
      first = false;
      if (rest.is_zero()) break;
    }
    if (full == n) {
      if (first || best < base) best = base;
      first = false;
    }
  }
  return best;
}

// Sum of the l largest outcomes as the max over all l-subsets. n <= 12.
inline Rational top_sum_by_subsets(const OutcomeVector& x, std::size_t l) {
  const std::size_t n = x.size();
  bool first = true;
  Rational best;
  for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
    if (static_cast<std::size_t>(__builtin_popcountll(mask)) != l) continue;
    Rational s;
    for (std::size_t j = 0; j < n; ++j) {
      if (mask >> j & 1) s += x[j];
    }
    if (first || best < s) best = s;
    first = false;
  }
  return best;
}

// X ⪯ Y via E[(X - t)^+] <= E[(Y - t)^+] at every outcome value of either
// vector and at the midpoints between them.
inline bool dominated_by_stop_loss(const OutcomeVector& x,
                                   const OutcomeVector& y) {
  std::vector<Rational> points(x.begin(), x.end());
  points.insert(points.end(), y.begin(), y.end());
  std::sort(points.begin(), points.end());
  const std::size_t m = points.size();
  for (std::size_t k = 0; k + 1 < m; ++k) {
    points.push_back((points[k] + points[k + 1]) / Rational(2));
  }
  points.push_back(points.front() - Rational(1));
  for (const Rational& t : points) {
    Rational ex, ey;
    for (const Rational& v : x) ex += positive_part(v - t);
    for (const Rational& v : y) ey += positive_part(v - t);
    if (ey < ex) return false;
  }
  return true;
}

}  // namespace riskgrid::oracle

#endif  // RISKGRID_TESTS_ORACLES_H_

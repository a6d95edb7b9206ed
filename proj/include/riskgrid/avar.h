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

#ifndef RISKGRID_AVAR_H_
#define RISKGRID_AVAR_H_

#include <cstddef>
#include <optional>
#include <vector>

#include "riskgrid/outcome.h"
#include "riskgrid/rational.h"

namespace riskgrid {

// A probability level alpha in [0, 1].
class Level {
 public:
  // Throws std::invalid_argument when alpha is outside [0, 1].
  explicit Level(Rational alpha);

  // The grid level i/n. Requires n >= 1 and i <= n.
  static Level grid(std::size_t i, std::size_t n);

  const Rational& alpha() const { return alpha_; }

  // If alpha == i/n for an integer i, returns i.
  std::optional<std::size_t> grid_index(std::size_t n) const;

 private:
  Rational alpha_;
};

// Lower quantile inf{x : F_X(x) >= p}; equals sorted[ceil(p n)] (1-based)
// for p in (0, 1]. p = 0 returns min(X) by convention.
Rational value_at_risk(const OutcomeVector& x, const Level& p);

// AVaR at the grid level i/n: the mean of the n - i largest outcomes.
// Throws std::domain_error unless 0 <= i <= n - 1.
Rational avar_closed_form(const OutcomeVector& x, std::size_t i);

// Weight lambda placed on AVaR_{i/n} when (i-1)/n <= alpha <= i/n:
//   AVaR_alpha = lambda AVaR_{i/n} + (1 - lambda) AVaR_{(i-1)/n},
//   lambda = (n(1-alpha) - (n-i+1)(i - n alpha)) / (n(1-alpha)).
// Requires 1 <= i <= n - 1 and alpha in [(i-1)/n, i/n].
Rational interpolation_weight(std::size_t n, std::size_t i,
                              const Rational& alpha);

// AVaR_alpha(X) for any alpha in [0, 1]. Grid levels use the closed form,
// levels strictly between grid points use the lambda interpolation above,
// and alpha = 1 gives max(X).
Rational avar(const OutcomeVector& x, const Level& alpha);

// A closed interval of the real line; a missing end is unbounded.
struct MinimizerInterval {
  std::optional<Rational> lower;
  std::optional<Rational> upper;

  bool contains(const Rational& s) const;
};

struct RuResult {
  Rational value;
  MinimizerInterval minimizers;
};

// Minimizes g(s) = s + E[(X - s)^+] / (1 - alpha) exactly by a slope scan
// over the distinct outcome values. Throws std::domain_error at alpha = 1.
RuResult avar_ru(const OutcomeVector& x, const Level& alpha);

// Probability weights w_j on the atoms (w_j = h(omega_j) / n).
struct DualDensity {
  std::vector<Rational> weights;

  // 0 <= w_j <= 1/(n(1-alpha)) and sum w_j = 1. alpha must be < 1.
  bool is_feasible(const Rational& alpha) const;
};

struct DualResult {
  Rational value;
  DualDensity density;
};

// max sum_j w_j x_j over 0 <= w_j <= 1/(n(1-alpha)), sum w_j = 1, solved by
// filling the largest outcomes to the cap first (ties: lowest atom index).
// Throws std::domain_error at alpha = 1.
DualResult avar_dual(const OutcomeVector& x, const Level& alpha);

// (AVaR_{0/n}, ..., AVaR_{(n-1)/n}, AVaR_1): n + 1 entries.
std::vector<Rational> avar_grid(const OutcomeVector& x);

}  // namespace riskgrid

#endif  // RISKGRID_AVAR_H_

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

#include "riskgrid/avar.h"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>

namespace riskgrid {
namespace {

void require_below_one(const Level& alpha, const char* what) {
  if (alpha.alpha() == Rational(1)) {
    throw std::domain_error(std::string(what) + ": alpha must be < 1");
  }
}

Rational tail_mean(const std::vector<Rational>& sorted, std::size_t i) {
  Rational total;
  for (std::size_t k = i; k < sorted.size(); ++k) total += sorted[k];
  return total / Rational(sorted.size() - i);
}

}  // namespace

Level::Level(Rational alpha) : alpha_(std::move(alpha)) {
  if (alpha_ < Rational(0) || Rational(1) < alpha_) {
    throw std::invalid_argument("level must lie in [0, 1], got " +
                                alpha_.to_string());
  }
}

Level Level::grid(std::size_t i, std::size_t n) {
  if (n == 0 || i > n) {
    throw std::invalid_argument("grid level i/n needs n >= 1 and i <= n");
  }
  return Level(Rational(i) / Rational(n));
}

std::optional<std::size_t> Level::grid_index(std::size_t n) const {
  const Rational scaled = alpha_ * Rational(n);
  if (!scaled.is_integer()) return std::nullopt;
  return static_cast<std::size_t>(scaled.floor());
}

Rational value_at_risk(const OutcomeVector& x, const Level& p) {
  if (p.alpha().is_zero()) return min_outcome(x);
  const std::vector<Rational> sorted = sorted_outcomes(x);
  const auto k = (p.alpha() * Rational(x.size())).ceil();
  return sorted[static_cast<std::size_t>(k) - 1];
}

Rational avar_closed_form(const OutcomeVector& x, std::size_t i) {
  if (i >= x.size()) {
    throw std::domain_error("avar_closed_form: grid index " +
                            std::to_string(i) + " outside [0, " +
                            std::to_string(x.size() - 1) + "]");
  }
  return tail_mean(sorted_outcomes(x), i);
}

Rational interpolation_weight(std::size_t n, std::size_t i,
                              const Rational& alpha) {
  if (i == 0 || i > n) {
    throw std::domain_error("interpolation_weight: need 1 <= i <= n");
  }
  const Rational lo = Rational(i - 1) / Rational(n);
  const Rational hi = Rational(i) / Rational(n);
  if (alpha < lo || hi < alpha || alpha == Rational(1)) {
    throw std::domain_error("interpolation_weight: alpha outside the cell");
  }
  const Rational rn(n);
  const Rational scale = rn * (Rational(1) - alpha);
  return (scale - Rational(n - i + 1) * (Rational(i) - rn * alpha)) / scale;
}

Rational avar(const OutcomeVector& x, const Level& alpha) {
  const std::size_t n = x.size();
  if (alpha.alpha() == Rational(1)) return max_outcome(x);
  const std::vector<Rational> sorted = sorted_outcomes(x);
  if (const auto i = alpha.grid_index(n)) return tail_mean(sorted, *i);

  const auto i = static_cast<std::size_t>((alpha.alpha() * Rational(n)).ceil());
  // Above (n-1)/n only the maximum is left.
  if (i == n) return sorted.back();
  const Rational lambda = interpolation_weight(n, i, alpha.alpha());
  return lambda * tail_mean(sorted, i) +
         (Rational(1) - lambda) * tail_mean(sorted, i - 1);
}

bool MinimizerInterval::contains(const Rational& s) const {
  if (lower && s < *lower) return false;
  if (upper && *upper < s) return false;
  return true;
}

RuResult avar_ru(const OutcomeVector& x, const Level& alpha) {
  require_below_one(alpha, "avar_ru");
  const Rational rn(x.size());
  const Rational c = Rational(1) / (Rational(1) - alpha.alpha());

  std::vector<Rational> breaks = sorted_outcomes(x);
  breaks.erase(std::unique(breaks.begin(), breaks.end()), breaks.end());

  auto objective = [&](const Rational& s) {
    Rational tail;
    for (const Rational& v : x) tail += positive_part(v - s);
    return s + c * tail / rn;
  };
  auto right_slope = [&](const Rational& s) {
    const auto above = std::count_if(
        x.begin(), x.end(), [&](const Rational& v) { return s < v; });
    return Rational(1) - c * Rational(above) / rn;
  };

  RuResult result;
  if ((Rational(1) - c).is_zero()) {
    // Flat to the left of the smallest outcome.
    result.minimizers.upper = breaks.front();
    result.value = objective(breaks.front());
    return result;
  }
  for (std::size_t k = 0; k < breaks.size(); ++k) {
    const Rational slope = right_slope(breaks[k]);
    if (slope.sign() < 0) continue;
    result.minimizers.lower = breaks[k];
    // Slope just above max(X) is 1, so a flat piece always has a right end.
    result.minimizers.upper = slope.is_zero() ? breaks[k + 1] : breaks[k];
    result.value = objective(breaks[k]);
    return result;
  }
  throw std::logic_error("avar_ru: slope scan found no minimizer");
}

bool DualDensity::is_feasible(const Rational& alpha) const {
  if (weights.empty() || !(alpha < Rational(1))) return false;
  const Rational cap =
      Rational(1) / (Rational(weights.size()) * (Rational(1) - alpha));
  Rational total;
  for (const Rational& w : weights) {
    if (w.sign() < 0 || cap < w) return false;
    total += w;
  }
  return total == Rational(1);
}

DualResult avar_dual(const OutcomeVector& x, const Level& alpha) {
  require_below_one(alpha, "avar_dual");
  const std::size_t n = x.size();
  const Rational cap =
      Rational(1) / (Rational(n) * (Rational(1) - alpha.alpha()));

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return x[b] < x[a]; });

  DualResult result;
  result.density.weights.assign(n, Rational());
  Rational remaining(1);
  for (std::size_t atom : order) {
    if (remaining.is_zero()) break;
    const Rational w = min(cap, remaining);
    result.density.weights[atom] = w;
    result.value += w * x[atom];
    remaining -= w;
  }
  return result;
}

std::vector<Rational> avar_grid(const OutcomeVector& x) {
  const std::vector<Rational> sorted = sorted_outcomes(x);
  std::vector<Rational> grid;
  grid.reserve(sorted.size() + 1);
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    grid.push_back(tail_mean(sorted, i));
  }
  grid.push_back(sorted.back());
  return grid;
}

}  // namespace riskgrid

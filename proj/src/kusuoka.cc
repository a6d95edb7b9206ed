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

#include "riskgrid/kusuoka.h"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>

#include "riskgrid/avar.h"

namespace riskgrid {
namespace {

template <typename T>
std::vector<T> drop_duplicates(std::vector<T> items) {
  std::vector<T> unique;
  unique.reserve(items.size());
  for (T& item : items) {
    if (std::find(unique.begin(), unique.end(), item) == unique.end()) {
      unique.push_back(std::move(item));
    }
  }
  return unique;
}

}  // namespace

SpectralWeights::SpectralWeights(std::vector<Rational> w) : w_(std::move(w)) {
  if (w_.empty()) throw std::invalid_argument("spectral weights are empty");
  Rational total;
  for (std::size_t j = 0; j < w_.size(); ++j) {
    if (w_[j].sign() < 0) {
      throw std::invalid_argument("spectral weight w_" + std::to_string(j + 1) +
                                  " is negative");
    }
    if (j > 0 && w_[j] < w_[j - 1]) {
      throw std::invalid_argument("spectral weights must be nondecreasing (w_" +
                                  std::to_string(j + 1) + " < w_" +
                                  std::to_string(j) + ")");
    }
    total += w_[j];
  }
  if (total != Rational(1)) {
    throw std::invalid_argument("spectral weights sum to " +
                                total.to_string() + ", not 1");
  }
}

KusuokaMeasure::KusuokaMeasure(std::vector<Rational> mu) : mu_(std::move(mu)) {
  if (mu_.size() < 2) {
    throw std::invalid_argument("kusuoka measure needs n + 1 >= 2 weights");
  }
  Rational total;
  for (std::size_t i = 0; i < mu_.size(); ++i) {
    if (mu_[i].sign() < 0 || Rational(1) < mu_[i]) {
      throw std::invalid_argument("kusuoka weight mu_" + std::to_string(i) +
                                  " outside [0, 1]");
    }
    total += mu_[i];
  }
  if (total != Rational(1)) {
    throw std::invalid_argument("kusuoka weights sum to " + total.to_string() +
                                ", not 1");
  }
}

KusuokaMeasure KusuokaMeasure::point_mass(std::size_t i, std::size_t n) {
  if (n == 0 || i > n) {
    throw std::invalid_argument("point mass needs n >= 1 and i <= n");
  }
  std::vector<Rational> mu(n + 1);
  mu[i] = Rational(1);
  return KusuokaMeasure(std::move(mu));
}

KusuokaFamily::KusuokaFamily(std::vector<KusuokaMeasure> members)
    : members_(drop_duplicates(std::move(members))) {
  if (members_.empty()) throw std::invalid_argument("kusuoka family is empty");
  for (const KusuokaMeasure& mu : members_) {
    require_same_dimension(mu.dimension(), members_.front().dimension(),
                           "kusuoka family");
  }
}

NaturalRiskStatistic::NaturalRiskStatistic(std::vector<SpectralWeights> family)
    : family_(drop_duplicates(std::move(family))) {
  if (family_.empty()) {
    throw std::invalid_argument("natural risk statistic family is empty");
  }
  for (const SpectralWeights& w : family_) {
    require_same_dimension(w.size(), family_.front().size(),
                           "natural risk statistic");
  }
}

Rational eval_spectral(const SpectralWeights& w, const OutcomeVector& x) {
  require_same_dimension(w.size(), x.size(), "eval_spectral");
  const std::vector<Rational> sorted = sorted_outcomes(x);
  Rational value;
  for (std::size_t j = 0; j < sorted.size(); ++j) value += w[j] * sorted[j];
  return value;
}

Rational eval_kusuoka(const KusuokaMeasure& mu, const OutcomeVector& x) {
  require_same_dimension(mu.dimension(), x.size(), "eval_kusuoka");
  const std::vector<Rational> grid = avar_grid(x);
  Rational value;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    if (!mu[i].is_zero()) value += mu[i] * grid[i];
  }
  return value;
}

FamilyValue eval_family(const KusuokaFamily& family, const OutcomeVector& x) {
  require_same_dimension(family.dimension(), x.size(), "eval_family");
  const std::vector<Rational> grid = avar_grid(x);
  FamilyValue best;
  for (std::size_t m = 0; m < family.size(); ++m) {
    const KusuokaMeasure& mu = family.members()[m];
    Rational value;
    for (std::size_t i = 0; i < grid.size(); ++i) value += mu[i] * grid[i];
    if (m == 0 || best.value < value) {
      best.value = std::move(value);
      best.argmax = m;
    }
  }
  return best;
}

Rational eval_nrs(const NaturalRiskStatistic& nrs, const OutcomeVector& x) {
  require_same_dimension(nrs.dimension(), x.size(), "eval_nrs");
  Rational best = eval_spectral(nrs.family().front(), x);
  for (const SpectralWeights& w : nrs.family().subspan(1)) {
    best = max(best, eval_spectral(w, x));
  }
  return best;
}

KusuokaMeasure spectral_to_kusuoka(const SpectralWeights& w) {
  const std::size_t n = w.size();
  std::vector<Rational> mu(n + 1);
  Rational previous;
  for (std::size_t i = 0; i < n; ++i) {
    mu[i] = Rational(n - i) * (w[i] - previous);
    previous = w[i];
  }
  return KusuokaMeasure(std::move(mu));
}

SpectralWeights kusuoka_to_spectral(const KusuokaMeasure& mu) {
  const std::size_t n = mu.dimension();
  std::vector<Rational> w(n);
  Rational running;
  for (std::size_t j = 0; j < n; ++j) {
    running += mu[j] / Rational(n - j);
    w[j] = running;
  }
  w[n - 1] += mu[n];
  return SpectralWeights(std::move(w));
}

KusuokaMeasure canonical_kusuoka(const KusuokaMeasure& mu) {
  std::vector<Rational> folded(mu.values().begin(), mu.values().end());
  const std::size_t n = mu.dimension();
  folded[n - 1] += folded[n];
  folded[n] = Rational();
  return KusuokaMeasure(std::move(folded));
}

NaturalRiskStatistic to_natural_risk_statistic(const KusuokaFamily& family) {
  std::vector<SpectralWeights> weights;
  weights.reserve(family.size());
  for (const KusuokaMeasure& mu : family.members()) {
    weights.push_back(kusuoka_to_spectral(mu));
  }
  return NaturalRiskStatistic(std::move(weights));
}

}  // namespace riskgrid

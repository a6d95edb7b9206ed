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

#ifndef RISKGRID_KUSUOKA_H_
#define RISKGRID_KUSUOKA_H_

#include <cstddef>
#include <span>
#include <vector>

#include "riskgrid/outcome.h"
#include "riskgrid/rational.h"

namespace riskgrid {

// Weights on the order statistics: 0 <= w_1 <= ... <= w_n <= 1 and
// sum w_j = 1.
class SpectralWeights {
 public:
  // Throws std::invalid_argument if the weights are empty, decreasing
  // anywhere, negative, or do not sum to one.
  explicit SpectralWeights(std::vector<Rational> w);

  std::size_t size() const { return w_.size(); }
  const Rational& operator[](std::size_t j) const { return w_[j]; }
  std::span<const Rational> values() const { return w_; }

  friend bool operator==(const SpectralWeights&,
                         const SpectralWeights&) = default;

 private:
  std::vector<Rational> w_;
};

// Mixing weights mu_0..mu_n over the AVaR levels 0, 1/n, ..., (n-1)/n, 1.
// Dimension n is size() - 1.
//
// On the n-point space AVaR_{(n-1)/n} and AVaR_1 are both the maximum, so
// mass at mu_n is value-equivalent to the same mass at mu_{n-1}; see
// canonical_kusuoka(). The form is kept as given because the comonotone
// classification reads it literally.
class KusuokaMeasure {
 public:
  // Throws std::invalid_argument unless there are at least two entries,
  // each in [0, 1], summing to one.
  explicit KusuokaMeasure(std::vector<Rational> mu);

  std::size_t dimension() const { return mu_.size() - 1; }
  std::size_t size() const { return mu_.size(); }
  const Rational& operator[](std::size_t i) const { return mu_[i]; }
  std::span<const Rational> values() const { return mu_; }

  // Point mass at level i/n.
  static KusuokaMeasure point_mass(std::size_t i, std::size_t n);

  friend bool operator==(const KusuokaMeasure&,
                         const KusuokaMeasure&) = default;

 private:
  std::vector<Rational> mu_;
};

// A finite nonempty set of Kusuoka measures of one dimension. Duplicates
// are dropped at construction, keeping the first occurrence.
class KusuokaFamily {
 public:
  explicit KusuokaFamily(std::vector<KusuokaMeasure> members);

  std::size_t dimension() const { return members_.front().dimension(); }
  std::span<const KusuokaMeasure> members() const { return members_; }
  std::size_t size() const { return members_.size(); }

 private:
  std::vector<KusuokaMeasure> members_;
};

// rho(X) = max over W in the family of <W, X_os>.
class NaturalRiskStatistic {
 public:
  explicit NaturalRiskStatistic(std::vector<SpectralWeights> family);

  std::size_t dimension() const { return family_.front().size(); }
  std::span<const SpectralWeights> family() const { return family_; }
  std::size_t size() const { return family_.size(); }

 private:
  std::vector<SpectralWeights> family_;
};

Rational eval_spectral(const SpectralWeights& w, const OutcomeVector& x);

// sum_{i<n} mu_i AVaR_{i/n}(X) + mu_n AVaR_1(X).
Rational eval_kusuoka(const KusuokaMeasure& mu, const OutcomeVector& x);

struct FamilyValue {
  Rational value;
  std::size_t argmax = 0;  // lowest maximizing member index
};

FamilyValue eval_family(const KusuokaFamily& family, const OutcomeVector& x);

Rational eval_nrs(const NaturalRiskStatistic& nrs, const OutcomeVector& x);

// mu_i = (n - i)(w_{i+1} - w_i) with w_0 = 0 (1-based w), mu_n = 0.
KusuokaMeasure spectral_to_kusuoka(const SpectralWeights& w);

// w_j = sum_{i < j} mu_i / (n - i) (1-based j), plus mu_n on w_n.
SpectralWeights kusuoka_to_spectral(const KusuokaMeasure& mu);

// Moves mu_n into mu_{n-1}. Value-preserving.
KusuokaMeasure canonical_kusuoka(const KusuokaMeasure& mu);

NaturalRiskStatistic to_natural_risk_statistic(const KusuokaFamily& family);

}  // namespace riskgrid

#endif  // RISKGRID_KUSUOKA_H_

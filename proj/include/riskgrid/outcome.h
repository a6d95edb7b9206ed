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

#ifndef RISKGRID_OUTCOME_H_
#define RISKGRID_OUTCOME_H_

#include <cstddef>
#include <span>
#include <vector>

#include "riskgrid/rational.h"

namespace riskgrid {

// A random variable on the uniform n-point space: outcome i sits on atom
// omega_i, and every atom has probability exactly 1/n. n >= 1.
class OutcomeVector {
 public:
  // Throws std::invalid_argument if `outcomes` is empty.
  explicit OutcomeVector(std::vector<Rational> outcomes);

  std::size_t size() const { return outcomes_.size(); }
  const Rational& operator[](std::size_t i) const { return outcomes_[i]; }
  std::span<const Rational> values() const { return outcomes_; }

  auto begin() const { return outcomes_.begin(); }
  auto end() const { return outcomes_.end(); }

  friend bool operator==(const OutcomeVector&, const OutcomeVector&) = default;

 private:
  std::vector<Rational> outcomes_;
};

// Nondecreasing rearrangement of an OutcomeVector. `permutation[k]` is the
// atom index whose outcome lands at sorted position k, so
// source[permutation[k]] == sorted[k]. Ties keep original atom order.
struct OrderStatistics {
  std::vector<Rational> sorted;
  std::vector<std::size_t> permutation;
};

OrderStatistics order_statistics(const OutcomeVector& x);

// Nondecreasing copy of the outcomes, without the witnessing permutation.
std::vector<Rational> sorted_outcomes(const OutcomeVector& x);

// F_X(t) = #{i : x_i <= t} / n.
Rational cdf(const OutcomeVector& x, const Rational& t);

// Integral of F_X over (-inf, t], via (1/n) * sum_i (t - x_i)^+.
Rational integrated_cdf(const OutcomeVector& x, const Rational& t);

Rational mean(const OutcomeVector& x);
Rational min_outcome(const OutcomeVector& x);
Rational max_outcome(const OutcomeVector& x);

// X_pi = (x_{pi(0)}, ..., x_{pi(n-1)}). `pi` must be a permutation of
// 0..n-1; throws std::invalid_argument otherwise.
OutcomeVector permuted(const OutcomeVector& x,
                       std::span<const std::size_t> pi);

bool is_permutation_of_indices(std::span<const std::size_t> pi,
                               std::size_t n);

// Pointwise arithmetic. Binary forms throw std::invalid_argument on a
// dimension mismatch.
OutcomeVector operator+(const OutcomeVector& a, const OutcomeVector& b);
OutcomeVector operator-(const OutcomeVector& a, const OutcomeVector& b);
OutcomeVector operator+(const OutcomeVector& a, const Rational& c);
OutcomeVector operator*(const Rational& k, const OutcomeVector& a);

// a <= b in every component.
bool pointwise_le(const OutcomeVector& a, const OutcomeVector& b);

void require_same_dimension(std::size_t a, std::size_t b, const char* what);

}  // namespace riskgrid

#endif  // RISKGRID_OUTCOME_H_

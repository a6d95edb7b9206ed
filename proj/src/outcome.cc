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

#include "riskgrid/outcome.h"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>

namespace riskgrid {

OutcomeVector::OutcomeVector(std::vector<Rational> outcomes)
    : outcomes_(std::move(outcomes)) {
  if (outcomes_.empty()) {
    throw std::invalid_argument("outcome vector needs at least one atom");
  }
}

void require_same_dimension(std::size_t a, std::size_t b, const char* what) {
  if (a != b) {
    throw std::invalid_argument(std::string(what) + ": dimension mismatch (" +
                                std::to_string(a) + " vs " +
                                std::to_string(b) + ")");
  }
}

OrderStatistics order_statistics(const OutcomeVector& x) {
  OrderStatistics os;
  os.permutation.resize(x.size());
  std::iota(os.permutation.begin(), os.permutation.end(), std::size_t{0});
  std::stable_sort(os.permutation.begin(), os.permutation.end(),
                   [&](std::size_t a, std::size_t b) { return x[a] < x[b]; });
  os.sorted.reserve(x.size());
  for (std::size_t atom : os.permutation) os.sorted.push_back(x[atom]);
  return os;
}

std::vector<Rational> sorted_outcomes(const OutcomeVector& x) {
  std::vector<Rational> sorted(x.begin(), x.end());
  std::sort(sorted.begin(), sorted.end());
  return sorted;
}

Rational cdf(const OutcomeVector& x, const Rational& t) {
  const auto count = std::count_if(x.begin(), x.end(),
                                   [&](const Rational& v) { return v <= t; });
  return Rational(static_cast<std::int64_t>(count),
                  static_cast<std::int64_t>(x.size()));
}

Rational integrated_cdf(const OutcomeVector& x, const Rational& t) {
  Rational total;
  for (const Rational& v : x) total += positive_part(t - v);
  return total / Rational(x.size());
}

Rational mean(const OutcomeVector& x) {
  Rational total;
  for (const Rational& v : x) total += v;
  return total / Rational(x.size());
}

Rational min_outcome(const OutcomeVector& x) {
  return *std::min_element(x.begin(), x.end());
}

Rational max_outcome(const OutcomeVector& x) {
  return *std::max_element(x.begin(), x.end());
}

bool is_permutation_of_indices(std::span<const std::size_t> pi,
                               std::size_t n) {
  if (pi.size() != n) return false;
  std::vector<bool> seen(n, false);
  for (std::size_t i : pi) {
    if (i >= n || seen[i]) return false;
    seen[i] = true;
  }
  return true;
}

OutcomeVector permuted(const OutcomeVector& x,
                       std::span<const std::size_t> pi) {
  if (!is_permutation_of_indices(pi, x.size())) {
    throw std::invalid_argument("permuted: not a permutation of the atoms");
  }
  std::vector<Rational> out;
  out.reserve(x.size());
  for (std::size_t i : pi) out.push_back(x[i]);
  return OutcomeVector(std::move(out));
}

OutcomeVector operator+(const OutcomeVector& a, const OutcomeVector& b) {
  require_same_dimension(a.size(), b.size(), "outcome sum");
  std::vector<Rational> out;
  out.reserve(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out.push_back(a[i] + b[i]);
  return OutcomeVector(std::move(out));
}

OutcomeVector operator-(const OutcomeVector& a, const OutcomeVector& b) {
  require_same_dimension(a.size(), b.size(), "outcome difference");
  std::vector<Rational> out;
  out.reserve(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out.push_back(a[i] - b[i]);
  return OutcomeVector(std::move(out));
}

OutcomeVector operator+(const OutcomeVector& a, const Rational& c) {
  std::vector<Rational> out;
  out.reserve(a.size());
  for (const Rational& v : a) out.push_back(v + c);
  return OutcomeVector(std::move(out));
}

OutcomeVector operator*(const Rational& k, const OutcomeVector& a) {
  std::vector<Rational> out;
  out.reserve(a.size());
  for (const Rational& v : a) out.push_back(k * v);
  return OutcomeVector(std::move(out));
}

bool pointwise_le(const OutcomeVector& a, const OutcomeVector& b) {
  require_same_dimension(a.size(), b.size(), "pointwise comparison");
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (b[i] < a[i]) return false;
  }
  return true;
}

}  // namespace riskgrid

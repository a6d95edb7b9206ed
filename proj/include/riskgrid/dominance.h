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

#ifndef RISKGRID_DOMINANCE_H_
#define RISKGRID_DOMINANCE_H_

#include <cstddef>
#include <optional>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "riskgrid/outcome.h"
#include "riskgrid/rational.h"

namespace riskgrid {

// Square matrix with nonnegative entries whose rows and columns each sum
// to one. Stored row-major.
class DoublyStochasticMatrix {
 public:
  // Throws std::invalid_argument if `rows` is empty, ragged, or not
  // doubly stochastic.
  explicit DoublyStochasticMatrix(std::vector<std::vector<Rational>> rows);

  static DoublyStochasticMatrix identity(std::size_t n);

  // Row i has its 1 in column perm[i], so (P y)_i = y_{perm[i]}.
  static DoublyStochasticMatrix permutation(std::span<const std::size_t> perm);

  std::size_t size() const { return n_; }
  const Rational& at(std::size_t row, std::size_t col) const {
    return entries_[row * n_ + col];
  }
  std::vector<std::vector<Rational>> rows() const;

  // A y.
  OutcomeVector apply(const OutcomeVector& y) const;

  friend DoublyStochasticMatrix operator*(const DoublyStochasticMatrix& a,
                                          const DoublyStochasticMatrix& b);
  friend bool operator==(const DoublyStochasticMatrix&,
                         const DoublyStochasticMatrix&) = default;

 private:
  DoublyStochasticMatrix(std::size_t n, std::vector<Rational> entries);

  std::size_t n_ = 0;
  std::vector<Rational> entries_;
};

bool is_doubly_stochastic(const std::vector<std::vector<Rational>>& rows);

struct BirkhoffTerm {
  Rational weight;
  std::vector<std::size_t> permutation;  // row -> column, as above
};

struct BirkhoffDecomposition {
  std::vector<BirkhoffTerm> terms;

  // sum_j weight_j P_j as a plain matrix.
  std::vector<std::vector<Rational>> reconstruct(std::size_t n) const;
};

// Peels permutation matrices off A: each round finds a perfect matching on
// the positive entries (rows in order, free columns first, lowest first),
// subtracts the smallest matched entry times that permutation, and repeats
// until nothing is left. At most n^2 - 2n + 2 terms.
BirkhoffDecomposition birkhoff_decompose(const DoublyStochasticMatrix& a);

struct ComonotoneCheck {
  bool comonotone = true;
  // First violating atom pair (i < j) in lexicographic order.
  std::optional<std::pair<std::size_t, std::size_t>> witness;
};

// (x_i - x_j)(y_i - y_j) >= 0 for every atom pair.
ComonotoneCheck is_comonotone(const OutcomeVector& x, const OutcomeVector& y);

// Second-order dominance on the uniform n-point space. X ⪯ Y ("Y dominates
// X" as a risk) holds when, equivalently:
//   * every sum of the l largest outcomes of X is <= that of Y;
//   * AVaR_{i/n}(X) <= AVaR_{i/n}(Y) for i = 0..n-1;
//   * E[(X - t)^+] <= E[(Y - t)^+] for every t, which by
//     E[(X - t)^+] = integral_{-inf}^t F_X + E[X] - t is a comparison of
//     integrated CDFs shifted by the means, checked at all outcome values.
// Any coherent law-invariant risk measure satisfies rho(X) <= rho(Y) then.
enum class DominanceMethod { kIntegratedCdf, kAvarGrid, kWeakMajorization, kAll };

enum class DominanceRelation {
  kLeftDominated,   // X ⪯ Y
  kRightDominated,  // Y ⪯ X
  kEquivalent,      // both
  kIncomparable,
};

std::string_view to_string(DominanceRelation relation);
std::string_view to_string(DominanceMethod method);

// Where one direction first failed: prefix length l (weak majorization),
// grid index i with level i/n (AVaR grid), or breakpoint t (integrated
// CDF). `lhs` > `rhs` at `location`.
struct DominanceWitness {
  std::size_t index = 0;
  Rational location;
  Rational lhs;
  Rational rhs;
};

struct MethodEvidence {
  DominanceMethod method = DominanceMethod::kWeakMajorization;
  bool left_le_right = true;  // X ⪯ Y by this method
  bool right_le_left = true;  // Y ⪯ X by this method
  std::optional<DominanceWitness> left_failure;
  std::optional<DominanceWitness> right_failure;

  DominanceRelation relation() const;
};

struct DominanceVerdict {
  DominanceRelation relation = DominanceRelation::kEquivalent;
  std::vector<MethodEvidence> evidence;
};

// Throws std::invalid_argument on a dimension mismatch. With kAll, throws
// std::logic_error if the three methods disagree.
DominanceVerdict ssd_compare(const OutcomeVector& x, const OutcomeVector& y,
                             DominanceMethod method = DominanceMethod::kAll);

bool ssd_dominated(const OutcomeVector& x, const OutcomeVector& y);

// Builds a doubly stochastic A with X <= A Y componentwise. Throws
// std::domain_error unless X ⪯ Y.
DoublyStochasticMatrix hlp_transfer_matrix(const OutcomeVector& x,
                                           const OutcomeVector& y);

}  // namespace riskgrid

#endif  // RISKGRID_DOMINANCE_H_

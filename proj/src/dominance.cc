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

#include "riskgrid/dominance.h"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

#include "riskgrid/avar.h"

namespace riskgrid {
namespace {

std::vector<Rational> descending(const OutcomeVector& x) {
  std::vector<Rational> v = sorted_outcomes(x);
  std::reverse(v.begin(), v.end());
  return v;
}

// Atom indices ordered by decreasing outcome, ties by atom index.
std::vector<std::size_t> descending_order(const OutcomeVector& x) {
  std::vector<std::size_t> order(x.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return x[b] < x[a]; });
  return order;
}

std::vector<std::size_t> inverse(std::span<const std::size_t> perm) {
  std::vector<std::size_t> inv(perm.size());
  for (std::size_t i = 0; i < perm.size(); ++i) inv[perm[i]] = i;
  return inv;
}

// Fills one direction of `evidence` from two pointwise-comparable series.
void compare_series(const std::vector<Rational>& a,
                    const std::vector<Rational>& b,
                    const std::vector<Rational>& locations,
                    std::size_t index_base, MethodEvidence& evidence) {
  for (std::size_t k = 0; k < a.size(); ++k) {
    if (evidence.left_le_right && b[k] < a[k]) {
      evidence.left_le_right = false;
      evidence.left_failure =
          DominanceWitness{k + index_base, locations[k], a[k], b[k]};
    }
    if (evidence.right_le_left && a[k] < b[k]) {
      evidence.right_le_left = false;
      evidence.right_failure =
          DominanceWitness{k + index_base, locations[k], b[k], a[k]};
    }
  }
}

MethodEvidence by_weak_majorization(const OutcomeVector& x,
                                    const OutcomeVector& y) {
  const std::vector<Rational> xd = descending(x);
  const std::vector<Rational> yd = descending(y);
  std::vector<Rational> px, py, where;
  Rational sx, sy;
  for (std::size_t l = 0; l < xd.size(); ++l) {
    sx += xd[l];
    sy += yd[l];
    px.push_back(sx);
    py.push_back(sy);
    where.emplace_back(l + 1);
  }
  MethodEvidence evidence;
  evidence.method = DominanceMethod::kWeakMajorization;
  compare_series(px, py, where, 1, evidence);
  return evidence;
}

MethodEvidence by_avar_grid(const OutcomeVector& x, const OutcomeVector& y) {
  std::vector<Rational> gx = avar_grid(x);
  std::vector<Rational> gy = avar_grid(y);
  gx.pop_back();  // AVaR_1 repeats AVaR_{(n-1)/n}
  gy.pop_back();
  std::vector<Rational> where;
  for (std::size_t i = 0; i < gx.size(); ++i) {
    where.push_back(Level::grid(i, x.size()).alpha());
  }
  MethodEvidence evidence;
  evidence.method = DominanceMethod::kAvarGrid;
  compare_series(gx, gy, where, 0, evidence);
  return evidence;
}

MethodEvidence by_integrated_cdf(const OutcomeVector& x,
                                 const OutcomeVector& y) {
  std::vector<Rational> breaks(x.begin(), x.end());
  breaks.insert(breaks.end(), y.begin(), y.end());
  std::sort(breaks.begin(), breaks.end());
  breaks.erase(std::unique(breaks.begin(), breaks.end()), breaks.end());

  const Rational mx = mean(x);
  const Rational my = mean(y);
  std::vector<Rational> tx, ty;
  for (const Rational& t : breaks) {
    tx.push_back(integrated_cdf(x, t) + mx - t);
    ty.push_back(integrated_cdf(y, t) + my - t);
  }
  MethodEvidence evidence;
  evidence.method = DominanceMethod::kIntegratedCdf;
  compare_series(tx, ty, breaks, 0, evidence);
  return evidence;
}

DominanceRelation combine(bool left, bool right) {
  if (left && right) return DominanceRelation::kEquivalent;
  if (left) return DominanceRelation::kLeftDominated;
  if (right) return DominanceRelation::kRightDominated;
  return DominanceRelation::kIncomparable;
}

// Raises the smallest components of the descending vector `xd` to a common
// level so the total matches `target_total`; the result stays descending.
std::vector<Rational> water_fill(const std::vector<Rational>& xd,
                                 const Rational& target_total) {
  const std::size_t n = xd.size();
  Rational head = std::accumulate(xd.begin(), xd.end(), Rational());
  for (std::size_t m = 1; m <= n; ++m) {
    head -= xd[n - m];  // sum of the top n - m entries
    const Rational level = (target_total - head) / Rational(m);
    if (level < xd[n - m]) continue;
    if (m < n && xd[n - m - 1] < level) continue;
    std::vector<Rational> u(xd.begin(), xd.end());
    std::fill(u.begin() + static_cast<std::ptrdiff_t>(n - m), u.end(), level);
    return u;
  }
  throw std::logic_error("water_fill: no level found");
}

}  // namespace

DoublyStochasticMatrix::DoublyStochasticMatrix(std::size_t n,
                                               std::vector<Rational> entries)
    : n_(n), entries_(std::move(entries)) {}

DoublyStochasticMatrix::DoublyStochasticMatrix(
    std::vector<std::vector<Rational>> rows) {
  if (!is_doubly_stochastic(rows)) {
    throw std::invalid_argument("matrix is not doubly stochastic");
  }
  n_ = rows.size();
  entries_.reserve(n_ * n_);
  for (auto& row : rows) {
    for (auto& v : row) entries_.push_back(std::move(v));
  }
}

bool is_doubly_stochastic(const std::vector<std::vector<Rational>>& rows) {
  const std::size_t n = rows.size();
  if (n == 0) return false;
  std::vector<Rational> col(n);
  for (const auto& row : rows) {
    if (row.size() != n) return false;
    Rational total;
    for (std::size_t j = 0; j < n; ++j) {
      if (row[j].sign() < 0) return false;
      total += row[j];
      col[j] += row[j];
    }
    if (total != Rational(1)) return false;
  }
  return std::all_of(col.begin(), col.end(),
                     [](const Rational& c) { return c == Rational(1); });
}

DoublyStochasticMatrix DoublyStochasticMatrix::identity(std::size_t n) {
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  return permutation(perm);
}

DoublyStochasticMatrix DoublyStochasticMatrix::permutation(
    std::span<const std::size_t> perm) {
  const std::size_t n = perm.size();
  if (n == 0 || !is_permutation_of_indices(perm, n)) {
    throw std::invalid_argument("not a permutation");
  }
  std::vector<Rational> entries(n * n);
  for (std::size_t i = 0; i < n; ++i) entries[i * n + perm[i]] = Rational(1);
  return DoublyStochasticMatrix(n, std::move(entries));
}

std::vector<std::vector<Rational>> DoublyStochasticMatrix::rows() const {
  std::vector<std::vector<Rational>> out(n_);
  for (std::size_t i = 0; i < n_; ++i) {
    out[i].assign(entries_.begin() + static_cast<std::ptrdiff_t>(i * n_),
                  entries_.begin() + static_cast<std::ptrdiff_t>((i + 1) * n_));
  }
  return out;
}

OutcomeVector DoublyStochasticMatrix::apply(const OutcomeVector& y) const {
  require_same_dimension(n_, y.size(), "matrix apply");
  std::vector<Rational> out(n_);
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = 0; j < n_; ++j) {
      if (!at(i, j).is_zero()) out[i] += at(i, j) * y[j];
    }
  }
  return OutcomeVector(std::move(out));
}

DoublyStochasticMatrix operator*(const DoublyStochasticMatrix& a,
                                 const DoublyStochasticMatrix& b) {
  require_same_dimension(a.n_, b.n_, "matrix product");
  const std::size_t n = a.n_;
  std::vector<Rational> entries(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      if (a.at(i, k).is_zero()) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (!b.at(k, j).is_zero()) entries[i * n + j] += a.at(i, k) * b.at(k, j);
      }
    }
  }
  return DoublyStochasticMatrix(n, std::move(entries));
}

std::vector<std::vector<Rational>> BirkhoffDecomposition::reconstruct(
    std::size_t n) const {
  std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n));
  for (const BirkhoffTerm& term : terms) {
    for (std::size_t i = 0; i < n; ++i) m[i][term.permutation[i]] += term.weight;
  }
  return m;
}

BirkhoffDecomposition birkhoff_decompose(const DoublyStochasticMatrix& a) {
  const std::size_t n = a.size();
  std::vector<std::vector<Rational>> rest = a.rows();
  constexpr std::size_t kUnmatched = static_cast<std::size_t>(-1);

  // Kuhn's augmenting paths over the positive support. A free column is
  // taken before any matched one is displaced.
  std::vector<std::size_t> row_of_col(n);
  std::vector<bool> seen(n);
  auto augment = [&](auto&& self, std::size_t row) -> bool {
    for (std::size_t col = 0; col < n; ++col) {
      if (rest[row][col].sign() > 0 && row_of_col[col] == kUnmatched) {
        row_of_col[col] = row;
        return true;
      }
    }
    for (std::size_t col = 0; col < n; ++col) {
      if (rest[row][col].sign() <= 0 || seen[col]) continue;
      seen[col] = true;
      if (self(self, row_of_col[col])) {
        row_of_col[col] = row;
        return true;
      }
    }
    return false;
  };

  BirkhoffDecomposition out;
  Rational remaining(1);
  while (remaining.sign() > 0) {
    std::fill(row_of_col.begin(), row_of_col.end(), kUnmatched);
    for (std::size_t row = 0; row < n; ++row) {
      std::fill(seen.begin(), seen.end(), false);
      if (!augment(augment, row)) {
        throw std::logic_error("birkhoff_decompose: no perfect matching");
      }
    }
    std::vector<std::size_t> perm(n);
    for (std::size_t col = 0; col < n; ++col) perm[row_of_col[col]] = col;

    Rational weight = rest[0][perm[0]];
    for (std::size_t i = 1; i < n; ++i) weight = min(weight, rest[i][perm[i]]);
    for (std::size_t i = 0; i < n; ++i) rest[i][perm[i]] -= weight;
    remaining -= weight;
    out.terms.push_back(BirkhoffTerm{std::move(weight), std::move(perm)});
  }
  return out;
}

ComonotoneCheck is_comonotone(const OutcomeVector& x, const OutcomeVector& y) {
  require_same_dimension(x.size(), y.size(), "is_comonotone");
  for (std::size_t i = 0; i < x.size(); ++i) {
    for (std::size_t j = i + 1; j < x.size(); ++j) {
      if (((x[i] - x[j]) * (y[i] - y[j])).sign() < 0) {
        return ComonotoneCheck{false, std::make_pair(i, j)};
      }
    }
  }
  return ComonotoneCheck{};
}

std::string_view to_string(DominanceRelation relation) {
  switch (relation) {
    case DominanceRelation::kLeftDominated:
      return "LeftDominated";
    case DominanceRelation::kRightDominated:
      return "RightDominated";
    case DominanceRelation::kEquivalent:
      return "Equivalent";
    case DominanceRelation::kIncomparable:
      return "Incomparable";
  }
  return "Incomparable";
}

std::string_view to_string(DominanceMethod method) {
  switch (method) {
    case DominanceMethod::kIntegratedCdf:
      return "integrated-cdf";
    case DominanceMethod::kAvarGrid:
      return "avar-grid";
    case DominanceMethod::kWeakMajorization:
      return "weak-majorization";
    case DominanceMethod::kAll:
      return "all";
  }
  return "all";
}

DominanceRelation MethodEvidence::relation() const {
  return combine(left_le_right, right_le_left);
}

DominanceVerdict ssd_compare(const OutcomeVector& x, const OutcomeVector& y,
                             DominanceMethod method) {
  require_same_dimension(x.size(), y.size(), "ssd_compare");
  DominanceVerdict verdict;
  switch (method) {
    case DominanceMethod::kIntegratedCdf:
      verdict.evidence.push_back(by_integrated_cdf(x, y));
      break;
    case DominanceMethod::kAvarGrid:
      verdict.evidence.push_back(by_avar_grid(x, y));
      break;
    case DominanceMethod::kWeakMajorization:
      verdict.evidence.push_back(by_weak_majorization(x, y));
      break;
    case DominanceMethod::kAll:
      verdict.evidence.push_back(by_integrated_cdf(x, y));
      verdict.evidence.push_back(by_avar_grid(x, y));
      verdict.evidence.push_back(by_weak_majorization(x, y));
      break;
  }
  verdict.relation = verdict.evidence.front().relation();
  for (const MethodEvidence& e : verdict.evidence) {
    if (e.relation() != verdict.relation) {
      throw std::logic_error(
          "ssd_compare: methods disagree (" +
          std::string(to_string(verdict.evidence.front().method)) + " says " +
          std::string(to_string(verdict.relation)) + ", " +
          std::string(to_string(e.method)) + " says " +
          std::string(to_string(e.relation())) + ")");
    }
  }
  return verdict;
}

bool ssd_dominated(const OutcomeVector& x, const OutcomeVector& y) {
  return by_weak_majorization(x, y).left_le_right;
}

DoublyStochasticMatrix hlp_transfer_matrix(const OutcomeVector& x,
                                           const OutcomeVector& y) {
  require_same_dimension(x.size(), y.size(), "hlp_transfer_matrix");
  if (!ssd_dominated(x, y)) {
    throw std::domain_error(
        "hlp_transfer_matrix: X is not dominated by Y (X ⪯ Y fails)");
  }
  const std::size_t n = x.size();
  const std::vector<std::size_t> x_order = descending_order(x);
  const std::vector<std::size_t> y_order = descending_order(y);
  std::vector<Rational> xd, yd;
  for (std::size_t k = 0; k < n; ++k) {
    xd.push_back(x[x_order[k]]);
    yd.push_back(y[y_order[k]]);
  }
  const Rational y_total = std::accumulate(yd.begin(), yd.end(), Rational());
  const std::vector<Rational> target = water_fill(xd, y_total);

  // T-transform chain taking yd to target, which yd majorizes.
  DoublyStochasticMatrix chain = DoublyStochasticMatrix::identity(n);
  std::vector<Rational> current = yd;
  for (std::size_t step = 0; current != target; ++step) {
    if (step > n * n) throw std::logic_error("hlp: T-transform chain stalled");
    std::size_t j = n;
    for (std::size_t i = n; i-- > 0;) {
      if (target[i] < current[i]) {
        j = i;
        break;
      }
    }
    std::size_t k = j + 1;
    while (k < n && !(current[k] < target[k])) ++k;
    if (j == n || k >= n) throw std::logic_error("hlp: majorization broken");

    const Rational delta =
        min(current[j] - target[j], target[k] - current[k]);
    const Rational share = delta / (current[j] - current[k]);
    std::vector<std::vector<Rational>> t(n, std::vector<Rational>(n));
    for (std::size_t i = 0; i < n; ++i) t[i][i] = Rational(1);
    t[j][j] = t[k][k] = Rational(1) - share;
    t[j][k] = t[k][j] = share;
    chain = DoublyStochasticMatrix(std::move(t)) * chain;
    current[j] -= delta;
    current[k] += delta;
  }

  // Undo the sorting: X = Px^T xd <= Px^T chain Py Y.
  const DoublyStochasticMatrix a =
      DoublyStochasticMatrix::permutation(inverse(x_order)) * chain *
      DoublyStochasticMatrix::permutation(y_order);
  if (!pointwise_le(x, a.apply(y))) {
    throw std::logic_error("hlp_transfer_matrix: X <= AY check failed");
  }
  return a;
}

}  // namespace riskgrid

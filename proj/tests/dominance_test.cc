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

#include <gtest/gtest.h>

#include <stdexcept>
#include <utility>
#include <vector>

#include "oracles.h"
#include "riskgrid/avar.h"
#include "riskgrid/axioms.h"
#include "riskgrid/kusuoka.h"
#include "riskgrid/sampling.h"

namespace riskgrid {
namespace {

using Matrix = std::vector<std::vector<Rational>>;

OutcomeVector vec(std::initializer_list<const char*> values) {
  std::vector<Rational> out;
  for (const char* v : values) out.push_back(Rational::parse(v));
  return OutcomeVector(std::move(out));
}

bool dominated_by_top_sums(const OutcomeVector& x, const OutcomeVector& y) {
  for (std::size_t l = 1; l <= x.size(); ++l) {
    if (oracle::top_sum_by_subsets(y, l) < oracle::top_sum_by_subsets(x, l)) {
      return false;
    }
  }
  return true;
}

std::size_t birkhoff_bound(std::size_t n) { return n * n - 2 * n + 2; }

void expect_valid_decomposition(const DoublyStochasticMatrix& a) {
  const BirkhoffDecomposition d = birkhoff_decompose(a);
  const std::size_t n = a.size();
  EXPECT_LE(d.terms.size(), birkhoff_bound(n));
  Rational total;
  for (const BirkhoffTerm& term : d.terms) {
    EXPECT_GT(term.weight, Rational(0));
    EXPECT_TRUE(is_permutation_of_indices(term.permutation, n));
    total += term.weight;
  }
  EXPECT_EQ(total, Rational(1));
  EXPECT_EQ(d.reconstruct(n), a.rows());
}

TEST(ComonotoneTest, WorkedPairIsNotComonotone) {
  const ComonotoneCheck c =
      is_comonotone(vec({"0", "1", "0.8", "3"}), vec({"0", "1", "-1", "0.5"}));
  EXPECT_FALSE(c.comonotone);
  ASSERT_TRUE(c.witness.has_value());
  EXPECT_EQ(*c.witness, (std::pair<std::size_t, std::size_t>{0, 2}));
}

TEST(ComonotoneTest, SelfAndConstantPairs) {
  const OutcomeVector x = vec({"0", "1", "0.8", "3"});
  EXPECT_TRUE(is_comonotone(x, x).comonotone);
  EXPECT_TRUE(is_comonotone(x, vec({"2", "2", "2", "2"})).comonotone);
  EXPECT_FALSE(is_comonotone(x, x).witness.has_value());
  EXPECT_THROW(is_comonotone(x, vec({"1"})), std::invalid_argument);
}

TEST(ComonotoneTest, SymmetricInItsArguments) {
  Rng rng(41);
  for (int t = 0; t < 500; ++t) {
    const std::size_t n = 1 + rng.below(6);
    const OutcomeVector x = rng.lattice_vector(n, -2, 2, 4);
    const OutcomeVector y = rng.lattice_vector(n, -2, 2, 4);
    EXPECT_EQ(is_comonotone(x, y).comonotone, is_comonotone(y, x).comonotone);
  }
}

TEST(SsdTest, SpreadIsRiskierThanItsConcentration) {
  // Y = (2,2,3,3) concentrates X = (1,2,3,4): same mean, smaller tails.
  const OutcomeVector x = vec({"1", "2", "3", "4"});
  const OutcomeVector y = vec({"2", "2", "3", "3"});
  EXPECT_EQ(ssd_compare(x, y).relation, DominanceRelation::kRightDominated);
  EXPECT_EQ(ssd_compare(y, x).relation, DominanceRelation::kLeftDominated);
  EXPECT_TRUE(ssd_dominated(y, x));
  EXPECT_FALSE(ssd_dominated(x, y));
}

TEST(SsdTest, PermutationsAreEquivalent) {
  EXPECT_EQ(ssd_compare(vec({"1", "2", "3"}), vec({"3", "1", "2"})).relation,
            DominanceRelation::kEquivalent);
}

TEST(SsdTest, CrossingTailsAreIncomparable) {
  // (0,3) has the larger top but the smaller mean.
  EXPECT_EQ(ssd_compare(vec({"0", "3"}), vec({"2", "2"})).relation,
            DominanceRelation::kIncomparable);
}

TEST(SsdTest, ShiftedConstantsOrderByLevel) {
  const DominanceVerdict v = ssd_compare(vec({"0", "0"}), vec({"1", "1"}));
  EXPECT_EQ(v.relation, DominanceRelation::kLeftDominated);
  EXPECT_EQ(v.evidence.size(), 3u);
  for (const MethodEvidence& e : v.evidence) {
    EXPECT_TRUE(e.left_le_right);
    EXPECT_FALSE(e.right_le_left);
    ASSERT_TRUE(e.right_failure.has_value());
    EXPECT_GT(e.right_failure->lhs, e.right_failure->rhs);
  }
}

TEST(SsdTest, SingleMethodAndErrors) {
  const OutcomeVector x = vec({"1", "2", "3", "4"});
  const OutcomeVector y = vec({"2", "2", "3", "3"});
  for (auto m : {DominanceMethod::kIntegratedCdf, DominanceMethod::kAvarGrid,
                 DominanceMethod::kWeakMajorization}) {
    const DominanceVerdict v = ssd_compare(x, y, m);
    EXPECT_EQ(v.relation, DominanceRelation::kRightDominated);
    ASSERT_EQ(v.evidence.size(), 1u);
    EXPECT_EQ(v.evidence[0].method, m);
  }
  EXPECT_THROW(ssd_compare(x, vec({"1"})), std::invalid_argument);
  EXPECT_EQ(to_string(DominanceRelation::kLeftDominated), "LeftDominated");
  EXPECT_EQ(to_string(DominanceMethod::kAvarGrid), "avar-grid");
}

TEST(SsdPropertyTest, MethodsAgreeWithBruteForce) {
  Rng rng(42);
  for (int t = 0; t < 2000; ++t) {
    const std::size_t n = 1 + rng.below(8);
    const OutcomeVector x = rng.lattice_vector(n, -3, 3, 6);
    OutcomeVector y = rng.lattice_vector(n, -3, 3, 6);
    if (t % 2 == 0) y = permuted(x, rng.permutation(n)) + rng.lattice(0, 1, 2);
    const DominanceVerdict v = ssd_compare(x, y);  // throws on disagreement
    const bool le = dominated_by_top_sums(x, y);
    const bool ge = dominated_by_top_sums(y, x);
    EXPECT_EQ(le, oracle::dominated_by_stop_loss(x, y));
    EXPECT_EQ(ge, oracle::dominated_by_stop_loss(y, x));
    const DominanceRelation expected =
        le && ge ? DominanceRelation::kEquivalent
        : le     ? DominanceRelation::kLeftDominated
        : ge     ? DominanceRelation::kRightDominated
                 : DominanceRelation::kIncomparable;
    EXPECT_EQ(v.relation, expected);
  }
}

TEST(SsdPropertyTest, DominanceOrdersEveryGridAvar) {
  Rng rng(43);
  AuditConfig cfg;
  for (std::uint64_t t = 0; t < 300; ++t) {
    cfg.n = 1 + rng.below(8);
    const auto [x, y] = gen_dominated_pair(43, t, cfg);
    ASSERT_TRUE(ssd_dominated(x, y));
    const auto gx = avar_grid(x);
    const auto gy = avar_grid(y);
    for (std::size_t i = 0; i < gx.size(); ++i) EXPECT_LE(gx[i], gy[i]);
  }
}

TEST(DoublyStochasticTest, Validation) {
  EXPECT_THROW(DoublyStochasticMatrix({}), std::invalid_argument);
  EXPECT_THROW(DoublyStochasticMatrix(Matrix{{1, 0}, {1, 0}}),
               std::invalid_argument);
  EXPECT_THROW(DoublyStochasticMatrix(Matrix{{1, 0}, {0}}),
               std::invalid_argument);
  EXPECT_THROW(
      DoublyStochasticMatrix(Matrix{{Rational(3, 2), Rational(-1, 2)},
                                    {Rational(-1, 2), Rational(3, 2)}}),
      std::invalid_argument);
  const std::vector<std::size_t> perm{2, 0, 1};
  const auto p = DoublyStochasticMatrix::permutation(perm);
  EXPECT_EQ(p.apply(vec({"10", "20", "30"})), vec({"30", "10", "20"}));
  EXPECT_EQ(DoublyStochasticMatrix::identity(3) * p, p);
}

TEST(BirkhoffTest, Identity) {
  const BirkhoffDecomposition d =
      birkhoff_decompose(DoublyStochasticMatrix::identity(4));
  ASSERT_EQ(d.terms.size(), 1u);
  EXPECT_EQ(d.terms[0].weight, Rational(1));
  EXPECT_EQ(d.terms[0].permutation, (std::vector<std::size_t>{0, 1, 2, 3}));
}

TEST(BirkhoffTest, UniformTwoByTwo) {
  const Rational h(1, 2);
  const BirkhoffDecomposition d =
      birkhoff_decompose(DoublyStochasticMatrix(Matrix{{h, h}, {h, h}}));
  ASSERT_EQ(d.terms.size(), 2u);
  EXPECT_EQ(d.terms[0].weight, h);
  EXPECT_EQ(d.terms[0].permutation, (std::vector<std::size_t>{0, 1}));
  EXPECT_EQ(d.terms[1].weight, h);
  EXPECT_EQ(d.terms[1].permutation, (std::vector<std::size_t>{1, 0}));
}

TEST(BirkhoffTest, WorkedThreeByThree) {
  const Rational h(1, 2), q(1, 4);
  const DoublyStochasticMatrix a(Matrix{{h, h, 0}, {q, q, h}, {q, q, h}});
  expect_valid_decomposition(a);
  EXPECT_LE(birkhoff_decompose(a).terms.size(), 5u);
}

TEST(BirkhoffPropertyTest, RandomMatricesReconstruct) {
  Rng rng(44);
  for (int t = 0; t < 300; ++t) {
    const std::size_t n = 1 + rng.below(8);
    expect_valid_decomposition(rng.doubly_stochastic(n, 2 * n));
  }
}

TEST(HlpTest, EqualVectorsGiveIdentity) {
  const OutcomeVector x = vec({"3", "1", "2"});
  EXPECT_EQ(hlp_transfer_matrix(x, x), DoublyStochasticMatrix::identity(3));
}

TEST(HlpTest, MeanOfASpreadIsOneAveraging) {
  const Rational h(1, 2);
  const DoublyStochasticMatrix a =
      hlp_transfer_matrix(vec({"2.5", "2.5"}), vec({"1", "4"}));
  EXPECT_EQ(a, DoublyStochasticMatrix(Matrix{{h, h}, {h, h}}));
  EXPECT_EQ(a.apply(vec({"1", "4"})), vec({"2.5", "2.5"}));
}

TEST(HlpTest, ConcentrationUnderItsSpread) {
  const OutcomeVector x = vec({"2", "2", "3", "3"});
  const OutcomeVector y = vec({"1", "2", "3", "4"});
  const DoublyStochasticMatrix a = hlp_transfer_matrix(x, y);
  EXPECT_TRUE(is_doubly_stochastic(a.rows()));
  EXPECT_TRUE(pointwise_le(x, a.apply(y)));
}

TEST(HlpTest, RefusesWithoutDominance) {
  EXPECT_THROW(hlp_transfer_matrix(vec({"1", "2", "3", "4"}),
                                   vec({"2", "2", "3", "3"})),
               std::domain_error);
  EXPECT_THROW(hlp_transfer_matrix(vec({"1"}), vec({"0"})), std::domain_error);
}

TEST(HlpPropertyTest, CertificatesHold) {
  AuditConfig cfg;
  Rng rng(45);
  for (std::uint64_t t = 0; t < 300; ++t) {
    cfg.n = 1 + rng.below(8);
    const auto [x, y] = gen_dominated_pair(45, t, cfg);
    const DoublyStochasticMatrix a = hlp_transfer_matrix(x, y);
    EXPECT_TRUE(is_doubly_stochastic(a.rows()));
    EXPECT_TRUE(pointwise_le(x, a.apply(y)));
  }
}

TEST(HlpPropertyTest, SpectralOrderFollowsFromTheCertificate) {
  // rho(X) <= rho(AY) <= sum_j alpha_j rho(P_j Y) = rho(Y).
  AuditConfig cfg;
  Rng rng(46);
  for (std::uint64_t t = 0; t < 200; ++t) {
    cfg.n = 1 + rng.below(6);
    const auto [x, y] = gen_dominated_pair(46, t, cfg);
    const DoublyStochasticMatrix a = hlp_transfer_matrix(x, y);
    const BirkhoffDecomposition d = birkhoff_decompose(a);
    const SpectralWeights w =
        kusuoka_to_spectral(KusuokaMeasure(rng.simplex(cfg.n + 1, 10)));
    Rational mixed;
    for (const BirkhoffTerm& term : d.terms) {
      const OutcomeVector py =
          DoublyStochasticMatrix::permutation(term.permutation).apply(y);
      EXPECT_EQ(eval_spectral(w, py), eval_spectral(w, y));
      mixed += term.weight * eval_spectral(w, py);
    }
    EXPECT_LE(eval_spectral(w, x), eval_spectral(w, a.apply(y)));
    EXPECT_LE(eval_spectral(w, a.apply(y)), mixed);
    EXPECT_EQ(mixed, eval_spectral(w, y));
  }
}

}  // namespace
}  // namespace riskgrid

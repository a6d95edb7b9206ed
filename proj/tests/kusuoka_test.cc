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

#include <gtest/gtest.h>

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "oracles.h"
#include "riskgrid/risk_functional.h"
#include "riskgrid/sampling.h"

namespace riskgrid {
namespace {

std::vector<Rational> q(std::initializer_list<const char*> values) {
  std::vector<Rational> out;
  for (const char* v : values) out.push_back(Rational::parse(v));
  return out;
}

SpectralWeights random_spectral(Rng& rng, std::size_t n) {
  std::vector<std::int64_t> raw(n);
  std::int64_t total = 0;
  do {
    for (auto& r : raw) r = static_cast<std::int64_t>(rng.below(7));
    std::sort(raw.begin(), raw.end());
    total = 0;
    for (auto r : raw) total += r;
  } while (total == 0);
  std::vector<Rational> w;
  for (auto r : raw) w.emplace_back(r, total);
  return SpectralWeights(std::move(w));
}

KusuokaMeasure random_kusuoka(Rng& rng, std::size_t n) {
  return KusuokaMeasure(rng.simplex(n + 1, 12));
}

Rational kusuoka_by_oracle(const KusuokaMeasure& mu, const OutcomeVector& x) {
  const std::size_t n = mu.dimension();
  Rational total;
  for (std::size_t i = 0; i <= n; ++i) {
    total += mu[i] *
             oracle::avar_by_quantile_integral(x, Rational(i) / Rational(n));
  }
  return total;
}

TEST(SpectralWeightsTest, Validation) {
  EXPECT_NO_THROW(SpectralWeights(q({"1/4", "1/4", "1/4", "1/4"})));
  EXPECT_THROW(SpectralWeights({}), std::invalid_argument);
  EXPECT_THROW(SpectralWeights(q({"1/2", "1/4", "1/4"})),
               std::invalid_argument);
  EXPECT_THROW(SpectralWeights(q({"-1/2", "1/2", "1"})),
               std::invalid_argument);
  EXPECT_THROW(SpectralWeights(q({"1/4", "1/4"})), std::invalid_argument);
}

TEST(KusuokaMeasureTest, Validation) {
  EXPECT_NO_THROW(KusuokaMeasure(q({"0", "1"})));
  EXPECT_THROW(KusuokaMeasure(q({"1"})), std::invalid_argument);
  EXPECT_THROW(KusuokaMeasure(q({"3/2", "-1/2"})), std::invalid_argument);
  EXPECT_THROW(KusuokaMeasure(q({"1/2", "1/4"})), std::invalid_argument);
  EXPECT_EQ(KusuokaMeasure::point_mass(2, 4), KusuokaMeasure(q({"0", "0", "1", "0", "0"})));
  EXPECT_THROW(KusuokaMeasure::point_mass(5, 4), std::invalid_argument);
}

TEST(KusuokaFamilyTest, DeduplicatesKeepingFirst) {
  const KusuokaFamily family({KusuokaMeasure::point_mass(0, 2),
                              KusuokaMeasure::point_mass(1, 2),
                              KusuokaMeasure::point_mass(0, 2)});
  EXPECT_EQ(family.size(), 2u);
  EXPECT_EQ(family.members()[0], KusuokaMeasure::point_mass(0, 2));
  EXPECT_THROW(KusuokaFamily({}), std::invalid_argument);
  EXPECT_THROW(KusuokaFamily({KusuokaMeasure::point_mass(0, 2),
                              KusuokaMeasure::point_mass(0, 3)}),
               std::invalid_argument);
}

TEST(KusuokaEvalTest, WorkedValues) {
  const OutcomeVector x({0, 1, Rational(4, 5), 3});
  const SpectralWeights uniform(q({"1/4", "1/4", "1/4", "1/4"}));
  EXPECT_EQ(eval_spectral(uniform, x), Rational(6, 5));
  EXPECT_EQ(eval_kusuoka(KusuokaMeasure::point_mass(2, 4), x), Rational(2));
  EXPECT_EQ(eval_kusuoka(KusuokaMeasure(q({"1/2", "0", "1/2", "0", "0"})), x),
            Rational(8, 5));
  EXPECT_THROW(eval_spectral(uniform, OutcomeVector({1, 2})),
               std::invalid_argument);
}

TEST(KusuokaEvalTest, FamilyArgmaxTakesLowestIndexOnTies) {
  const OutcomeVector x({0, 1, Rational(4, 5), 3});
  const KusuokaFamily family({KusuokaMeasure::point_mass(0, 4),
                              KusuokaMeasure::point_mass(3, 4),
                              KusuokaMeasure::point_mass(4, 4)});
  const FamilyValue v = eval_family(family, x);
  EXPECT_EQ(v.value, Rational(3));
  EXPECT_EQ(v.argmax, 1u);
  const OutcomeVector flat({2, 2, 2, 2});
  EXPECT_EQ(eval_family(family, flat).argmax, 0u);
}

TEST(KusuokaConvertTest, WorkedConversions) {
  EXPECT_EQ(spectral_to_kusuoka(SpectralWeights(q({"1/4", "1/4", "1/4", "1/4"}))),
            KusuokaMeasure(q({"1", "0", "0", "0", "0"})));
  EXPECT_EQ(spectral_to_kusuoka(SpectralWeights(q({"0", "0", "1/2", "1/2"}))),
            KusuokaMeasure::point_mass(2, 4));
  EXPECT_EQ(spectral_to_kusuoka(SpectralWeights(q({"0", "0", "0", "1"}))),
            KusuokaMeasure::point_mass(3, 4));
  EXPECT_EQ(kusuoka_to_spectral(KusuokaMeasure::point_mass(4, 4)),
            SpectralWeights(q({"0", "0", "0", "1"})));
  EXPECT_EQ(kusuoka_to_spectral(KusuokaMeasure(q({"1/2", "0", "1/2", "0", "0"}))),
            SpectralWeights(q({"1/8", "1/8", "3/8", "3/8"})));
  EXPECT_EQ(canonical_kusuoka(KusuokaMeasure(q({"1/2", "0", "0", "1/4", "1/4"}))),
            KusuokaMeasure(q({"1/2", "0", "0", "1/2", "0"})));
}

TEST(KusuokaConvertTest, SpectralRoundTripIsIdentity) {
  Rng rng(31);
  for (int t = 0; t < 1000; ++t) {
    const SpectralWeights w = random_spectral(rng, 1 + rng.below(12));
    const KusuokaMeasure mu = spectral_to_kusuoka(w);
    EXPECT_TRUE(mu[mu.dimension()].is_zero());
    EXPECT_EQ(kusuoka_to_spectral(mu), w);
  }
}

TEST(KusuokaConvertTest, KusuokaRoundTripCanonicalizes) {
  Rng rng(32);
  for (int t = 0; t < 1000; ++t) {
    const std::size_t n = 1 + rng.below(10);
    const KusuokaMeasure mu = random_kusuoka(rng, n);
    const KusuokaMeasure back = spectral_to_kusuoka(kusuoka_to_spectral(mu));
    EXPECT_EQ(back, canonical_kusuoka(mu));
    const OutcomeVector x = rng.lattice_vector(n, -10, 10, 20);
    EXPECT_EQ(eval_kusuoka(back, x), eval_kusuoka(mu, x));
  }
}

TEST(KusuokaEvalTest, RepresentationsAgreeWithOracle) {
  Rng rng(33);
  for (int t = 0; t < 1000; ++t) {
    const std::size_t n = 1 + rng.below(10);
    const KusuokaMeasure mu = random_kusuoka(rng, n);
    const OutcomeVector x = rng.lattice_vector(n, -10, 10, 20);
    const Rational v = eval_kusuoka(mu, x);
    EXPECT_EQ(v, kusuoka_by_oracle(mu, x));
    EXPECT_EQ(v, eval_spectral(kusuoka_to_spectral(mu), x));
  }
}

TEST(KusuokaEvalTest, FamilyEqualsItsNaturalRiskStatistic) {
  Rng rng(34);
  for (int t = 0; t < 500; ++t) {
    const std::size_t n = 1 + rng.below(8);
    std::vector<KusuokaMeasure> members;
    const std::size_t m = 1 + rng.below(4);
    for (std::size_t k = 0; k < m; ++k) members.push_back(random_kusuoka(rng, n));
    const KusuokaFamily family(members);
    const OutcomeVector x = rng.lattice_vector(n, -10, 10, 20);
    const FamilyValue fv = eval_family(family, x);
    Rational best = eval_kusuoka(family.members()[0], x);
    for (const auto& mu : family.members()) best = max(best, eval_kusuoka(mu, x));
    EXPECT_EQ(fv.value, best);
    EXPECT_EQ(eval_kusuoka(family.members()[fv.argmax], x), best);
    EXPECT_EQ(eval_nrs(to_natural_risk_statistic(family), x), best);
  }
}

TEST(RiskFunctionalTest, KindsAndDimensions) {
  const auto mean = RiskFunctional::builtin_mean(3);
  EXPECT_EQ(mean.kind_name(), "mean");
  EXPECT_EQ(mean(OutcomeVector({1, 2, 6})), Rational(3));
  EXPECT_THROW(mean(OutcomeVector({1, 2})), std::invalid_argument);
  const auto top = RiskFunctional::builtin_max(3);
  EXPECT_EQ(top(OutcomeVector({1, 2, 6})), Rational(6));
  const auto av = RiskFunctional::builtin_avar(Level(Rational(1, 3)), 3);
  EXPECT_EQ(av.kind_name(), "avar");
  EXPECT_EQ(av(OutcomeVector({1, 2, 6})), Rational(4));
  EXPECT_EQ(RiskFunctional::kusuoka(KusuokaMeasure::point_mass(1, 3)).n(), 3u);
  EXPECT_EQ(RiskFunctional::spectral(SpectralWeights(q({"1/2", "1/2"}))).kind_name(),
            "spectral");
}

TEST(RiskFunctionalTest, ComonotoneFormClassification) {
  EXPECT_EQ(classify_comonotone(
                RiskFunctional::kusuoka(KusuokaMeasure::point_mass(3, 4))),
            ComonotoneForm::kComonotoneByForm);
  EXPECT_EQ(classify_comonotone(
                RiskFunctional::kusuoka(KusuokaMeasure::point_mass(4, 4))),
            ComonotoneForm::kNotComonotoneByForm);
  EXPECT_EQ(classify_comonotone(RiskFunctional::kusuoka_family(
                KusuokaFamily({KusuokaMeasure::point_mass(0, 4),
                               KusuokaMeasure::point_mass(2, 4)}))),
            ComonotoneForm::kNotComonotoneByForm);
  EXPECT_EQ(classify_comonotone(RiskFunctional::kusuoka_family(
                KusuokaFamily({KusuokaMeasure::point_mass(2, 4),
                               KusuokaMeasure::point_mass(2, 4)}))),
            ComonotoneForm::kComonotoneByForm);
  EXPECT_THROW(classify_comonotone(RiskFunctional::builtin_mean(4)),
               std::invalid_argument);
  EXPECT_FALSE(has_comonotone_form_classification(RiskFunctional::builtin_max(4)));
  EXPECT_EQ(to_string(ComonotoneForm::kNotComonotoneByForm),
            "NotComonotoneByForm");
}

TEST(RiskFunctionalTest, TopMassMatchesPenultimateLevel) {
  Rng rng(35);
  for (int t = 0; t < 300; ++t) {
    const std::size_t n = 1 + rng.below(10);
    const OutcomeVector x = rng.lattice_vector(n, -10, 10, 20);
    EXPECT_EQ(eval_kusuoka(KusuokaMeasure::point_mass(n, n), x),
              eval_kusuoka(KusuokaMeasure::point_mass(n - 1, n), x));
  }
}

}  // namespace
}  // namespace riskgrid

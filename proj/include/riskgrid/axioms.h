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

#ifndef RISKGRID_AXIOMS_H_
#define RISKGRID_AXIOMS_H_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "riskgrid/outcome.h"
#include "riskgrid/rational.h"
#include "riskgrid/risk_functional.h"

namespace riskgrid {

// Anything the auditor can probe. Built from a RiskFunctional in normal
// use; tests also plant deliberately broken evaluators. `fn` must be safe
// to call concurrently.
struct Evaluator {
  std::string name;
  std::size_t n = 0;
  std::function<Rational(const OutcomeVector&)> fn;
  std::optional<RiskFunctional> form;  // set when built from a functional
};

Evaluator make_evaluator(const RiskFunctional& rf);

// Sampling: outcomes are uniform on the lattice
// {lo + (hi - lo) k / lattice_steps}; mixing weights lambda on
// {k / lattice_steps}; scalings k on {j / 4 : j = 1..16}.
struct AuditConfig {
  std::size_t trials = 1000;
  std::uint64_t seed = 0;
  Rational lo = Rational(-10);
  Rational hi = Rational(10);
  std::size_t n = 4;
  std::uint64_t lattice_steps = 20;
  // Worker threads for trials. Reports do not depend on it.
  std::size_t threads = 1;

  // Throws std::invalid_argument for trials == 0, n == 0, lo >= hi, or
  // lattice_steps == 0.
  void validate() const;
};

// Axiom names used in reports.
inline constexpr std::string_view kMonotonicity = "monotonicity";
inline constexpr std::string_view kPositiveHomogeneity = "positive_homogeneity";
inline constexpr std::string_view kConvexity = "convexity";
inline constexpr std::string_view kTranslationInvariance =
    "translation_invariance";
inline constexpr std::string_view kPermutationInvariance =
    "permutation_invariance";
inline constexpr std::string_view kComonotoneAdditivity =
    "comonotone_additivity";
inline constexpr std::string_view kSsdPreservation = "ssd_preservation";

// Concrete violation. Inputs are stored exactly so replaying them through
// the same evaluator reproduces lhs and rhs bit for bit.
struct Counterexample {
  std::string axiom;
  std::size_t trial = 0;
  std::vector<std::pair<std::string, OutcomeVector>> vectors;
  std::vector<std::pair<std::string, Rational>> scalars;
  std::vector<std::size_t> permutation;  // permutation_invariance only
  Rational lhs;
  Rational rhs;
  std::string relation;  // "<=" or "==", the one that failed

  const OutcomeVector& vector(std::string_view name) const;
  const Rational& scalar(std::string_view name) const;
};

enum class AxiomStatus { kPass, kFail };

struct AxiomResult {
  std::string axiom;
  AxiomStatus status = AxiomStatus::kPass;
  std::size_t trials = 0;  // checks performed
  std::optional<Counterexample> counterexample;
  // comonotone_additivity only, when the functional has a Kusuoka form.
  std::optional<ComonotoneForm> by_form;
};

struct AuditReport {
  std::string functional;
  std::size_t n = 0;
  std::uint64_t seed = 0;
  std::vector<AxiomResult> results;

  bool all_pass() const;
  const AxiomResult* find(std::string_view axiom) const;
};

// Monotonicity, positive homogeneity, convexity, translation invariance.
AuditReport check_coherence(const Evaluator& rho, const AuditConfig& cfg);

// Random permutations, plus every permutation of a few vectors when n <= 6.
AuditReport check_permutation_invariance(const Evaluator& rho,
                                         const AuditConfig& cfg);

// Random comonotone pairs, plus an exhaustive sweep over comonotone pairs
// with values in {lo, (lo + hi) / 2, hi} when n <= 4.
AuditReport check_comonotone_additivity(const Evaluator& rho,
                                        const AuditConfig& cfg);

// Pairs X ⪯ Y from rejection sampling and from X = A Y - slack.
AuditReport check_ssd_preservation(const Evaluator& rho,
                                   const AuditConfig& cfg);

// All of the above in one report.
AuditReport audit(const Evaluator& rho, const AuditConfig& cfg);

// True iff the stored violation reproduces exactly through `rho`.
bool replay(const Counterexample& cex, const Evaluator& rho);

// X = f(Z), Y = g(Z) for a latent Z on {0..n-1} and nondecreasing f, g.
std::pair<OutcomeVector, OutcomeVector> comonotone_pair_from(
    const std::vector<std::size_t>& latent, const std::vector<Rational>& f,
    const std::vector<Rational>& g);

std::pair<OutcomeVector, OutcomeVector> gen_comonotone_pair(
    std::uint64_t seed, std::size_t n, const Rational& lo, const Rational& hi,
    std::uint64_t lattice_steps = 20);

// A pair with X ⪯ Y, drawn for trial `trial`.
std::pair<OutcomeVector, OutcomeVector> gen_dominated_pair(
    std::uint64_t seed, std::uint64_t trial, const AuditConfig& cfg);

}  // namespace riskgrid

#endif  // RISKGRID_AXIOMS_H_

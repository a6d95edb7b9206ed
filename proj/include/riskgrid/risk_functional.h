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

#ifndef RISKGRID_RISK_FUNCTIONAL_H_
#define RISKGRID_RISK_FUNCTIONAL_H_

#include <cstddef>
#include <string>
#include <string_view>
#include <variant>

#include "riskgrid/avar.h"
#include "riskgrid/kusuoka.h"
#include "riskgrid/outcome.h"

namespace riskgrid {

struct BuiltinAvar {
  Level alpha;
};
struct BuiltinMean {};
struct BuiltinMax {};

// Closed-world description of a risk statistic on the n-point space. Every
// kind is evaluable on any OutcomeVector of dimension n().
class RiskFunctional {
 public:
  using Payload = std::variant<SpectralWeights, KusuokaMeasure, KusuokaFamily,
                               NaturalRiskStatistic, BuiltinAvar, BuiltinMean,
                               BuiltinMax>;

  static RiskFunctional spectral(SpectralWeights w);
  static RiskFunctional kusuoka(KusuokaMeasure mu);
  static RiskFunctional kusuoka_family(KusuokaFamily family);
  static RiskFunctional natural(NaturalRiskStatistic nrs);
  static RiskFunctional builtin_avar(Level alpha, std::size_t n);
  static RiskFunctional builtin_mean(std::size_t n);
  static RiskFunctional builtin_max(std::size_t n);

  std::size_t n() const { return n_; }
  const Payload& payload() const { return payload_; }

  // "spectral", "kusuoka", "family", "nrs", "avar", "mean", "max".
  std::string_view kind_name() const;

  // Throws std::invalid_argument on a dimension mismatch.
  Rational operator()(const OutcomeVector& x) const;

 private:
  RiskFunctional(Payload payload, std::size_t n);

  Payload payload_;
  std::size_t n_;
};

enum class ComonotoneForm { kComonotoneByForm, kNotComonotoneByForm };

std::string_view to_string(ComonotoneForm form);

// Reads the representation as written: a single Kusuoka measure with
// mu_n == 0 is comonotone by form; anything with mu_n > 0 or more than one
// family member is not. Throws std::invalid_argument for other kinds.
//
// This is a statement about the form only. mu = delta_n evaluates to the
// same value as delta_{n-1} on every X and is behaviorally comonotone
// additive; the audit reports both verdicts side by side.
ComonotoneForm classify_comonotone(const RiskFunctional& rf);

bool has_comonotone_form_classification(const RiskFunctional& rf);

}  // namespace riskgrid

#endif  // RISKGRID_RISK_FUNCTIONAL_H_

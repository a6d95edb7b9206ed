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

#include "riskgrid/risk_functional.h"

#include <stdexcept>
#include <utility>

namespace riskgrid {
namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};

}  // namespace

RiskFunctional::RiskFunctional(Payload payload, std::size_t n)
    : payload_(std::move(payload)), n_(n) {
  if (n_ == 0) throw std::invalid_argument("risk functional needs n >= 1");
}

RiskFunctional RiskFunctional::spectral(SpectralWeights w) {
  const std::size_t n = w.size();
  return RiskFunctional(std::move(w), n);
}

RiskFunctional RiskFunctional::kusuoka(KusuokaMeasure mu) {
  const std::size_t n = mu.dimension();
  return RiskFunctional(std::move(mu), n);
}

RiskFunctional RiskFunctional::kusuoka_family(KusuokaFamily family) {
  const std::size_t n = family.dimension();
  return RiskFunctional(std::move(family), n);
}

RiskFunctional RiskFunctional::natural(NaturalRiskStatistic nrs) {
  const std::size_t n = nrs.dimension();
  return RiskFunctional(std::move(nrs), n);
}

RiskFunctional RiskFunctional::builtin_avar(Level alpha, std::size_t n) {
  return RiskFunctional(BuiltinAvar{std::move(alpha)}, n);
}

RiskFunctional RiskFunctional::builtin_mean(std::size_t n) {
  return RiskFunctional(BuiltinMean{}, n);
}

RiskFunctional RiskFunctional::builtin_max(std::size_t n) {
  return RiskFunctional(BuiltinMax{}, n);
}

std::string_view RiskFunctional::kind_name() const {
  return std::visit(
      Overloaded{
          [](const SpectralWeights&) { return std::string_view("spectral"); },
          [](const KusuokaMeasure&) { return std::string_view("kusuoka"); },
          [](const KusuokaFamily&) { return std::string_view("family"); },
          [](const NaturalRiskStatistic&) { return std::string_view("nrs"); },
          [](const BuiltinAvar&) { return std::string_view("avar"); },
          [](const BuiltinMean&) { return std::string_view("mean"); },
          [](const BuiltinMax&) { return std::string_view("max"); },
      },
      payload_);
}

Rational RiskFunctional::operator()(const OutcomeVector& x) const {
  require_same_dimension(n_, x.size(), "risk functional");
  return std::visit(
      Overloaded{
          [&](const SpectralWeights& w) { return eval_spectral(w, x); },
          [&](const KusuokaMeasure& mu) { return eval_kusuoka(mu, x); },
          [&](const KusuokaFamily& f) { return eval_family(f, x).value; },
          [&](const NaturalRiskStatistic& s) { return eval_nrs(s, x); },
          [&](const BuiltinAvar& b) { return avar(x, b.alpha); },
          [&](const BuiltinMean&) { return mean(x); },
          [&](const BuiltinMax&) { return max_outcome(x); },
      },
      payload_);
}

std::string_view to_string(ComonotoneForm form) {
  return form == ComonotoneForm::kComonotoneByForm ? "ComonotoneByForm"
                                                   : "NotComonotoneByForm";
}

bool has_comonotone_form_classification(const RiskFunctional& rf) {
  return std::holds_alternative<KusuokaMeasure>(rf.payload()) ||
         std::holds_alternative<KusuokaFamily>(rf.payload());
}

ComonotoneForm classify_comonotone(const RiskFunctional& rf) {
  auto by_measure = [](const KusuokaMeasure& mu) {
    return mu[mu.dimension()].is_zero() ? ComonotoneForm::kComonotoneByForm
                                        : ComonotoneForm::kNotComonotoneByForm;
  };
  if (const auto* mu = std::get_if<KusuokaMeasure>(&rf.payload())) {
    return by_measure(*mu);
  }
  if (const auto* family = std::get_if<KusuokaFamily>(&rf.payload())) {
    if (family->size() != 1) return ComonotoneForm::kNotComonotoneByForm;
    return by_measure(family->members().front());
  }
  throw std::invalid_argument(
      "classify_comonotone: only kusuoka and family functionals have a form "
      "classification, got " +
      std::string(rf.kind_name()));
}

}  // namespace riskgrid

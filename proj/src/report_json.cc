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

#include <string>

#include "json.hpp"
#include "riskgrid/cli.h"

namespace riskgrid::cli {
namespace {

using nlohmann::ordered_json;

ordered_json exact_list(const OutcomeVector& v) {
  ordered_json out = ordered_json::array();
  for (const Rational& x : v) out.push_back(x.to_string());
  return out;
}

ordered_json counterexample_json(const Counterexample& cex,
                                 const Format& format) {
  ordered_json inputs = ordered_json::object();
  // Inputs stay exact in every format so the witness replays bit for bit.
  for (const auto& [name, v] : cex.vectors) inputs[name] = exact_list(v);
  for (const auto& [name, s] : cex.scalars) inputs[name] = s.to_string();
  if (!cex.permutation.empty()) inputs["permutation"] = cex.permutation;

  ordered_json out;
  out["axiom"] = cex.axiom;
  out["trial"] = cex.trial;
  out["inputs"] = std::move(inputs);
  out["relation"] = cex.relation;
  out["lhs"] = format.render(cex.lhs);
  out["rhs"] = format.render(cex.rhs);
  return out;
}

}  // namespace

std::string Format::render(const Rational& value) const {
  return decimal ? value.to_decimal(digits) : value.to_string();
}

std::string render_report(const AuditReport& report, const Format& format) {
  ordered_json axioms = ordered_json::object();
  for (const AxiomResult& r : report.results) {
    ordered_json entry;
    const bool pass = r.status == AxiomStatus::kPass;
    entry["status"] = pass ? "pass" : "fail";
    entry["trials"] = r.trials;
    if (r.axiom == kComonotoneAdditivity) {
      entry["behavioral"] = pass ? "pass" : "fail";
      if (r.by_form) {
        entry["by_form"] = std::string(to_string(*r.by_form));
        const bool form_says_additive =
            *r.by_form == ComonotoneForm::kComonotoneByForm;
        entry["verdicts_agree"] = form_says_additive == pass;
      }
    }
    if (r.counterexample) {
      entry["counterexample"] = counterexample_json(*r.counterexample, format);
    }
    axioms[r.axiom] = std::move(entry);
  }

  ordered_json out;
  out["functional"] = report.functional;
  out["n"] = report.n;
  out["seed"] = report.seed;
  out["all_pass"] = report.all_pass();
  out["axioms"] = std::move(axioms);
  return out.dump();
}

}  // namespace riskgrid::cli

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

#ifndef RISKGRID_CLI_H_
#define RISKGRID_CLI_H_

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "riskgrid/axioms.h"
#include "riskgrid/kusuoka.h"
#include "riskgrid/outcome.h"
#include "riskgrid/rational.h"

namespace riskgrid::cli {

// Process exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitMalformedInput = 2;
inline constexpr int kExitAuditViolation = 3;
inline constexpr int kExitPrecondition = 4;

struct Format {
  bool decimal = false;
  int digits = 6;

  // Exact "p/q", or half-even decimal with `digits` places.
  std::string render(const Rational& value) const;
};

// Parsed input file. Members are optional; all present lists must agree on
// a single n (matrix: n x n, kusuoka: n + 1).
struct InputDocument {
  std::optional<OutcomeVector> outcomes;
  std::optional<OutcomeVector> outcomes_y;
  std::optional<SpectralWeights> spectral;
  std::optional<KusuokaMeasure> kusuoka;
  std::optional<KusuokaFamily> family;
  std::optional<NaturalRiskStatistic> spectral_family;
  std::optional<std::vector<std::vector<Rational>>> matrix;

  std::optional<std::size_t> dimension() const;
};

// Throws std::invalid_argument on malformed JSON, bad numbers, invariant
// violations, or inconsistent dimensions.
InputDocument parse_input_document(std::string_view json_text);

// One value per non-blank line.
OutcomeVector parse_outcome_csv(std::string_view text);

// Accepts an exact rational, or "grid:i" meaning i/n.
Rational parse_level(std::string_view text, std::optional<std::size_t> n);

// Deterministic JSON for an audit report (compact, one line).
std::string render_report(const AuditReport& report, const Format& format);

// Runs one command line. args[0] is the program name. Writes the JSON
// result to `out` and diagnostics to `err`; returns the exit code.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace riskgrid::cli

#endif  // RISKGRID_CLI_H_

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

#include <stdexcept>
#include <string>
#include <utility>

#include "json.hpp"
#include "riskgrid/cli.h"

namespace riskgrid::cli {
namespace {

using nlohmann::json;

Rational number_from(const json& value, const std::string& where) {
  if (value.is_string()) return Rational::parse(value.get<std::string>());
  if (value.is_number_integer()) return Rational::parse(value.dump());
  throw std::invalid_argument(where +
                              ": numbers must be strings (\"p/q\", integer "
                              "or decimal) or JSON integers");
}

std::vector<Rational> numbers_from(const json& value,
                                   const std::string& where) {
  if (!value.is_array()) {
    throw std::invalid_argument(where + ": expected a list");
  }
  std::vector<Rational> out;
  out.reserve(value.size());
  for (std::size_t i = 0; i < value.size(); ++i) {
    out.push_back(number_from(value[i], where + "[" + std::to_string(i) + "]"));
  }
  return out;
}

void agree(std::optional<std::size_t>& n, std::size_t m,
           const std::string& member) {
  if (n && *n != m) {
    throw std::invalid_argument("\"" + member + "\" has dimension " +
                                std::to_string(m) + ", expected " +
                                std::to_string(*n));
  }
  n = m;
}

}  // namespace

std::optional<std::size_t> InputDocument::dimension() const {
  if (outcomes) return outcomes->size();
  if (outcomes_y) return outcomes_y->size();
  if (spectral) return spectral->size();
  if (kusuoka) return kusuoka->dimension();
  if (family) return family->dimension();
  if (spectral_family) return spectral_family->dimension();
  if (matrix) return matrix->size();
  return std::nullopt;
}

InputDocument parse_input_document(std::string_view json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) {
    throw std::invalid_argument("input document must be a JSON object");
  }

  InputDocument in;
  std::optional<std::size_t> n;
  if (doc.contains("outcomes")) {
    in.outcomes = OutcomeVector(numbers_from(doc["outcomes"], "outcomes"));
    agree(n, in.outcomes->size(), "outcomes");
  }
  if (doc.contains("outcomes_y")) {
    in.outcomes_y =
        OutcomeVector(numbers_from(doc["outcomes_y"], "outcomes_y"));
    agree(n, in.outcomes_y->size(), "outcomes_y");
  }
  if (doc.contains("spectral")) {
    in.spectral = SpectralWeights(numbers_from(doc["spectral"], "spectral"));
    agree(n, in.spectral->size(), "spectral");
  }
  if (doc.contains("kusuoka")) {
    in.kusuoka = KusuokaMeasure(numbers_from(doc["kusuoka"], "kusuoka"));
    agree(n, in.kusuoka->dimension(), "kusuoka");
  }
  if (doc.contains("family")) {
    const json& list = doc["family"];
    if (!list.is_array()) throw std::invalid_argument("family: expected a list");
    std::vector<KusuokaMeasure> members;
    for (std::size_t m = 0; m < list.size(); ++m) {
      members.emplace_back(
          numbers_from(list[m], "family[" + std::to_string(m) + "]"));
    }
    in.family = KusuokaFamily(std::move(members));
    agree(n, in.family->dimension(), "family");
  }
  if (doc.contains("spectral_family")) {
    const json& list = doc["spectral_family"];
    if (!list.is_array()) {
      throw std::invalid_argument("spectral_family: expected a list");
    }
    std::vector<SpectralWeights> members;
    for (std::size_t m = 0; m < list.size(); ++m) {
      members.emplace_back(
          numbers_from(list[m], "spectral_family[" + std::to_string(m) + "]"));
    }
    in.spectral_family = NaturalRiskStatistic(std::move(members));
    agree(n, in.spectral_family->dimension(), "spectral_family");
  }
  if (doc.contains("matrix")) {
    const json& rows = doc["matrix"];
    if (!rows.is_array()) throw std::invalid_argument("matrix: expected rows");
    std::vector<std::vector<Rational>> m;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      m.push_back(numbers_from(rows[r], "matrix[" + std::to_string(r) + "]"));
      if (m.back().size() != rows.size()) {
        throw std::invalid_argument("matrix must be square");
      }
    }
    agree(n, m.size(), "matrix");
    in.matrix = std::move(m);
  }
  return in;
}

OutcomeVector parse_outcome_csv(std::string_view text) {
  std::vector<Rational> values;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ' ||
                             line.back() == '\t' || line.back() == ',')) {
      line.remove_suffix(1);
    }
    while (!line.empty() && (line.front() == ' ' || line.front() == '\t')) {
      line.remove_prefix(1);
    }
    if (!line.empty()) values.push_back(Rational::parse(line));
    start = end + 1;
  }
  return OutcomeVector(std::move(values));
}

Rational parse_level(std::string_view text, std::optional<std::size_t> n) {
  constexpr std::string_view kGrid = "grid:";
  if (text.starts_with(kGrid)) {
    if (!n) throw std::invalid_argument("grid levels need an outcome vector");
    const Rational i = Rational::parse(text.substr(kGrid.size()));
    if (!i.is_integer() || i.sign() < 0) {
      throw std::invalid_argument("grid index must be a nonnegative integer");
    }
    return i / Rational(*n);
  }
  return Rational::parse(text);
}

}  // namespace riskgrid::cli

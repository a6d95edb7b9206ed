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

#include "riskgrid/cli.h"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "json.hpp"
#include "riskgrid/avar.h"
#include "riskgrid/dominance.h"
#include "riskgrid/risk_functional.h"

namespace riskgrid::cli {
namespace {

using nlohmann::ordered_json;

// Thrown for well-formed input that fails an operation's precondition.
struct PreconditionFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_text(const std::string& path) {
  if (path == "-") {
    std::ostringstream buffer;
    buffer << std::cin.rdbuf();
    return buffer.str();
  }
  std::ifstream file(path, std::ios::binary);
  if (!file) throw std::invalid_argument("cannot read " + path);
  std::ostringstream buffer;
  buffer << file.rdbuf();
  return buffer.str();
}

struct Options {
  std::string format = "exact";
  int digits = 6;
  std::string in_path;
  std::string csv_path;

  std::string alpha;
  std::string route = "closed";
  std::string p;
  std::string measure;
  std::string direction;
  std::string method = "all";
  bool explain = false;

  std::size_t trials = 1000;
  std::optional<std::uint64_t> seed;
  std::string lo = "-10";
  std::string hi = "10";
  std::optional<std::size_t> n;
  std::uint64_t lattice = 20;
  std::size_t threads = 1;
  std::string builtin;
  std::vector<std::string> checks;
};

class Command {
 public:
  explicit Command(const Options& opt)
      : opt_(opt), format_{opt.format == "decimal", opt.digits} {}

  ordered_json list(std::span<const Rational> values) const {
    ordered_json out = ordered_json::array();
    for (const Rational& v : values) out.push_back(format_.render(v));
    return out;
  }
  std::string num(const Rational& v) const { return format_.render(v); }
  const Format& format() const { return format_; }

  const InputDocument& doc() {
    if (!doc_) {
      if (opt_.in_path.empty()) {
        doc_ = InputDocument{};
      } else {
        doc_ = parse_input_document(read_text(opt_.in_path));
      }
      if (!opt_.csv_path.empty()) {
        if (doc_->outcomes) {
          throw std::invalid_argument("outcomes given twice (--in and --csv)");
        }
        doc_->outcomes = parse_outcome_csv(read_text(opt_.csv_path));
      }
    }
    return *doc_;
  }

  const OutcomeVector& outcomes() {
    if (!doc().outcomes) {
      throw std::invalid_argument("input needs \"outcomes\" (or --csv)");
    }
    return *doc_->outcomes;
  }

  const OutcomeVector& outcomes_y() {
    if (!doc().outcomes_y) {
      throw std::invalid_argument("input needs \"outcomes_y\"");
    }
    return *doc_->outcomes_y;
  }

 private:
  const Options& opt_;
  Format format_;
  std::optional<InputDocument> doc_;
};

ordered_json do_avar(Command& cmd, const Options& opt) {
  const OutcomeVector& x = cmd.outcomes();
  const Level alpha(parse_level(opt.alpha, x.size()));
  ordered_json out;
  if (opt.route == "closed") {
    out["value"] = cmd.num(avar(x, alpha));
  } else if (opt.route == "ru") {
    const RuResult r = avar_ru(x, alpha);
    out["value"] = cmd.num(r.value);
    ordered_json interval;
    interval["lower"] = r.minimizers.lower
                            ? ordered_json(cmd.num(*r.minimizers.lower))
                            : ordered_json(nullptr);
    interval["upper"] = r.minimizers.upper
                            ? ordered_json(cmd.num(*r.minimizers.upper))
                            : ordered_json(nullptr);
    out["minimizers"] = std::move(interval);
  } else {
    const DualResult r = avar_dual(x, alpha);
    out["value"] = cmd.num(r.value);
    out["density"] = cmd.list(r.density.weights);
  }
  return out;
}

ordered_json do_var(Command& cmd, const Options& opt) {
  const OutcomeVector& x = cmd.outcomes();
  ordered_json out;
  out["value"] = cmd.num(value_at_risk(x, Level(parse_level(opt.p, x.size()))));
  return out;
}

ordered_json do_grid(Command& cmd) {
  ordered_json out;
  out["grid"] = cmd.list(avar_grid(cmd.outcomes()));
  return out;
}

ordered_json do_eval(Command& cmd, const Options& opt) {
  const InputDocument& in = cmd.doc();
  std::string measure = opt.measure;
  if (measure.empty()) {
    if (in.kusuoka) {
      measure = "kusuoka";
    } else if (in.spectral) {
      measure = "spectral";
    } else if (in.family) {
      measure = "family";
    } else if (in.spectral_family) {
      measure = "nrs";
    } else {
      throw std::invalid_argument(
          "eval needs one of \"spectral\", \"kusuoka\", \"family\", "
          "\"spectral_family\"");
    }
  }
  const OutcomeVector& x = cmd.outcomes();
  auto missing = [&](const char* member) {
    return std::invalid_argument("eval --measure " + measure + " needs \"" +
                                 member + "\"");
  };
  ordered_json out;
  if (measure == "spectral") {
    if (!in.spectral) throw missing("spectral");
    out["value"] = cmd.num(eval_spectral(*in.spectral, x));
  } else if (measure == "kusuoka") {
    if (!in.kusuoka) throw missing("kusuoka");
    out["value"] = cmd.num(eval_kusuoka(*in.kusuoka, x));
  } else if (measure == "family") {
    if (!in.family) throw missing("family");
    const FamilyValue v = eval_family(*in.family, x);
    out["value"] = cmd.num(v.value);
    out["argmax"] = v.argmax;
  } else {
    if (!in.spectral_family) throw missing("spectral_family");
    out["value"] = cmd.num(eval_nrs(*in.spectral_family, x));
  }
  return out;
}

ordered_json do_convert(Command& cmd, const Options& opt) {
  const InputDocument& in = cmd.doc();
  ordered_json out;
  if (opt.direction == "spectral-to-kusuoka") {
    if (!in.spectral) throw std::invalid_argument("input needs \"spectral\"");
    out["kusuoka"] = cmd.list(spectral_to_kusuoka(*in.spectral).values());
  } else {
    if (!in.kusuoka) throw std::invalid_argument("input needs \"kusuoka\"");
    out["spectral"] = cmd.list(kusuoka_to_spectral(*in.kusuoka).values());
  }
  return out;
}

DominanceMethod method_from(const std::string& name) {
  if (name == "integrated-cdf") return DominanceMethod::kIntegratedCdf;
  if (name == "avar-grid") return DominanceMethod::kAvarGrid;
  if (name == "weak-majorization") return DominanceMethod::kWeakMajorization;
  return DominanceMethod::kAll;
}

ordered_json do_ssd(Command& cmd, const Options& opt) {
  const DominanceMethod method = method_from(opt.method);
  const DominanceVerdict v =
      ssd_compare(cmd.outcomes(), cmd.outcomes_y(), method);
  ordered_json out;
  out["relation"] = std::string(to_string(v.relation));
  if (method == DominanceMethod::kAll) {
    out["methods_agree"] = true;
  } else {
    out["method"] = opt.method;
  }
  if (opt.explain) {
    ordered_json evidence = ordered_json::array();
    for (const MethodEvidence& e : v.evidence) {
      ordered_json item;
      item["method"] = std::string(to_string(e.method));
      item["x_dominated_by_y"] = e.left_le_right;
      item["y_dominated_by_x"] = e.right_le_left;
      auto witness = [&](const std::optional<DominanceWitness>& w) {
        if (!w) return ordered_json(nullptr);
        ordered_json j;
        j["index"] = w->index;
        j["at"] = cmd.num(w->location);
        j["lhs"] = cmd.num(w->lhs);
        j["rhs"] = cmd.num(w->rhs);
        return j;
      };
      item["x_failure"] = witness(e.left_failure);
      item["y_failure"] = witness(e.right_failure);
      evidence.push_back(std::move(item));
    }
    out["evidence"] = std::move(evidence);
  }
  return out;
}

ordered_json do_comonotone(Command& cmd) {
  const ComonotoneCheck c = is_comonotone(cmd.outcomes(), cmd.outcomes_y());
  ordered_json out;
  out["comonotone"] = c.comonotone;
  if (c.witness) {
    out["witness"] = ordered_json::array({c.witness->first, c.witness->second});
  }
  return out;
}

ordered_json matrix_json(const Command& cmd,
                         const std::vector<std::vector<Rational>>& rows) {
  ordered_json out = ordered_json::array();
  for (const auto& row : rows) out.push_back(cmd.list(row));
  return out;
}

ordered_json do_birkhoff(Command& cmd) {
  if (!cmd.doc().matrix) throw std::invalid_argument("input needs \"matrix\"");
  const DoublyStochasticMatrix a(*cmd.doc().matrix);
  const BirkhoffDecomposition d = birkhoff_decompose(a);
  ordered_json terms = ordered_json::array();
  for (const BirkhoffTerm& t : d.terms) {
    ordered_json term;
    term["weight"] = cmd.num(t.weight);
    term["permutation"] = t.permutation;
    terms.push_back(std::move(term));
  }
  ordered_json out;
  out["terms"] = std::move(terms);
  return out;
}

ordered_json do_hlp(Command& cmd) {
  const OutcomeVector& x = cmd.outcomes();
  const OutcomeVector& y = cmd.outcomes_y();
  if (!ssd_dominated(x, y)) {
    throw PreconditionFailure("hlp: outcomes is not dominated by outcomes_y");
  }
  ordered_json out;
  out["matrix"] = matrix_json(cmd, hlp_transfer_matrix(x, y).rows());
  return out;
}

RiskFunctional functional_for_audit(Command& cmd, const Options& opt) {
  const InputDocument& in = cmd.doc();
  if (!opt.builtin.empty()) {
    std::optional<std::size_t> n = opt.n;
    if (!n) n = in.dimension();
    if (!n) throw std::invalid_argument("--builtin needs --n");
    if (opt.builtin == "mean") return RiskFunctional::builtin_mean(*n);
    if (opt.builtin == "max") return RiskFunctional::builtin_max(*n);
    constexpr std::string_view kAvar = "avar:";
    if (opt.builtin.starts_with(kAvar)) {
      const std::string level = opt.builtin.substr(kAvar.size());
      return RiskFunctional::builtin_avar(Level(parse_level(level, *n)), *n);
    }
    throw std::invalid_argument("unknown builtin \"" + opt.builtin +
                                "\" (use mean, max, avar:<level>)");
  }
  if (in.kusuoka) return RiskFunctional::kusuoka(*in.kusuoka);
  if (in.spectral) return RiskFunctional::spectral(*in.spectral);
  if (in.family) return RiskFunctional::kusuoka_family(*in.family);
  if (in.spectral_family) return RiskFunctional::natural(*in.spectral_family);
  throw std::invalid_argument("audit needs a measure in --in or --builtin");
}

std::uint64_t default_seed() {
  const char* env = std::getenv("RISKGRID_SEED");
  if (env == nullptr || *env == '\0') return 0;
  const Rational parsed = Rational::parse(env);
  if (!parsed.is_integer() || parsed.sign() < 0) {
    throw std::invalid_argument("RISKGRID_SEED must be a nonnegative integer");
  }
  return std::stoull(parsed.to_string());
}

int do_audit(Command& cmd, const Options& opt, std::ostream& out) {
  const RiskFunctional rf = functional_for_audit(cmd, opt);
  if (opt.n && *opt.n != rf.n()) {
    throw std::invalid_argument("--n disagrees with the measure's dimension");
  }
  AuditConfig cfg;
  cfg.trials = opt.trials;
  cfg.seed = opt.seed ? *opt.seed : default_seed();
  cfg.lo = Rational::parse(opt.lo);
  cfg.hi = Rational::parse(opt.hi);
  cfg.n = rf.n();
  cfg.lattice_steps = opt.lattice;
  cfg.threads = opt.threads;
  cfg.validate();

  const Evaluator rho = make_evaluator(rf);
  AuditReport report;
  report.functional = rho.name;
  report.n = cfg.n;
  report.seed = cfg.seed;
  const std::vector<std::string> checks =
      opt.checks.empty() ? std::vector<std::string>{"coherence", "permutation",
                                                    "comonotone", "ssd"}
                         : opt.checks;
  for (const std::string& check : checks) {
    AuditReport part;
    if (check == "coherence") {
      part = check_coherence(rho, cfg);
    } else if (check == "permutation") {
      part = check_permutation_invariance(rho, cfg);
    } else if (check == "comonotone") {
      part = check_comonotone_additivity(rho, cfg);
    } else {
      part = check_ssd_preservation(rho, cfg);
    }
    for (AxiomResult& r : part.results) report.results.push_back(std::move(r));
  }
  out << render_report(report, cmd.format()) << "\n";
  return report.all_pass() ? kExitOk : kExitAuditViolation;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  Options opt;
  CLI::App app{"Exact risk measures on the uniform n-point space"};
  app.name(args.empty() ? "riskgrid" : args.front());
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--format", opt.format, "exact (p/q) or decimal")
      ->check(CLI::IsMember({"exact", "decimal"}));
  app.add_option("--digits", opt.digits, "decimal places for --format decimal")
      ->check(CLI::Range(0, 1000));
  app.add_option("--in", opt.in_path, "input JSON document ('-' for stdin)");
  app.add_option("--csv", opt.csv_path, "outcomes, one value per line");

  auto* avar_cmd = app.add_subcommand("avar", "Average Value-at-Risk");
  avar_cmd->add_option("--alpha", opt.alpha, "level: p/q, decimal or grid:i")
      ->required();
  avar_cmd->add_option("--route", opt.route, "closed | ru | dual")
      ->check(CLI::IsMember({"closed", "ru", "dual"}));
  auto* var_cmd = app.add_subcommand("var", "Value-at-Risk (lower quantile)");
  var_cmd->add_option("--p", opt.p, "level: p/q, decimal or grid:i")
      ->required();
  auto* grid_cmd = app.add_subcommand("grid", "AVaR at 0, 1/n, ..., 1");
  auto* eval_cmd = app.add_subcommand("eval", "Evaluate a risk measure");
  eval_cmd->add_option("--measure", opt.measure)
      ->check(CLI::IsMember({"spectral", "kusuoka", "family", "nrs"}));
  auto* convert_cmd = app.add_subcommand("convert", "Spectral <-> Kusuoka");
  convert_cmd->add_option("--direction", opt.direction)
      ->required()
      ->check(CLI::IsMember({"spectral-to-kusuoka", "kusuoka-to-spectral"}));
  auto* ssd_cmd = app.add_subcommand("ssd", "Second-order dominance");
  ssd_cmd->add_option("--method", opt.method)
      ->check(CLI::IsMember(
          {"all", "integrated-cdf", "avar-grid", "weak-majorization"}));
  ssd_cmd->add_flag("--explain", opt.explain, "include per-method evidence");
  auto* comonotone_cmd = app.add_subcommand("comonotone", "Comonotonicity");
  auto* birkhoff_cmd = app.add_subcommand("birkhoff", "Birkhoff decomposition");
  auto* hlp_cmd = app.add_subcommand("hlp", "Doubly stochastic A, X <= AY");
  auto* audit_cmd = app.add_subcommand("audit", "Randomized axiom audit");
  audit_cmd->add_option("--trials", opt.trials)->check(CLI::PositiveNumber);
  audit_cmd->add_option("--seed", opt.seed,
                        "default: $RISKGRID_SEED, else 0");
  audit_cmd->add_option("--lo", opt.lo);
  audit_cmd->add_option("--hi", opt.hi);
  audit_cmd->add_option("--n", opt.n)->check(CLI::PositiveNumber);
  audit_cmd->add_option("--lattice", opt.lattice)->check(CLI::PositiveNumber);
  audit_cmd->add_option("--threads", opt.threads)->check(CLI::PositiveNumber);
  audit_cmd->add_option("--builtin", opt.builtin, "mean | max | avar:<level>");
  audit_cmd->add_option("--checks", opt.checks)
      ->delimiter(',')
      ->check(CLI::IsMember({"coherence", "permutation", "comonotone", "ssd"}));

  std::vector<const char*> argv;
  for (const std::string& a : args) argv.push_back(a.c_str());
  if (argv.empty()) argv.push_back("riskgrid");
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return kExitOk;
    }
    err << "error: " << e.what() << "\n";
    return kExitMalformedInput;
  }

  Command cmd(opt);
  try {
    ordered_json result;
    if (avar_cmd->parsed()) {
      result = do_avar(cmd, opt);
    } else if (var_cmd->parsed()) {
      result = do_var(cmd, opt);
    } else if (grid_cmd->parsed()) {
      result = do_grid(cmd);
    } else if (eval_cmd->parsed()) {
      result = do_eval(cmd, opt);
    } else if (convert_cmd->parsed()) {
      result = do_convert(cmd, opt);
    } else if (ssd_cmd->parsed()) {
      result = do_ssd(cmd, opt);
    } else if (comonotone_cmd->parsed()) {
      result = do_comonotone(cmd);
    } else if (birkhoff_cmd->parsed()) {
      result = do_birkhoff(cmd);
    } else if (hlp_cmd->parsed()) {
      result = do_hlp(cmd);
    } else if (audit_cmd->parsed()) {
      return do_audit(cmd, opt, out);
    }
    out << result.dump() << "\n";
    return kExitOk;
  } catch (const PreconditionFailure& e) {
    err << "error: " << e.what() << "\n";
    return kExitPrecondition;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << "\n";
    return kExitPrecondition;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitMalformedInput;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << "\n";
    return kExitMalformedInput;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace riskgrid::cli

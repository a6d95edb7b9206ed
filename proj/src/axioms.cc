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

#include "riskgrid/axioms.h"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <thread>

#include "riskgrid/dominance.h"
#include "riskgrid/sampling.h"

namespace riskgrid {
namespace {

// Stream ids keep each axiom's draws independent of the others.
enum Stream : std::uint64_t {
  kStreamMonotonicity = 1,
  kStreamHomogeneity,
  kStreamConvexity,
  kStreamTranslation,
  kStreamPermutation,
  kStreamPermutationSweep,
  kStreamComonotone,
  kStreamSsd,
};

using TrialFn = std::function<std::optional<Counterexample>(std::size_t)>;

// Runs trials [begin, end) and returns the failure with the lowest trial
// index, whatever the thread count.
std::optional<Counterexample> first_failure(std::size_t begin,
                                            std::size_t end,
                                            std::size_t threads,
                                            const TrialFn& trial) {
  if (begin >= end) return std::nullopt;
  const std::size_t count = end - begin;
  threads = std::clamp<std::size_t>(threads, 1, count);
  if (threads == 1) {
    for (std::size_t t = begin; t < end; ++t) {
      if (auto cex = trial(t)) return cex;
    }
    return std::nullopt;
  }

  std::atomic<std::size_t> best_index{end};
  std::vector<std::optional<Counterexample>> found(threads);
  std::exception_ptr error;
  std::mutex error_mutex;
  {
    std::vector<std::jthread> workers;
    const std::size_t chunk = (count + threads - 1) / threads;
    for (std::size_t w = 0; w < threads; ++w) {
      const std::size_t lo = begin + w * chunk;
      const std::size_t hi = std::min(end, lo + chunk);
      workers.emplace_back([&, w, lo, hi] {
        try {
          for (std::size_t t = lo; t < hi && t < best_index.load(); ++t) {
            if (auto cex = trial(t)) {
              found[w] = std::move(cex);
              std::size_t current = best_index.load();
              while (t < current &&
                     !best_index.compare_exchange_weak(current, t)) {
              }
              return;
            }
          }
        } catch (...) {
          std::lock_guard<std::mutex> lock(error_mutex);
          if (!error) error = std::current_exception();
        }
      });
    }
  }
  if (error) std::rethrow_exception(error);
  for (auto& cex : found) {
    if (cex) return std::move(cex);  // chunks are in trial order
  }
  return std::nullopt;
}

AxiomResult run_axiom(std::string_view axiom, std::size_t trials,
                      std::size_t threads, const TrialFn& trial) {
  AxiomResult result;
  result.axiom = std::string(axiom);
  result.trials = trials;
  if (auto cex = first_failure(0, trials, threads, trial)) {
    result.status = AxiomStatus::kFail;
    result.trials = cex->trial + 1;
    result.counterexample = std::move(cex);
  }
  return result;
}

// Continues `result` with extra deterministic checks numbered from
// result.trials on, stopping at the first failure.
void extend_axiom(AxiomResult& result, std::size_t extra, std::size_t threads,
                  const TrialFn& check) {
  if (result.status == AxiomStatus::kFail || extra == 0) return;
  const std::size_t base = result.trials;
  TrialFn shifted = [&](std::size_t t) {
    auto cex = check(t - base);
    if (cex) cex->trial = t;
    return cex;
  };
  if (auto cex = first_failure(base, base + extra, threads, shifted)) {
    result.status = AxiomStatus::kFail;
    result.trials = cex->trial + 1;
    result.counterexample = std::move(cex);
  } else {
    result.trials = base + extra;
  }
}

AuditReport empty_report(const Evaluator& rho, const AuditConfig& cfg) {
  cfg.validate();
  require_same_dimension(rho.n, cfg.n, "audit");
  AuditReport report;
  report.functional = rho.name;
  report.n = cfg.n;
  report.seed = cfg.seed;
  return report;
}

Counterexample make_cex(std::string_view axiom, std::size_t trial,
                        Rational lhs, Rational rhs,
                        std::string_view relation) {
  Counterexample cex;
  cex.axiom = std::string(axiom);
  cex.trial = trial;
  cex.lhs = std::move(lhs);
  cex.rhs = std::move(rhs);
  cex.relation = std::string(relation);
  return cex;
}

// The two sides of each axiom, recomputed from stored inputs. Returns
// {lhs, rhs}; the axiom holds iff lhs <= rhs (or ==, per relation).
std::pair<Rational, Rational> sides(const Counterexample& cex,
                                    const Evaluator& rho) {
  const auto& f = rho.fn;
  if (cex.axiom == kMonotonicity) {
    if (!pointwise_le(cex.vector("Y1"), cex.vector("Y2"))) {
      throw std::invalid_argument("monotonicity witness is not ordered");
    }
    return {f(cex.vector("Y1")), f(cex.vector("Y2"))};
  }
  if (cex.axiom == kPositiveHomogeneity) {
    const Rational& k = cex.scalar("k");
    return {f(k * cex.vector("Y")), k * f(cex.vector("Y"))};
  }
  if (cex.axiom == kConvexity) {
    const Rational& lambda = cex.scalar("lambda");
    const OutcomeVector& y0 = cex.vector("Y0");
    const OutcomeVector& y1 = cex.vector("Y1");
    const Rational keep = Rational(1) - lambda;
    return {f(keep * y0 + lambda * y1), keep * f(y0) + lambda * f(y1)};
  }
  if (cex.axiom == kTranslationInvariance) {
    const Rational& c = cex.scalar("c");
    return {f(cex.vector("Y") + c), f(cex.vector("Y")) + c};
  }
  if (cex.axiom == kPermutationInvariance) {
    const OutcomeVector& x = cex.vector("X");
    return {f(permuted(x, cex.permutation)), f(x)};
  }
  if (cex.axiom == kComonotoneAdditivity) {
    const OutcomeVector& x = cex.vector("X");
    const OutcomeVector& y = cex.vector("Y");
    if (!is_comonotone(x, y).comonotone) {
      throw std::invalid_argument("comonotone witness is not comonotone");
    }
    return {f(x + y), f(x) + f(y)};
  }
  if (cex.axiom == kSsdPreservation) {
    const OutcomeVector& x = cex.vector("X");
    const OutcomeVector& y = cex.vector("Y");
    if (!ssd_dominated(x, y)) {
      throw std::invalid_argument("ssd witness is not an ordered pair");
    }
    return {f(x), f(y)};
  }
  throw std::invalid_argument("unknown axiom " + cex.axiom);
}

bool violated(const std::pair<Rational, Rational>& s,
              std::string_view relation) {
  return relation == "==" ? s.first != s.second : s.second < s.first;
}

}  // namespace

Evaluator make_evaluator(const RiskFunctional& rf) {
  Evaluator e;
  e.name = std::string(rf.kind_name());
  e.n = rf.n();
  e.fn = [rf](const OutcomeVector& x) { return rf(x); };
  e.form = rf;
  return e;
}

void AuditConfig::validate() const {
  if (trials == 0) throw std::invalid_argument("audit: trials must be >= 1");
  if (n == 0) throw std::invalid_argument("audit: n must be >= 1");
  if (!(lo < hi)) throw std::invalid_argument("audit: value range is empty");
  if (lattice_steps == 0) {
    throw std::invalid_argument("audit: lattice_steps must be >= 1");
  }
}

const OutcomeVector& Counterexample::vector(std::string_view name) const {
  for (const auto& [key, v] : vectors) {
    if (key == name) return v;
  }
  throw std::invalid_argument("counterexample has no vector " +
                              std::string(name));
}

const Rational& Counterexample::scalar(std::string_view name) const {
  for (const auto& [key, v] : scalars) {
    if (key == name) return v;
  }
  throw std::invalid_argument("counterexample has no scalar " +
                              std::string(name));
}

bool AuditReport::all_pass() const {
  return std::all_of(results.begin(), results.end(), [](const AxiomResult& r) {
    return r.status == AxiomStatus::kPass;
  });
}

const AxiomResult* AuditReport::find(std::string_view axiom) const {
  for (const AxiomResult& r : results) {
    if (r.axiom == axiom) return &r;
  }
  return nullptr;
}

AuditReport check_coherence(const Evaluator& rho, const AuditConfig& cfg) {
  AuditReport report = empty_report(rho, cfg);
  const auto& f = rho.fn;
  const std::size_t n = cfg.n;
  const Rational spread = cfg.hi - cfg.lo;

  report.results.push_back(run_axiom(
      kMonotonicity, cfg.trials, cfg.threads, [&](std::size_t t) {
        Rng rng = Rng::derive(cfg.seed, kStreamMonotonicity, t);
        OutcomeVector y1 = rng.lattice_vector(n, cfg.lo, cfg.hi,
                                              cfg.lattice_steps);
        OutcomeVector bump =
            rng.lattice_vector(n, Rational(0), spread, cfg.lattice_steps);
        OutcomeVector y2 = y1 + bump;
        Rational a = f(y1), b = f(y2);
        std::optional<Counterexample> cex;
        if (b < a) {
          cex = make_cex(kMonotonicity, t, std::move(a), std::move(b), "<=");
          cex->vectors = {{"Y1", std::move(y1)}, {"Y2", std::move(y2)}};
        }
        return cex;
      }));

  report.results.push_back(run_axiom(
      kPositiveHomogeneity, cfg.trials, cfg.threads, [&](std::size_t t) {
        Rng rng = Rng::derive(cfg.seed, kStreamHomogeneity, t);
        OutcomeVector y = rng.lattice_vector(n, cfg.lo, cfg.hi,
                                             cfg.lattice_steps);
        const Rational k = Rational(1 + rng.below(16)) / Rational(4);
        Rational a = f(k * y), b = k * f(y);
        std::optional<Counterexample> cex;
        if (a != b) {
          cex = make_cex(kPositiveHomogeneity, t, std::move(a), std::move(b),
                         "==");
          cex->vectors = {{"Y", std::move(y)}};
          cex->scalars = {{"k", k}};
        }
        return cex;
      }));

  report.results.push_back(run_axiom(
      kConvexity, cfg.trials, cfg.threads, [&](std::size_t t) {
        Rng rng = Rng::derive(cfg.seed, kStreamConvexity, t);
        OutcomeVector y0 = rng.lattice_vector(n, cfg.lo, cfg.hi,
                                              cfg.lattice_steps);
        OutcomeVector y1 = rng.lattice_vector(n, cfg.lo, cfg.hi,
                                              cfg.lattice_steps);
        const Rational lambda =
            rng.lattice(Rational(0), Rational(1), cfg.lattice_steps);
        const Rational keep = Rational(1) - lambda;
        Rational a = f(keep * y0 + lambda * y1);
        Rational b = keep * f(y0) + lambda * f(y1);
        std::optional<Counterexample> cex;
        if (b < a) {
          cex = make_cex(kConvexity, t, std::move(a), std::move(b), "<=");
          cex->vectors = {{"Y0", std::move(y0)}, {"Y1", std::move(y1)}};
          cex->scalars = {{"lambda", lambda}};
        }
        return cex;
      }));

  report.results.push_back(run_axiom(
      kTranslationInvariance, cfg.trials, cfg.threads, [&](std::size_t t) {
        Rng rng = Rng::derive(cfg.seed, kStreamTranslation, t);
        OutcomeVector y = rng.lattice_vector(n, cfg.lo, cfg.hi,
                                             cfg.lattice_steps);
        const Rational c = rng.lattice(cfg.lo, cfg.hi, cfg.lattice_steps);
        Rational a = f(y + c), b = f(y) + c;
        std::optional<Counterexample> cex;
        if (a != b) {
          cex = make_cex(kTranslationInvariance, t, std::move(a), std::move(b),
                         "==");
          cex->vectors = {{"Y", std::move(y)}};
          cex->scalars = {{"c", c}};
        }
        return cex;
      }));
  return report;
}

AuditReport check_permutation_invariance(const Evaluator& rho,
                                         const AuditConfig& cfg) {
  AuditReport report = empty_report(rho, cfg);
  const auto& f = rho.fn;
  const std::size_t n = cfg.n;

  auto check = [&](std::size_t trial, OutcomeVector x,
                   std::vector<std::size_t> pi) {
    Rational a = f(permuted(x, pi)), b = f(x);
    std::optional<Counterexample> cex;
    if (a != b) {
      cex = make_cex(kPermutationInvariance, trial, std::move(a), std::move(b),
                     "==");
      cex->vectors = {{"X", std::move(x)}};
      cex->permutation = std::move(pi);
    }
    return cex;
  };

  AxiomResult result = run_axiom(
      kPermutationInvariance, cfg.trials, cfg.threads, [&](std::size_t t) {
        Rng rng = Rng::derive(cfg.seed, kStreamPermutation, t);
        OutcomeVector x = rng.lattice_vector(n, cfg.lo, cfg.hi,
                                             cfg.lattice_steps);
        return check(t, std::move(x), rng.permutation(n));
      });

  if (n <= 6) {
    constexpr std::size_t kSweepVectors = 3;
    std::vector<std::vector<std::size_t>> perms;
    std::vector<std::size_t> pi(n);
    std::iota(pi.begin(), pi.end(), std::size_t{0});
    do {
      perms.push_back(pi);
    } while (std::next_permutation(pi.begin(), pi.end()));
    std::vector<OutcomeVector> sweep;
    for (std::size_t v = 0; v < kSweepVectors; ++v) {
      Rng rng = Rng::derive(cfg.seed, kStreamPermutationSweep, v);
      sweep.push_back(rng.lattice_vector(n, cfg.lo, cfg.hi,
                                         cfg.lattice_steps));
    }
    extend_axiom(result, kSweepVectors * perms.size(), cfg.threads,
                 [&](std::size_t k) {
                   return check(k, sweep[k / perms.size()],
                                perms[k % perms.size()]);
                 });
  }
  report.results.push_back(std::move(result));
  return report;
}

AuditReport check_comonotone_additivity(const Evaluator& rho,
                                        const AuditConfig& cfg) {
  AuditReport report = empty_report(rho, cfg);
  const auto& f = rho.fn;
  const std::size_t n = cfg.n;

  auto check = [&](std::size_t trial, OutcomeVector x, OutcomeVector y) {
    Rational a = f(x + y), b = f(x) + f(y);
    std::optional<Counterexample> cex;
    if (a != b) {
      cex = make_cex(kComonotoneAdditivity, trial, std::move(a), std::move(b),
                     "==");
      cex->vectors = {{"X", std::move(x)}, {"Y", std::move(y)}};
    }
    return cex;
  };

  AxiomResult result = run_axiom(
      kComonotoneAdditivity, cfg.trials, cfg.threads, [&](std::size_t t) {
        Rng rng = Rng::derive(cfg.seed, kStreamComonotone, t);
        auto [x, y] = gen_comonotone_pair(rng.next(), n, cfg.lo, cfg.hi,
                                          cfg.lattice_steps);
        return check(t, std::move(x), std::move(y));
      });

  if (n <= 4) {
    const std::vector<Rational> values = {cfg.lo, (cfg.lo + cfg.hi) / 2,
                                          cfg.hi};
    std::size_t total = 1;
    for (std::size_t i = 0; i < n; ++i) total *= values.size();
    auto decode = [&](std::size_t code) {
      std::vector<Rational> out(n);
      for (std::size_t i = 0; i < n; ++i) {
        out[i] = values[code % values.size()];
        code /= values.size();
      }
      return OutcomeVector(std::move(out));
    };
    std::vector<std::pair<OutcomeVector, OutcomeVector>> pairs;
    for (std::size_t a = 0; a < total; ++a) {
      for (std::size_t b = 0; b < total; ++b) {
        OutcomeVector x = decode(a), y = decode(b);
        if (is_comonotone(x, y).comonotone) {
          pairs.emplace_back(std::move(x), std::move(y));
        }
      }
    }
    extend_axiom(result, pairs.size(), cfg.threads, [&](std::size_t k) {
      return check(k, pairs[k].first, pairs[k].second);
    });
  }

  if (rho.form && has_comonotone_form_classification(*rho.form)) {
    result.by_form = classify_comonotone(*rho.form);
  }
  report.results.push_back(std::move(result));
  return report;
}

std::pair<OutcomeVector, OutcomeVector> gen_dominated_pair(
    std::uint64_t seed, std::uint64_t trial, const AuditConfig& cfg) {
  Rng rng = Rng::derive(seed, kStreamSsd, trial);
  const std::size_t n = cfg.n;
  if (trial % 2 == 1) {
    constexpr int kAttempts = 16;
    for (int attempt = 0; attempt < kAttempts; ++attempt) {
      OutcomeVector x = rng.lattice_vector(n, cfg.lo, cfg.hi,
                                           cfg.lattice_steps);
      OutcomeVector y = rng.lattice_vector(n, cfg.lo, cfg.hi,
                                           cfg.lattice_steps);
      if (ssd_dominated(x, y)) return {std::move(x), std::move(y)};
      if (ssd_dominated(y, x)) return {std::move(y), std::move(x)};
    }
  }
  OutcomeVector y = rng.lattice_vector(n, cfg.lo, cfg.hi, cfg.lattice_steps);
  const DoublyStochasticMatrix a = rng.doubly_stochastic(n, 2 * n);
  OutcomeVector x = a.apply(y);
  if (rng.below(2) == 1) {
    x = x - rng.lattice_vector(n, Rational(0), (cfg.hi - cfg.lo) / 4,
                               cfg.lattice_steps);
  }
  return {std::move(x), std::move(y)};
}

AuditReport check_ssd_preservation(const Evaluator& rho,
                                   const AuditConfig& cfg) {
  AuditReport report = empty_report(rho, cfg);
  const auto& f = rho.fn;
  report.results.push_back(run_axiom(
      kSsdPreservation, cfg.trials, cfg.threads, [&](std::size_t t) {
        auto [x, y] = gen_dominated_pair(cfg.seed, t, cfg);
        Rational a = f(x), b = f(y);
        std::optional<Counterexample> cex;
        if (b < a) {
          cex = make_cex(kSsdPreservation, t, std::move(a), std::move(b), "<=");
          cex->vectors = {{"X", std::move(x)}, {"Y", std::move(y)}};
        }
        return cex;
      }));
  return report;
}

AuditReport audit(const Evaluator& rho, const AuditConfig& cfg) {
  AuditReport report = check_coherence(rho, cfg);
  for (auto* check : {&check_permutation_invariance,
                      &check_comonotone_additivity, &check_ssd_preservation}) {
    AuditReport part = (*check)(rho, cfg);
    for (AxiomResult& r : part.results) report.results.push_back(std::move(r));
  }
  return report;
}

bool replay(const Counterexample& cex, const Evaluator& rho) {
  try {
    const auto s = sides(cex, rho);
    return s.first == cex.lhs && s.second == cex.rhs &&
           violated(s, cex.relation);
  } catch (const std::invalid_argument&) {
    return false;
  }
}

std::pair<OutcomeVector, OutcomeVector> comonotone_pair_from(
    const std::vector<std::size_t>& latent, const std::vector<Rational>& f,
    const std::vector<Rational>& g) {
  if (!std::is_sorted(f.begin(), f.end()) ||
      !std::is_sorted(g.begin(), g.end())) {
    throw std::invalid_argument("comonotone_pair_from: f and g must be "
                                "nondecreasing");
  }
  std::vector<Rational> x, y;
  for (std::size_t z : latent) {
    if (z >= f.size() || z >= g.size()) {
      throw std::invalid_argument("comonotone_pair_from: latent out of range");
    }
    x.push_back(f[z]);
    y.push_back(g[z]);
  }
  return {OutcomeVector(std::move(x)), OutcomeVector(std::move(y))};
}

std::pair<OutcomeVector, OutcomeVector> gen_comonotone_pair(
    std::uint64_t seed, std::size_t n, const Rational& lo, const Rational& hi,
    std::uint64_t lattice_steps) {
  Rng rng(seed);
  std::vector<std::size_t> latent(n);
  for (auto& z : latent) z = rng.below(n);
  auto step_function = [&] {
    std::vector<Rational> levels;
    for (std::size_t k = 0; k < n; ++k) {
      levels.push_back(rng.lattice(lo, hi, lattice_steps));
    }
    std::sort(levels.begin(), levels.end());
    return levels;
  };
  const std::vector<Rational> f = step_function();
  const std::vector<Rational> g = step_function();
  return comonotone_pair_from(latent, f, g);
}

}  // namespace riskgrid

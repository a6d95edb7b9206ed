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

#ifndef RISKGRID_SAMPLING_H_
#define RISKGRID_SAMPLING_H_

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include "riskgrid/dominance.h"
#include "riskgrid/outcome.h"
#include "riskgrid/rational.h"

namespace riskgrid {

// Seeded generator with platform-independent draws. std::mt19937_64 output
// is fixed by the standard; the distributions here are hand-rolled because
// the std:: ones are implementation-defined.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  // Independent stream for (seed, stream, index), e.g. one per audit trial.
  static Rng derive(std::uint64_t seed, std::uint64_t stream,
                    std::uint64_t index);

  std::uint64_t next() { return engine_(); }

  // Uniform on [0, bound). bound > 0.
  std::uint64_t below(std::uint64_t bound);

  // Uniform on {lo + (hi - lo) k / steps : k = 0..steps}.
  Rational lattice(const Rational& lo, const Rational& hi, std::uint64_t steps);

  OutcomeVector lattice_vector(std::size_t n, const Rational& lo,
                               const Rational& hi, std::uint64_t steps);

  std::vector<std::size_t> permutation(std::size_t n);

  // Nonnegative weights j/den summing to one, as a plain vector.
  std::vector<Rational> simplex(std::size_t size, std::uint64_t den);

  // Random convex combination of up to `max_terms` random permutation
  // matrices.
  DoublyStochasticMatrix doubly_stochastic(std::size_t n,
                                           std::size_t max_terms);

 private:
  std::mt19937_64 engine_;
};

}  // namespace riskgrid

#endif  // RISKGRID_SAMPLING_H_

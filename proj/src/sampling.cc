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

#include "riskgrid/sampling.h"

#include <numeric>
#include <stdexcept>
#include <utility>

namespace riskgrid {
namespace {

std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace

Rng Rng::derive(std::uint64_t seed, std::uint64_t stream,
                std::uint64_t index) {
  std::uint64_t state = seed;
  std::uint64_t mixed = splitmix64(state);
  state ^= stream * 0xd1b54a32d192ed03ULL;
  mixed ^= splitmix64(state);
  state ^= index * 0x8cb92ba72f3d8dd7ULL;
  mixed ^= splitmix64(state);
  return Rng(mixed);
}

std::uint64_t Rng::below(std::uint64_t bound) {
  if (bound == 0) throw std::invalid_argument("Rng::below: zero bound");
  // Rejection keeps the draw exactly uniform.
  const std::uint64_t limit = -bound % bound;
  for (;;) {
    const std::uint64_t r = engine_();
    if (r >= limit) return r % bound;
  }
}

Rational Rng::lattice(const Rational& lo, const Rational& hi,
                      std::uint64_t steps) {
  const std::uint64_t k = below(steps + 1);
  return lo + (hi - lo) * Rational(k) / Rational(steps);
}

OutcomeVector Rng::lattice_vector(std::size_t n, const Rational& lo,
                                  const Rational& hi, std::uint64_t steps) {
  std::vector<Rational> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.push_back(lattice(lo, hi, steps));
  return OutcomeVector(std::move(out));
}

std::vector<std::size_t> Rng::permutation(std::size_t n) {
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  for (std::size_t i = n; i > 1; --i) {
    std::swap(perm[i - 1], perm[below(i)]);
  }
  return perm;
}

std::vector<Rational> Rng::simplex(std::size_t size, std::uint64_t den) {
  // Stars and bars: `size` bins sharing `den` units.
  std::vector<std::uint64_t> counts(size, 0);
  for (std::uint64_t unit = 0; unit < den; ++unit) ++counts[below(size)];
  std::vector<Rational> out;
  out.reserve(size);
  for (std::uint64_t c : counts) out.push_back(Rational(c) / Rational(den));
  return out;
}

DoublyStochasticMatrix Rng::doubly_stochastic(std::size_t n,
                                              std::size_t max_terms) {
  const std::size_t terms = 1 + below(max_terms);
  const std::vector<Rational> weights = simplex(terms, 4 * terms);
  std::vector<std::vector<Rational>> rows(n, std::vector<Rational>(n));
  for (const Rational& w : weights) {
    const std::vector<std::size_t> perm = permutation(n);
    for (std::size_t i = 0; i < n; ++i) rows[i][perm[i]] += w;
  }
  return DoublyStochasticMatrix(std::move(rows));
}

}  // namespace riskgrid

// Copyright 2026 The patternq Authors
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

#include "patternq/pattern_class.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <vector>

namespace patternq {

PatternClass::PatternClass(const Recipe& recipe)
    : spec_(recipe), basis_(build_basis(recipe)), rho_(class_rho(basis_)) {}

std::uint64_t derive_seed(std::uint64_t master, std::uint64_t stream) {
  std::seed_seq seq{static_cast<std::uint32_t>(master), static_cast<std::uint32_t>(master >> 32),
                    static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32)};
  std::array<std::uint32_t, 2> out{};
  seq.generate(out.begin(), out.end());
  return (static_cast<std::uint64_t>(out[0]) << 32) | out[1];
}

PatternVector flip_random_bits(const PatternVector& base, std::size_t k, Rng& rng) {
  if (k > base.size()) {
    throw UsageError("cannot flip " + std::to_string(k) + " bits of a length-" +
                     std::to_string(base.size()) + " vector");
  }
  std::vector<std::size_t> all(base.size());
  std::iota(all.begin(), all.end(), std::size_t{0});
  std::vector<std::size_t> chosen;
  chosen.reserve(k);
  std::sample(all.begin(), all.end(), std::back_inserter(chosen), static_cast<std::ptrdiff_t>(k), rng);
  PatternVector out = base;
  for (std::size_t i : chosen) out.flip(i);
  return out;
}

}  // namespace patternq

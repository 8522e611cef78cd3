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

#pragma once

#include <cstdint>
#include <optional>
#include <random>

#include "patternq/classifier.hpp"
#include "patternq/pattern_basis.hpp"
#include "patternq/recipe.hpp"

namespace patternq {

/// A function class together with its classifier, built once from a recipe
/// and shared read-only between workers.
class PatternClass {
 public:
  explicit PatternClass(const Recipe& recipe);

  const Recipe& recipe() const noexcept { return spec_.recipe(); }
  const PatternBasis& basis() const noexcept { return basis_; }
  const ClassifierSpec& spec() const noexcept { return spec_; }
  int arity() const noexcept { return spec_.total_bits(); }
  std::size_t length() const noexcept { return basis_.size(); }
  const std::optional<std::size_t>& rho() const noexcept { return rho_; }

  ThresholdReport threshold(const PatternVector& h) const {
    return classification_threshold(spec_, basis_, h);
  }

 private:
  ClassifierSpec spec_;
  PatternBasis basis_;
  std::optional<std::size_t> rho_;
};

using Rng = std::mt19937_64;

/// Derives an independent stream seed from a master seed and a stream id,
/// so round r or shard k of a run does not depend on how work is scheduled.
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t stream);

/// Copy of `base` with a uniformly random k-subset of its bits flipped.
PatternVector flip_random_bits(const PatternVector& base, std::size_t k, Rng& rng);

}  // namespace patternq

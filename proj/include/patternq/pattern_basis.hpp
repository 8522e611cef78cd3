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

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "patternq/pattern_vector.hpp"
#include "patternq/recipe.hpp"

namespace patternq {

/// First defect found in a candidate basis.
struct BasisViolation {
  enum class Kind { kEmpty, kShape, kOrthogonality };
  Kind kind = Kind::kShape;
  std::size_t first = 0;
  std::size_t second = 0;
  std::size_t xor_weight = 0;
  std::size_t expected_weight = 0;
  std::string message;
};

/// Checks that `members` has 2^n vectors of length 2^n and that every pair
/// XORs to a vector with exactly 2^(n-1) ones. Returns nullopt when valid.
std::optional<BasisViolation> validate_basis(std::span<const PatternVector> members);

/// Ordered pattern basis built from B1 / Q2 factors. Always valid: every
/// constructor path checks orthogonality.
class PatternBasis {
 public:
  /// Wraps explicit members, validating them. Throws UsageError on violation.
  PatternBasis(Recipe recipe, std::vector<PatternVector> members);

  const Recipe& recipe() const noexcept { return recipe_; }
  int rank() const noexcept { return rank_; }
  /// Member count, equal to member length.
  std::size_t size() const noexcept { return members_.size(); }
  std::span<const PatternVector> members() const noexcept { return members_; }
  const PatternVector& operator[](std::size_t i) const { return members_.at(i); }

  /// Recipe line followed by one MSB-first member per line.
  std::string serialize() const;

 private:
  Recipe recipe_;
  int rank_ = 0;
  std::vector<PatternVector> members_;
};

/// B1 = (00, 01) or Q2 = (0001, 0010, 0100, 1000).
PatternBasis builtin_basis(Factor kind);

/// Member a * |Q| + b is pattern_product(P[a], Q[b]).
PatternBasis basis_product(const PatternBasis& p, const PatternBasis& q);

/// Left fold of basis_product over the recipe's factors.
PatternBasis build_basis(const Recipe& recipe);

/// Minimum distance from a function to a class and the members attaining it.
struct NearestSet {
  std::size_t distance = 0;
  std::vector<std::size_t> indices;

  bool contains(std::size_t index) const noexcept;
};

NearestSet distance_from_class(const PatternBasis& basis, const PatternVector& h);

/// Common zero count of all members, or nullopt when members disagree.
std::optional<std::size_t> class_rho(const PatternBasis& basis);

}  // namespace patternq

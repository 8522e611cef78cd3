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

#include "patternq/pattern_basis.hpp"

#include <algorithm>
#include <bit>
#include <limits>

namespace patternq {

std::optional<BasisViolation> validate_basis(std::span<const PatternVector> members) {
  using Kind = BasisViolation::Kind;
  if (members.empty()) {
    return BasisViolation{Kind::kEmpty, 0, 0, 0, 0, "basis has no members"};
  }
  const std::size_t count = members.size();
  for (std::size_t i = 0; i < count; ++i) {
    if (members[i].size() != count) {
      return BasisViolation{Kind::kShape, i, i, 0, 0,
                            "member " + std::to_string(i) + " has length " +
                                std::to_string(members[i].size()) + " but the basis has " +
                                std::to_string(count) + " members"};
    }
  }
  const std::size_t expected = count / 2;
  for (std::size_t i = 0; i < count; ++i) {
    for (std::size_t j = i + 1; j < count; ++j) {
      const std::size_t w = hamming_distance(members[i], members[j]);
      if (w != expected) {
        return BasisViolation{Kind::kOrthogonality, i, j, w, expected,
                              "members (" + std::to_string(i) + "," + std::to_string(j) +
                                  ") XOR weight " + std::to_string(w) +
                                  " != " + std::to_string(expected)};
      }
    }
  }
  return std::nullopt;
}

PatternBasis::PatternBasis(Recipe recipe, std::vector<PatternVector> members)
    : recipe_(std::move(recipe)), members_(std::move(members)) {
  if (auto violation = validate_basis(members_)) {
    throw UsageError("invalid pattern basis: " + violation->message);
  }
  rank_ = std::countr_zero(members_.size());
  if (!recipe_.empty() && recipe_.total_rank() != rank_) {
    throw UsageError("recipe " + recipe_.to_string() + " has rank " +
                     std::to_string(recipe_.total_rank()) + " but the basis has rank " +
                     std::to_string(rank_));
  }
}

std::string PatternBasis::serialize() const {
  std::string out = recipe_.to_string();
  out += '\n';
  for (const auto& m : members_) {
    out += m.to_string();
    out += '\n';
  }
  return out;
}

PatternBasis builtin_basis(Factor kind) {
  if (kind == Factor::kB1) {
    return PatternBasis(Recipe{Factor::kB1},
                        {PatternVector::parse("00"), PatternVector::parse("01")});
  }
  return PatternBasis(Recipe{Factor::kQ2},
                      {PatternVector::parse("0001"), PatternVector::parse("0010"),
                       PatternVector::parse("0100"), PatternVector::parse("1000")});
}

PatternBasis basis_product(const PatternBasis& p, const PatternBasis& q) {
  std::vector<PatternVector> members;
  members.reserve(p.size() * q.size());
  for (const auto& a : p.members()) {
    for (const auto& b : q.members()) members.push_back(pattern_product(a, b));
  }
  return PatternBasis(p.recipe() + q.recipe(), std::move(members));
}

PatternBasis build_basis(const Recipe& recipe) {
  require_buildable(recipe);
  const auto& factors = recipe.factors();
  PatternBasis acc = builtin_basis(factors.front());
  for (std::size_t k = 1; k < factors.size(); ++k) acc = basis_product(acc, builtin_basis(factors[k]));
  return acc;
}

bool NearestSet::contains(std::size_t index) const noexcept {
  return std::binary_search(indices.begin(), indices.end(), index);
}

NearestSet distance_from_class(const PatternBasis& basis, const PatternVector& h) {
  if (h.size() != basis.size()) {
    throw UsageError("distance_from_class: function length " + std::to_string(h.size()) +
                     " does not match basis length " + std::to_string(basis.size()));
  }
  NearestSet out;
  out.distance = std::numeric_limits<std::size_t>::max();
  const auto members = basis.members();
  for (std::size_t k = 0; k < members.size(); ++k) {
    const std::size_t d = hamming_distance(members[k], h);
    if (d < out.distance) {
      out.distance = d;
      out.indices.clear();
    }
    if (d == out.distance) out.indices.push_back(k);
  }
  return out;
}

std::optional<std::size_t> class_rho(const PatternBasis& basis) {
  const auto members = basis.members();
  const std::size_t zeros = members.front().count_zeros();
  for (const auto& m : members) {
    if (m.count_zeros() != zeros) return std::nullopt;
  }
  return zeros;
}

}  // namespace patternq

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

#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

namespace patternq {

/// Largest supported class rank: pattern vectors of length 64.
inline constexpr int kMaxRank = 6;

/// Elementary building block. Each factor names a pattern basis and the
/// transform that classifies it: B1 <-> H (one index bit), Q2 <-> C2 (two
/// index bits).
enum class Factor { kB1, kQ2 };

constexpr int factor_rank(Factor f) noexcept { return f == Factor::kB1 ? 1 : 2; }

/// "H" or "C2".
std::string_view gate_name(Factor f) noexcept;
/// "B1" or "Q2".
std::string_view basis_name(Factor f) noexcept;

/// Ordered factor list, leftmost factor most significant.
///
/// Text grammar: comma-separated factor names, e.g. "H,C2,H". Basis names
/// (B1, Q2) are accepted as aliases of H and C2; whitespace around names is
/// ignored. to_string() always emits gate names.
class Recipe {
 public:
  Recipe() = default;
  Recipe(std::initializer_list<Factor> factors) : factors_(factors) {}
  explicit Recipe(std::vector<Factor> factors) : factors_(std::move(factors)) {}

  static Recipe parse(std::string_view text);

  const std::vector<Factor>& factors() const noexcept { return factors_; }
  bool empty() const noexcept { return factors_.empty(); }
  std::size_t size() const noexcept { return factors_.size(); }

  /// Sum of factor ranks; the arity n of the realized functions.
  int total_rank() const noexcept;
  /// 2^total_rank().
  std::size_t length() const noexcept { return std::size_t{1} << total_rank(); }

  std::string to_string() const;
  /// e.g. "B1 (.) Q2" for display next to basis listings.
  std::string basis_string() const;

  Recipe operator+(const Recipe& tail) const;

  friend bool operator==(const Recipe&, const Recipe&) = default;

 private:
  std::vector<Factor> factors_;
};

/// Throws UsageError if the recipe is empty or exceeds kMaxRank.
void require_buildable(const Recipe& recipe);

/// Every recipe over {H, C2} whose total rank is exactly `rank`.
std::vector<Recipe> recipes_of_rank(int rank);
/// Every recipe with total rank in [1, max_rank].
std::vector<Recipe> recipes_up_to_rank(int max_rank = kMaxRank);

}  // namespace patternq

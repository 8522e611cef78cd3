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

#include "patternq/recipe.hpp"

#include <algorithm>
#include <cctype>

#include "patternq/pattern_vector.hpp"

namespace patternq {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::string upper(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return static_cast<char>(std::toupper(c)); });
  return out;
}

}  // namespace

std::string_view gate_name(Factor f) noexcept { return f == Factor::kB1 ? "H" : "C2"; }

std::string_view basis_name(Factor f) noexcept { return f == Factor::kB1 ? "B1" : "Q2"; }

Recipe Recipe::parse(std::string_view text) {
  std::vector<Factor> factors;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = text.find(',', start);
    const std::string token =
        upper(trim(text.substr(start, comma == std::string_view::npos ? text.npos : comma - start)));
    if (token == "H" || token == "B1") {
      factors.push_back(Factor::kB1);
    } else if (token == "C2" || token == "Q2") {
      factors.push_back(Factor::kQ2);
    } else {
      throw UsageError("unknown factor \"" + token + "\" in recipe \"" + std::string(text) +
                       "\" (expected H, C2, B1 or Q2)");
    }
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return Recipe(std::move(factors));
}

int Recipe::total_rank() const noexcept {
  int total = 0;
  for (Factor f : factors_) total += factor_rank(f);
  return total;
}

std::string Recipe::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    if (i) out += ',';
    out += gate_name(factors_[i]);
  }
  return out;
}

std::string Recipe::basis_string() const {
  std::string out;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    if (i) out += " (.) ";
    out += basis_name(factors_[i]);
  }
  return out;
}

Recipe Recipe::operator+(const Recipe& tail) const {
  std::vector<Factor> all = factors_;
  all.insert(all.end(), tail.factors_.begin(), tail.factors_.end());
  return Recipe(std::move(all));
}

void require_buildable(const Recipe& recipe) {
  if (recipe.empty()) throw UsageError("recipe is empty");
  if (recipe.total_rank() > kMaxRank) {
    throw UsageError("recipe " + recipe.to_string() + " has rank " +
                     std::to_string(recipe.total_rank()) + "; the maximum is " +
                     std::to_string(kMaxRank));
  }
}

std::vector<Recipe> recipes_of_rank(int rank) {
  if (rank <= 0) return rank == 0 ? std::vector<Recipe>{Recipe{}} : std::vector<Recipe>{};
  std::vector<Recipe> out;
  for (Factor head : {Factor::kB1, Factor::kQ2}) {
    for (const Recipe& tail : recipes_of_rank(rank - factor_rank(head))) {
      out.push_back(Recipe{head} + tail);
    }
  }
  return out;
}

std::vector<Recipe> recipes_up_to_rank(int max_rank) {
  std::vector<Recipe> out;
  for (int r = 1; r <= max_rank; ++r) {
    auto level = recipes_of_rank(r);
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

}  // namespace patternq

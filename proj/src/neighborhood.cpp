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

#include "patternq/neighborhood.hpp"

#include <numeric>
#include <string>

namespace patternq {

NeighborhoodEnumerator::NeighborhoodEnumerator(PatternVector center, std::size_t radius)
    : center_(std::move(center)), radius_(radius) {
  if (radius_ > center_.size()) {
    throw UsageError("neighborhood radius " + std::to_string(radius_) + " exceeds length " +
                     std::to_string(center_.size()));
  }
}

std::optional<PatternVector> NeighborhoodEnumerator::next() {
  if (done_) return std::nullopt;
  PatternVector out = center_;
  for (std::size_t i : flipped_) out.flip(i);
  if (!advance_combination()) {
    ++distance_;
    if (distance_ > radius_) {
      done_ = true;
    } else {
      flipped_.resize(distance_);
      std::iota(flipped_.begin(), flipped_.end(), std::size_t{0});
    }
  }
  return out;
}

bool NeighborhoodEnumerator::advance_combination() {
  const std::size_t n = center_.size();
  const std::size_t k = flipped_.size();
  for (std::size_t pos = k; pos-- > 0;) {
    if (flipped_[pos] < n - k + pos) {
      ++flipped_[pos];
      for (std::size_t t = pos + 1; t < k; ++t) flipped_[t] = flipped_[t - 1] + 1;
      return true;
    }
  }
  return false;
}

std::uint64_t NeighborhoodEnumerator::count(std::size_t length, std::size_t radius) {
  std::uint64_t total = 0;
  std::uint64_t binom = 1;
  for (std::size_t k = 0; k <= radius && k <= length; ++k) {
    total += binom;
    binom = binom * (length - k) / (k + 1);
  }
  return total;
}

std::vector<PatternVector> enumerate_neighborhood(const PatternVector& center, std::size_t radius) {
  NeighborhoodEnumerator it(center, radius);
  std::vector<PatternVector> out;
  while (auto p = it.next()) out.push_back(std::move(*p));
  return out;
}

}  // namespace patternq

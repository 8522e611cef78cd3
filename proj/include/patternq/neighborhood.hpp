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
#include <cstdint>
#include <optional>
#include <vector>

#include "patternq/pattern_vector.hpp"

namespace patternq {

/// Streams every vector within Hamming distance `radius` of a center.
///
/// Order: increasing distance, then the set of flipped indices in
/// lexicographic order. Each vector is produced exactly once.
class NeighborhoodEnumerator {
 public:
  NeighborhoodEnumerator(PatternVector center, std::size_t radius);

  std::optional<PatternVector> next();

  /// Sum of C(length, k) for k = 0..radius.
  static std::uint64_t count(std::size_t length, std::size_t radius);

 private:
  bool advance_combination();

  PatternVector center_;
  std::size_t radius_;
  std::size_t distance_ = 0;
  std::vector<std::size_t> flipped_;
  bool done_ = false;
};

/// Materialized neighborhood; use NeighborhoodEnumerator for large radii.
std::vector<PatternVector> enumerate_neighborhood(const PatternVector& center, std::size_t radius);

}  // namespace patternq

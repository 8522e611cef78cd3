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

// Reference tables of mean classification thresholds and the machinery to
// regenerate and diff them.

#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "patternq/experiment.hpp"
#include "patternq/recipe.hpp"

namespace patternq {

enum class Relation { kApprox, kExact, kBetween };

std::string_view to_string(Relation r) noexcept;

inline constexpr double kApproxTolerance = 0.005;
inline constexpr double kExactTolerance = 1e-9;

/// One fixture line: a distance range of one recipe in one table.
struct ExpectedCell {
  int table = 0;
  Recipe recipe;
  std::size_t first = 0;
  std::size_t last = 0;
  Relation relation = Relation::kApprox;
  double low = 0.0;
  /// Upper bound for kBetween; equal to `low` otherwise.
  double high = 0.0;
  /// 1-based line in the fixture text.
  int line = 0;

  /// True when `mean` satisfies the relation.
  bool accepts(double mean) const noexcept;
  std::string expectation() const;
};

/// The compiled-in fixture text.
std::string_view expected_tables_text() noexcept;

/// Parses fixture text; throws UsageError naming the offending line.
std::vector<ExpectedCell> parse_expected_cells(std::string_view text);

/// Parsed compiled-in fixture.
const std::vector<ExpectedCell>& expected_cells();

/// Table numbers present in the fixture, ascending.
std::vector<int> expected_table_ids();

enum class Verdict { kPass, kFail, kNotApplicable };

std::string_view to_string(Verdict v) noexcept;

struct CellResult {
  int table = 0;
  Recipe recipe;
  std::size_t distance = 0;
  std::string expectation;
  std::optional<double> observed;
  std::uint64_t count = 0;
  Verdict verdict = Verdict::kNotApplicable;
};

/// Expands every cell of `cells` matching the profile recipe into one result
/// per distance. Empty buckets yield kNotApplicable.
std::vector<CellResult> check_cells(const DistanceProfile& profile, std::span<const ExpectedCell> cells);

struct TableReport {
  int table = 0;
  std::vector<DistanceProfile> profiles;
  std::vector<CellResult> cells;

  std::size_t failures() const noexcept;
  std::size_t passes() const noexcept;
  bool passed() const noexcept { return failures() == 0; }
};

/// Sample quotas used for sampled tables: 200 per distance in [1, 2^(n-1) - 1].
Quotas default_table_quotas(int rank);

/// Regenerates one table. Ranks up to 4 are enumerated exhaustively; larger
/// ranks use stratified sampling plus the probe suite.
TableReport reproduce_table(int table, std::uint64_t seed = 42, unsigned workers = 1);

/// Cell-level text report; one line per distance.
void write_table_report(const TableReport& report, std::ostream& os);

}  // namespace patternq

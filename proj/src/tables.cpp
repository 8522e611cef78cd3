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

#include "patternq/tables.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <set>
#include <sstream>

#include "patternq/report.hpp"

namespace patternq {

std::string_view to_string(Relation r) noexcept {
  switch (r) {
    case Relation::kApprox:
      return "approx";
    case Relation::kExact:
      return "exact";
    case Relation::kBetween:
      return "between";
  }
  return "approx";
}

std::string_view to_string(Verdict v) noexcept {
  switch (v) {
    case Verdict::kPass:
      return "PASS";
    case Verdict::kFail:
      return "FAIL";
    case Verdict::kNotApplicable:
      return "n/a";
  }
  return "n/a";
}

bool ExpectedCell::accepts(double mean) const noexcept {
  switch (relation) {
    case Relation::kApprox:
      // Printed values carry two decimals; allow for the binary
      // representation of the bound itself.
      return std::abs(mean - low) <= kApproxTolerance + 1e-12;
    case Relation::kExact:
      return std::abs(mean - low) <= kExactTolerance;
    case Relation::kBetween:
      return mean > low && mean < high;
  }
  return false;
}

std::string ExpectedCell::expectation() const {
  char buf[64];
  switch (relation) {
    case Relation::kApprox:
      std::snprintf(buf, sizeof buf, "%.2f +- %.3f", low, kApproxTolerance);
      break;
    case Relation::kExact:
      std::snprintf(buf, sizeof buf, "%.2f exactly", low);
      break;
    case Relation::kBetween:
      std::snprintf(buf, sizeof buf, "(%.2f, %.2f)", low, high);
      break;
  }
  return buf;
}

std::vector<ExpectedCell> parse_expected_cells(std::string_view text) {
  std::vector<ExpectedCell> cells;
  std::istringstream in{std::string(text)};
  std::string line;
  int number = 0;
  while (std::getline(in, line)) {
    ++number;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    std::vector<std::string> f;
    for (std::string tok; fields >> tok;) f.push_back(tok);
    if (f.empty()) continue;
    auto fail = [&](const std::string& why) {
      return UsageError("expected-table fixture line " + std::to_string(number) + ": " + why);
    };
    if (f.size() != 6 && f.size() != 7) throw fail("expected 6 or 7 fields");
    ExpectedCell c;
    c.line = number;
    try {
      c.table = std::stoi(f[0]);
      c.recipe = Recipe::parse(f[1]);
      c.first = std::stoul(f[2]);
      c.last = std::stoul(f[3]);
      c.low = parse_double(f[5]);
    } catch (const std::exception& e) {
      throw fail(e.what());
    }
    if (f[4] == "approx") {
      c.relation = Relation::kApprox;
    } else if (f[4] == "exact") {
      c.relation = Relation::kExact;
    } else if (f[4] == "between") {
      c.relation = Relation::kBetween;
    } else {
      throw fail("unknown relation \"" + f[4] + "\"");
    }
    if ((c.relation == Relation::kBetween) != (f.size() == 7)) {
      throw fail("an upper bound is required for, and only for, between");
    }
    c.high = f.size() == 7 ? parse_double(f[6]) : c.low;
    if (c.first < 1 || c.first > c.last || c.last > c.recipe.length()) {
      throw fail("distance range outside [1, " + std::to_string(c.recipe.length()) + "]");
    }
    cells.push_back(std::move(c));
  }
  return cells;
}

const std::vector<ExpectedCell>& expected_cells() {
  static const std::vector<ExpectedCell> cells = parse_expected_cells(expected_tables_text());
  return cells;
}

std::vector<int> expected_table_ids() {
  std::set<int> ids;
  for (const auto& c : expected_cells()) ids.insert(c.table);
  return {ids.begin(), ids.end()};
}

std::vector<CellResult> check_cells(const DistanceProfile& profile, std::span<const ExpectedCell> cells) {
  std::vector<CellResult> out;
  for (const ExpectedCell& c : cells) {
    if (c.recipe != profile.recipe()) continue;
    for (std::size_t d = c.first; d <= c.last && d <= profile.max_distance(); ++d) {
      CellResult r;
      r.table = c.table;
      r.recipe = c.recipe;
      r.distance = d;
      r.expectation = c.expectation();
      r.count = profile.bucket(d).count;
      r.observed = profile.mean_theta(d);
      if (r.observed) r.verdict = c.accepts(*r.observed) ? Verdict::kPass : Verdict::kFail;
      out.push_back(std::move(r));
    }
  }
  return out;
}

std::size_t TableReport::failures() const noexcept {
  return static_cast<std::size_t>(std::count_if(
      cells.begin(), cells.end(), [](const CellResult& c) { return c.verdict == Verdict::kFail; }));
}

std::size_t TableReport::passes() const noexcept {
  return static_cast<std::size_t>(std::count_if(
      cells.begin(), cells.end(), [](const CellResult& c) { return c.verdict == Verdict::kPass; }));
}

Quotas default_table_quotas(int rank) {
  const std::size_t half = std::size_t{1} << (rank - 1);
  return uniform_quotas(1, half - 1, 200);
}

TableReport reproduce_table(int table, std::uint64_t seed, unsigned workers) {
  std::vector<ExpectedCell> cells;
  std::vector<Recipe> recipes;
  for (const auto& c : expected_cells()) {
    if (c.table != table) continue;
    cells.push_back(c);
    if (std::find(recipes.begin(), recipes.end(), c.recipe) == recipes.end()) recipes.push_back(c.recipe);
  }
  if (cells.empty()) {
    std::string known;
    for (int id : expected_table_ids()) known += (known.empty() ? "" : ", ") + std::to_string(id);
    throw UsageError("no expected values for table " + std::to_string(table) + " (known: " + known + ")");
  }

  TableReport report;
  report.table = table;
  for (const Recipe& recipe : recipes) {
    DistanceProfile profile = [&] {
      if (recipe.total_rank() <= kMaxExhaustiveRank) return exhaustive_profile(recipe, {}, workers);
      DistanceProfile p =
          stratified_sample_profile(recipe, default_table_quotas(recipe.total_rank()), seed);
      add_probes(p, probe_suite(PatternClass(recipe)));
      return p;
    }();
    auto results = check_cells(profile, cells);
    report.cells.insert(report.cells.end(), std::make_move_iterator(results.begin()),
                        std::make_move_iterator(results.end()));
    report.profiles.push_back(std::move(profile));
  }
  return report;
}

void write_table_report(const TableReport& report, std::ostream& os) {
  os << "table " << report.table << '\n';
  char line[160];
  std::snprintf(line, sizeof line, "%-12s %5s %10s %8s  %-18s %s\n", "recipe", "d", "observed", "count",
                "expected", "verdict");
  os << line;
  for (const CellResult& c : report.cells) {
    char observed[32] = "-";
    if (c.observed) std::snprintf(observed, sizeof observed, "%.6f", *c.observed);
    std::snprintf(line, sizeof line, "%-12s %5zu %10s %8llu  %-18s %s\n", c.recipe.to_string().c_str(),
                  c.distance, observed, static_cast<unsigned long long>(c.count), c.expectation.c_str(),
                  std::string(to_string(c.verdict)).c_str());
    os << line;
  }
  os << "table " << report.table << ": " << report.passes() << " pass, " << report.failures()
     << " fail, " << report.cells.size() - report.passes() - report.failures() << " n/a\n";
}

}  // namespace patternq

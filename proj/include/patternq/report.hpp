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

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "patternq/classifier.hpp"
#include "patternq/experiment.hpp"
#include "patternq/game.hpp"

namespace patternq {

/// Shortest decimal that parses back to the same double. Locale-independent.
std::string format_double(double value);
double parse_double(std::string_view text);

// Profiles. CSV rows: distance,count,mean_theta,min_theta,max_theta for every
// populated bucket, preceded by "# key=value" metadata lines.
void write_profile_csv(const DistanceProfile& profile, std::ostream& os);
DistanceProfile read_profile_csv(std::istream& is);

nlohmann::json profile_to_json(const DistanceProfile& profile,
                               std::optional<double> runtime_seconds = std::nullopt);
DistanceProfile profile_from_json(const nlohmann::json& j);

// Outcome distributions. CSV rows: index,bitstring,probability.
void write_distribution_csv(const OutcomeDistribution<double>& probs, std::ostream& os);
OutcomeDistribution<double> read_distribution_csv(std::istream& is);
nlohmann::json distribution_to_json(const OutcomeDistribution<double>& probs);
OutcomeDistribution<double> distribution_from_json(const nlohmann::json& j);

/// MSB-first binary label of a basis ket, `bits` characters wide.
std::string ket_label(std::size_t index, int bits);

nlohmann::json threshold_to_json(const ThresholdReport& report);
nlohmann::json interval_summary_to_json(const IntervalSummary& summary);
nlohmann::json round_to_json(const RoundRecord& record);

/// Count and mean-threshold bars per populated distance, 60 columns wide.
std::string render_histogram_ascii(const DistanceProfile& profile);
/// Standalone SVG: green count bars, red threshold bars and line.
std::string render_histogram_svg(const DistanceProfile& profile);

inline constexpr int kAsciiBarWidth = 60;

/// Everything needed to rerun a command and get identical data files.
struct RunManifest {
  std::string subcommand;
  std::string recipe;
  std::string mode;
  std::uint64_t seed = 0;
  Quotas quotas;
  std::vector<std::string> outputs;
  std::string tool_version = PATTERNQ_VERSION;
  double runtime_seconds = 0.0;

  nlohmann::json to_json() const;
  static RunManifest from_json(const nlohmann::json& j);

  friend bool operator==(const RunManifest&, const RunManifest&) = default;
};

}  // namespace patternq

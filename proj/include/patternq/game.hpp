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

// Nearest Basis Ket Game. Bob hides a function h outside the class and
// reveals only its class distance; one classification measurement is
// announced; Alice says whether the measured ket is one of h's nearest
// basis kets and wins iff she is right.

#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>

#include "patternq/pattern_class.hpp"
#include "patternq/recipe.hpp"

namespace patternq {

enum class Answer { kNo, kYes };

std::string_view to_string(Answer a) noexcept;

enum class AliceStrategy { kIntervalThreshold, kAlwaysYes, kAlwaysNo };

std::string_view to_string(AliceStrategy s) noexcept;
AliceStrategy parse_alice_strategy(std::string_view text);

struct BobStrategy {
  enum class Kind { kAtDistance, kPivot, kUniformRandom };
  Kind kind = Kind::kUniformRandom;
  /// Target for kAtDistance.
  std::size_t distance = 0;

  static BobStrategy at_distance(std::size_t d) { return {Kind::kAtDistance, d}; }
  static BobStrategy pivot() { return {Kind::kPivot, 0}; }
  static BobStrategy uniform_random() { return {Kind::kUniformRandom, 0}; }

  /// "at_distance:D", "pivot" or "uniform".
  std::string to_string() const;
  static BobStrategy parse(std::string_view text);
};

struct GameConfig {
  Recipe recipe;
  BobStrategy bob;
  AliceStrategy alice = AliceStrategy::kIntervalThreshold;
  std::uint64_t trials = 1;
  std::uint64_t seed = 0;
};

/// Interval rule: yes for d <= 2^n/8, yes for d == rho when rho is known,
/// otherwise no. Throws UsageError for d == 0.
Answer alice_interval_decide(std::size_t distance, int arity, std::optional<std::size_t> rho);

/// floor(2^n / 8).
std::size_t pivot_distance(int arity) noexcept;

struct BobPick {
  PatternVector function;
  NearestSet nearest;
  /// "flip", "complement-flip", "probe:<name>" or "uniform".
  std::string source;
};

/// Attempts per route when searching for a function at a target distance.
inline constexpr std::uint64_t kBobAttemptCap = 10000;

/// Chooses h outside the class according to the strategy. Deterministic in
/// `seed`. Throws UsageError for d == 0 or when no function at the target
/// distance is found within the attempt cap.
BobPick bob_pick(const PatternClass& cls, const BobStrategy& strategy, std::uint64_t seed);

enum class Player { kAlice, kBob };

struct RoundRecord {
  std::uint64_t round = 0;
  std::uint64_t seed = 0;
  PatternVector function{2};
  std::size_t distance = 0;
  std::size_t outcome = 0;
  bool ground_truth = false;
  Answer answer = Answer::kNo;
  Player winner = Player::kBob;
};

/// Inverse-CDF draw of one basis ket from an outcome distribution.
std::size_t sample_outcome(const OutcomeDistribution<double>& probs, Rng& rng);

RoundRecord play_round(const PatternClass& cls, const GameConfig& config, std::uint64_t round_seed);

struct WinRate {
  std::uint64_t wins = 0;
  std::uint64_t trials = 0;
  double rate = 0.0;
  double standard_error = 0.0;
};

using RoundSink = std::function<void(const RoundRecord&)>;

/// Plays config.trials rounds; round r uses derive_seed(config.seed, r).
/// The result does not depend on `workers`. When a sink is given, records
/// are delivered in round order.
WinRate estimate_win_rate(const GameConfig& config, unsigned workers = 1, const RoundSink& sink = {});

}  // namespace patternq

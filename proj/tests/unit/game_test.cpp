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

#include "patternq/game.hpp"

#include <gtest/gtest.h>

#include <cmath>

namespace patternq {
namespace {

TEST(Alice, IntervalRule) {
  EXPECT_EQ(alice_interval_decide(2, 4, std::nullopt), Answer::kYes);
  EXPECT_EQ(alice_interval_decide(10, 4, 10), Answer::kYes);
  EXPECT_EQ(alice_interval_decide(8, 4, std::nullopt), Answer::kNo);
  EXPECT_EQ(alice_interval_decide(3, 4, std::nullopt), Answer::kNo);
  EXPECT_EQ(alice_interval_decide(10, 4, std::nullopt), Answer::kNo);
  EXPECT_THROW(alice_interval_decide(0, 4, std::nullopt), UsageError);
}

TEST(Strategies, ParseAndPrint) {
  EXPECT_EQ(BobStrategy::parse("at_distance:7").distance, 7u);
  EXPECT_EQ(BobStrategy::parse("pivot").kind, BobStrategy::Kind::kPivot);
  EXPECT_EQ(BobStrategy::parse("uniform").to_string(), "uniform");
  EXPECT_EQ(BobStrategy::at_distance(3).to_string(), "at_distance:3");
  EXPECT_THROW(BobStrategy::parse("at_distance:x"), UsageError);
  EXPECT_THROW(BobStrategy::parse("greedy"), UsageError);
  EXPECT_EQ(parse_alice_strategy("always_no"), AliceStrategy::kAlwaysNo);
  EXPECT_THROW(parse_alice_strategy("maybe"), UsageError);
  EXPECT_EQ(pivot_distance(4), 2u);
  EXPECT_EQ(pivot_distance(6), 8u);
}

TEST(Bob, SingleFlipAtDistanceOne) {
  const PatternClass cls(Recipe::parse("H,C2,H"));
  for (std::uint64_t s = 0; s < 20; ++s) {
    const auto pick = bob_pick(cls, BobStrategy::at_distance(1), s);
    EXPECT_EQ(pick.nearest.distance, 1u);
    EXPECT_EQ(distance_from_class(cls.basis(), pick.function).distance, 1u);
  }
}

TEST(Bob, RhoDistanceIsAllOnes) {
  const PatternClass cls(Recipe::parse("C2,C2"));
  const auto pick = bob_pick(cls, BobStrategy::at_distance(10), 1);
  EXPECT_EQ(pick.function, PatternVector::ones(16));
  EXPECT_EQ(pick.source, "probe:all-ones");
}

TEST(Bob, PivotDistance) {
  const PatternClass cls(Recipe::parse("C2,C2,H"));
  const auto pick = bob_pick(cls, BobStrategy::pivot(), 4);
  EXPECT_EQ(pick.nearest.distance, 4u);
}

TEST(Bob, RejectsDistanceZeroAndUnreachable) {
  const PatternClass cls(Recipe::parse("C2,C2"));
  EXPECT_THROW(bob_pick(cls, BobStrategy::at_distance(0), 1), UsageError);
  try {
    bob_pick(cls, BobStrategy::at_distance(12), 1);
    FAIL() << "expected UsageError";
  } catch (const UsageError& e) {
    EXPECT_NE(std::string(e.what()).find("12"), std::string::npos);
  }
  EXPECT_THROW(bob_pick(cls, BobStrategy::at_distance(17), 1), UsageError);
}

TEST(Bob, NeverPlaysAMember) {
  const PatternClass cls(Recipe::parse("H,H"));
  for (std::uint64_t s = 0; s < 200; ++s) {
    EXPECT_GT(bob_pick(cls, BobStrategy::uniform_random(), s).nearest.distance, 0u);
  }
}

TEST(Round, ReplayIsBitForBit) {
  const GameConfig config{Recipe::parse("H,C2,H"), BobStrategy::at_distance(3),
                          AliceStrategy::kIntervalThreshold, 1, 0};
  const PatternClass cls(config.recipe);
  const auto a = play_round(cls, config, 123), b = play_round(cls, config, 123);
  EXPECT_EQ(a.function, b.function);
  EXPECT_EQ(a.outcome, b.outcome);
  EXPECT_EQ(a.answer, b.answer);
  EXPECT_EQ(a.winner, b.winner);
}

TEST(Round, GroundTruthFromNearestSet) {
  const GameConfig config{Recipe::parse("H,C2,H"), BobStrategy::at_distance(2),
                          AliceStrategy::kAlwaysYes, 1, 0};
  const PatternClass cls(config.recipe);
  for (std::uint64_t s = 0; s < 50; ++s) {
    const auto r = play_round(cls, config, s);
    const auto nearest = distance_from_class(cls.basis(), r.function);
    EXPECT_EQ(r.ground_truth, nearest.contains(r.outcome));
    EXPECT_EQ(r.winner == Player::kAlice, r.ground_truth);
  }
}

TEST(Round, RecipeMismatch) {
  const GameConfig config{Recipe::parse("H,C2"), BobStrategy::at_distance(1),
                          AliceStrategy::kIntervalThreshold, 1, 0};
  EXPECT_THROW(play_round(PatternClass(Recipe::parse("C2,H")), config, 1), UsageError);
}

TEST(SampleOutcome, PointMassAndEmpiricalFrequencies) {
  Rng rng(1);
  OutcomeDistribution<double> point = OutcomeDistribution<double>::Zero(4);
  point[2] = 1.0;
  for (int i = 0; i < 100; ++i) EXPECT_EQ(sample_outcome(point, rng), 2u);
  OutcomeDistribution<double> p(4);
  p << 0.1, 0.2, 0.3, 0.4;
  std::vector<int> hits(4, 0);
  for (int i = 0; i < 100000; ++i) ++hits[sample_outcome(p, rng)];
  for (int k = 0; k < 4; ++k) EXPECT_NEAR(hits[k] / 100000.0, p[k], 0.01);
}

TEST(WinRate, ConvergesToMeanThetaAtDistanceOne) {
  const GameConfig config{Recipe::parse("H,C2,H"), BobStrategy::at_distance(1),
                          AliceStrategy::kIntervalThreshold, 10000, 42};
  const auto w = estimate_win_rate(config);
  EXPECT_LE(std::abs(w.rate - 0.765625), 3 * w.standard_error);
  EXPECT_NEAR(w.standard_error, std::sqrt(w.rate * (1 - w.rate) / 10000), 1e-15);
}

TEST(WinRate, CertainWins) {
  for (const char* text : {"H,H,H,H", "H,H,C2", "H,C2,H", "C2,H,H", "C2,C2"}) {
    const GameConfig far{Recipe::parse(text), BobStrategy::at_distance(8),
                         AliceStrategy::kIntervalThreshold, 500, 1};
    EXPECT_EQ(estimate_win_rate(far).rate, 1.0) << text;
  }
  const GameConfig spike{Recipe::parse("C2,C2"), BobStrategy::at_distance(10),
                         AliceStrategy::kIntervalThreshold, 500, 1};
  EXPECT_EQ(estimate_win_rate(spike).rate, 1.0);
}

TEST(WinRate, PivotIsNearCoinToss) {
  const GameConfig config{Recipe::parse("C2,C2"), BobStrategy::pivot(),
                          AliceStrategy::kIntervalThreshold, 10000, 7};
  const auto w = estimate_win_rate(config);
  EXPECT_LE(std::abs(w.rate - 0.5625), 3 * w.standard_error);
}

TEST(WinRate, IndependentOfWorkersAndOrderedSink) {
  const GameConfig config{Recipe::parse("C2,H,H"), BobStrategy::uniform_random(),
                          AliceStrategy::kIntervalThreshold, 300, 5};
  std::vector<std::uint64_t> rounds;
  const auto a = estimate_win_rate(config, 1);
  const auto b = estimate_win_rate(config, 3, [&](const RoundRecord& r) { rounds.push_back(r.round); });
  EXPECT_EQ(a.wins, b.wins);
  ASSERT_EQ(rounds.size(), 300u);
  for (std::uint64_t r = 0; r < 300; ++r) EXPECT_EQ(rounds[r], r);
  EXPECT_THROW(estimate_win_rate({config.recipe, config.bob, config.alice, 0, 1}), UsageError);
}

}  // namespace
}  // namespace patternq

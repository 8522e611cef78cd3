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

#include <algorithm>
#include <charconv>
#include <cmath>
#include <exception>
#include <thread>
#include <vector>

#include "patternq/experiment.hpp"

namespace patternq {

std::string_view to_string(Answer a) noexcept { return a == Answer::kYes ? "yes" : "no"; }

std::string_view to_string(AliceStrategy s) noexcept {
  switch (s) {
    case AliceStrategy::kIntervalThreshold:
      return "interval";
    case AliceStrategy::kAlwaysYes:
      return "always_yes";
    case AliceStrategy::kAlwaysNo:
      return "always_no";
  }
  return "interval";
}

AliceStrategy parse_alice_strategy(std::string_view text) {
  if (text == "interval" || text == "interval_threshold") return AliceStrategy::kIntervalThreshold;
  if (text == "always_yes" || text == "yes") return AliceStrategy::kAlwaysYes;
  if (text == "always_no" || text == "no") return AliceStrategy::kAlwaysNo;
  throw UsageError("unknown Alice strategy \"" + std::string(text) +
                   "\" (expected interval, always_yes, always_no)");
}

std::string BobStrategy::to_string() const {
  switch (kind) {
    case Kind::kAtDistance:
      return "at_distance:" + std::to_string(distance);
    case Kind::kPivot:
      return "pivot";
    case Kind::kUniformRandom:
      return "uniform";
  }
  return "uniform";
}

BobStrategy BobStrategy::parse(std::string_view text) {
  if (text == "pivot") return pivot();
  if (text == "uniform" || text == "uniform_random") return uniform_random();
  for (std::string_view prefix : {"at_distance:", "at_distance=", "at:"}) {
    if (text.starts_with(prefix)) {
      const std::string_view digits = text.substr(prefix.size());
      std::size_t d = 0;
      const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), d);
      if (ec != std::errc() || ptr != digits.data() + digits.size() || digits.empty()) {
        throw UsageError("invalid distance in Bob strategy \"" + std::string(text) + "\"");
      }
      return at_distance(d);
    }
  }
  throw UsageError("unknown Bob strategy \"" + std::string(text) +
                   "\" (expected at_distance:D, pivot, uniform)");
}

std::size_t pivot_distance(int arity) noexcept { return (std::size_t{1} << arity) / 8; }

Answer alice_interval_decide(std::size_t distance, int arity, std::optional<std::size_t> rho) {
  if (distance == 0) {
    throw UsageError("distance 0 means h is a class member, which the game excludes");
  }
  if (distance <= pivot_distance(arity)) return Answer::kYes;
  if (rho && distance == *rho) return Answer::kYes;
  return Answer::kNo;
}

namespace {

std::optional<BobPick> pick_from_probes(const PatternClass& cls, std::size_t target, Rng& rng) {
  std::vector<BobPick> matches;
  const std::size_t length = cls.length();
  auto consider = [&](std::string name, PatternVector h) {
    NearestSet nearest = distance_from_class(cls.basis(), h);
    if (nearest.distance != target) return;
    for (const auto& m : matches) {
      if (m.function == h) return;
    }
    matches.push_back(BobPick{std::move(h), std::move(nearest), "probe:" + std::move(name)});
  };
  consider("all-ones", PatternVector::ones(length));
  consider("all-zeros", PatternVector::zeros(length));
  const auto members = cls.basis().members();
  for (std::size_t k = 0; k < members.size(); ++k) {
    consider("complement-" + std::to_string(k), negate(members[k]));
  }
  if (matches.empty()) return std::nullopt;
  std::uniform_int_distribution<std::size_t> pick(0, matches.size() - 1);
  return std::move(matches[pick(rng)]);
}

PatternVector random_function(std::size_t length, Rng& rng) {
  PatternVector h(length);
  std::bernoulli_distribution coin(0.5);
  for (std::size_t i = 0; i < length; ++i) {
    if (coin(rng)) h.set(i, true);
  }
  return h;
}

}  // namespace

BobPick bob_pick(const PatternClass& cls, const BobStrategy& strategy, std::uint64_t seed) {
  Rng rng(seed);
  const std::size_t length = cls.length();
  const std::size_t half = length / 2;

  if (strategy.kind == BobStrategy::Kind::kUniformRandom) {
    for (std::uint64_t attempt = 0; attempt < kBobAttemptCap; ++attempt) {
      PatternVector h = random_function(length, rng);
      NearestSet nearest = distance_from_class(cls.basis(), h);
      if (nearest.distance > 0) return BobPick{std::move(h), std::move(nearest), "uniform"};
    }
    throw UsageError("uniform Bob drew only class members within the attempt cap");
  }

  const std::size_t target =
      strategy.kind == BobStrategy::Kind::kPivot ? pivot_distance(cls.arity()) : strategy.distance;
  if (target == 0) {
    throw UsageError("Bob cannot play at distance 0: class members are excluded (recipe " +
                     cls.recipe().to_string() + ")");
  }
  if (target > length) {
    throw UsageError("distance " + std::to_string(target) + " exceeds function length " +
                     std::to_string(length));
  }

  // Uniform flips essentially never reach distances >= 2^(n-1).
  if (target >= half) {
    if (auto p = pick_from_probes(cls, target, rng)) return std::move(*p);
  }

  std::uniform_int_distribution<std::size_t> pick_member(0, length - 1);
  const auto members = cls.basis().members();
  for (std::uint64_t attempt = 0; attempt < kBobAttemptCap; ++attempt) {
    PatternVector h = flip_random_bits(members[pick_member(rng)], target, rng);
    NearestSet nearest = distance_from_class(cls.basis(), h);
    if (nearest.distance == target) return BobPick{std::move(h), std::move(nearest), "flip"};
  }
  if (target <= half) {
    for (std::uint64_t attempt = 0; attempt < kBobAttemptCap; ++attempt) {
      PatternVector h = flip_random_bits(negate(members[pick_member(rng)]), half - target, rng);
      NearestSet nearest = distance_from_class(cls.basis(), h);
      if (nearest.distance == target) return BobPick{std::move(h), std::move(nearest), "complement-flip"};
    }
  }
  if (target < half) {
    if (auto p = pick_from_probes(cls, target, rng)) return std::move(*p);
  }
  throw UsageError("no function at distance " + std::to_string(target) + " from class " +
                   cls.recipe().to_string() + " found within the attempt cap");
}

std::size_t sample_outcome(const OutcomeDistribution<double>& probs, Rng& rng) {
  std::uniform_real_distribution<double> uniform(0.0, 1.0);
  const double u = uniform(rng);
  double cumulative = 0.0;
  std::size_t last_positive = 0;
  for (Eigen::Index k = 0; k < probs.size(); ++k) {
    if (probs[k] <= 0.0) continue;
    cumulative += probs[k];
    last_positive = static_cast<std::size_t>(k);
    if (u < cumulative) return last_positive;
  }
  return last_positive;
}

RoundRecord play_round(const PatternClass& cls, const GameConfig& config, std::uint64_t round_seed) {
  if (config.recipe != cls.recipe()) {
    throw UsageError("game recipe " + config.recipe.to_string() + " does not match class " +
                     cls.recipe().to_string());
  }
  BobPick pick = bob_pick(cls, config.bob, derive_seed(round_seed, 0));
  Rng measurement(derive_seed(round_seed, 1));
  const auto probs = outcome_distribution<double>(cls.spec(), pick.function);

  RoundRecord rec;
  rec.seed = round_seed;
  rec.distance = pick.nearest.distance;
  rec.outcome = sample_outcome(probs, measurement);
  rec.ground_truth = pick.nearest.contains(rec.outcome);
  switch (config.alice) {
    case AliceStrategy::kIntervalThreshold:
      rec.answer = alice_interval_decide(rec.distance, cls.arity(), cls.rho());
      break;
    case AliceStrategy::kAlwaysYes:
      rec.answer = Answer::kYes;
      break;
    case AliceStrategy::kAlwaysNo:
      rec.answer = Answer::kNo;
      break;
  }
  rec.winner = (rec.answer == Answer::kYes) == rec.ground_truth ? Player::kAlice : Player::kBob;
  rec.function = std::move(pick.function);
  return rec;
}

WinRate estimate_win_rate(const GameConfig& config, unsigned workers, const RoundSink& sink) {
  if (config.trials == 0) throw UsageError("trials must be positive");
  const PatternClass cls(config.recipe);
  workers = std::clamp<unsigned>(workers, 1, 64);

  std::vector<RoundRecord> records(sink ? config.trials : 0);
  std::vector<std::uint64_t> wins(workers, 0);
  std::vector<std::exception_ptr> errors(workers);
  {
    std::vector<std::jthread> threads;
    for (unsigned w = 0; w < workers; ++w) {
      const std::uint64_t begin = config.trials * w / workers;
      const std::uint64_t end = config.trials * (w + 1) / workers;
      threads.emplace_back([&, w, begin, end] {
        try {
          for (std::uint64_t r = begin; r < end; ++r) {
            RoundRecord rec = play_round(cls, config, derive_seed(config.seed, r));
            rec.round = r;
            if (rec.winner == Player::kAlice) ++wins[w];
            if (sink) records[r] = std::move(rec);
          }
        } catch (...) {
          errors[w] = std::current_exception();
        }
      });
    }
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  if (sink) {
    for (const auto& rec : records) sink(rec);
  }

  WinRate out;
  out.trials = config.trials;
  for (auto w : wins) out.wins += w;
  out.rate = static_cast<double>(out.wins) / static_cast<double>(out.trials);
  out.standard_error = std::sqrt(out.rate * (1.0 - out.rate) / static_cast<double>(out.trials));
  return out;
}

}  // namespace patternq

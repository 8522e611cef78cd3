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

#include "patternq/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <mutex>
#include <set>
#include <stdexcept>
#include <thread>

namespace patternq {

std::string_view to_string(ProfileMode mode) noexcept {
  return mode == ProfileMode::kExhaustive ? "exhaustive" : "sampled";
}

ProfileMode parse_profile_mode(std::string_view text) {
  if (text == "exhaustive") return ProfileMode::kExhaustive;
  if (text == "sampled") return ProfileMode::kSampled;
  throw UsageError("unknown profile mode \"" + std::string(text) + "\"");
}

DistanceProfile::DistanceProfile(Recipe recipe, ProfileMode mode, std::uint64_t seed, Quotas quotas)
    : recipe_(std::move(recipe)), mode_(mode), seed_(seed), quotas_(std::move(quotas)) {
  require_buildable(recipe_);
  quantum_ = std::ldexp(1.0, -2 * recipe_.total_rank());
  buckets_.resize(recipe_.length() + 1);
}

std::optional<double> DistanceProfile::mean_theta(std::size_t distance) const {
  const DistanceBucket& b = buckets_.at(distance);
  if (b.count == 0) return std::nullopt;
  return static_cast<double>(b.theta_quanta) * quantum_ / static_cast<double>(b.count);
}

std::uint64_t DistanceProfile::total_count() const noexcept {
  std::uint64_t total = 0;
  for (const auto& b : buckets_) total += b.count;
  return total;
}

void DistanceProfile::add(std::size_t distance, double theta) {
  DistanceBucket& b = buckets_.at(distance);
  const double scaled = theta / quantum_;
  const double quanta = std::round(scaled);
  if (!(std::abs(scaled - quanta) <= 1e-6) || quanta < 0) {
    throw std::logic_error("threshold " + std::to_string(theta) +
                           " is not a multiple of the probability quantum");
  }
  const double snapped = quanta * quantum_;
  if (b.count == 0) {
    b.min_theta = snapped;
    b.max_theta = snapped;
  } else {
    b.min_theta = std::min(b.min_theta, snapped);
    b.max_theta = std::max(b.max_theta, snapped);
  }
  ++b.count;
  b.theta_quanta += static_cast<std::uint64_t>(quanta);
}

void DistanceProfile::merge(const DistanceProfile& other) {
  if (other.recipe_ != recipe_ || other.mode_ != mode_) {
    throw UsageError("cannot merge profiles of " + recipe_.to_string() + "/" +
                     std::string(to_string(mode_)) + " and " + other.recipe_.to_string() + "/" +
                     std::string(to_string(other.mode_)));
  }
  for (std::size_t d = 0; d < buckets_.size(); ++d) {
    DistanceBucket& mine = buckets_[d];
    const DistanceBucket& theirs = other.buckets_[d];
    if (theirs.count > 0) {
      if (mine.count == 0) {
        mine.min_theta = theirs.min_theta;
        mine.max_theta = theirs.max_theta;
      } else {
        mine.min_theta = std::min(mine.min_theta, theirs.min_theta);
        mine.max_theta = std::max(mine.max_theta, theirs.max_theta);
      }
    }
    mine.count += theirs.count;
    mine.theta_quanta += theirs.theta_quanta;
    mine.starved = mine.starved || theirs.starved;
  }
  probe_count_ += other.probe_count_;
}

DistanceProfile merge_profiles(const DistanceProfile& a, const DistanceProfile& b) {
  DistanceProfile out = a;
  out.merge(b);
  return out;
}

DistanceProfile exhaustive_shard(const PatternClass& cls, std::uint64_t begin, std::uint64_t end) {
  DistanceProfile profile(cls.recipe(), ProfileMode::kExhaustive);
  const std::size_t length = cls.length();
  for (std::uint64_t x = begin; x < end; ++x) {
    const ThresholdReport r = cls.threshold(PatternVector::from_word(x, length));
    profile.add(r.nearest.distance, r.theta);
  }
  return profile;
}

DistanceProfile exhaustive_profile(const Recipe& recipe, const ProgressSink& progress, unsigned workers) {
  require_buildable(recipe);
  if (recipe.total_rank() > kMaxExhaustiveRank) {
    throw UsageError("exhaustive enumeration is limited to rank " +
                     std::to_string(kMaxExhaustiveRank) + " (length 16); recipe " +
                     recipe.to_string() + " has rank " + std::to_string(recipe.total_rank()) +
                     ", use sampled mode");
  }
  const PatternClass cls(recipe);
  const std::uint64_t total = std::uint64_t{1} << cls.length();
  workers = std::clamp<unsigned>(workers, 1, 64);

  constexpr std::uint64_t kChunk = 4096;
  std::atomic<std::uint64_t> done{0};
  std::mutex progress_mutex;
  auto run_range = [&](std::uint64_t begin, std::uint64_t end) {
    DistanceProfile local(recipe, ProfileMode::kExhaustive);
    for (std::uint64_t lo = begin; lo < end; lo += kChunk) {
      const std::uint64_t hi = std::min(end, lo + kChunk);
      local.merge(exhaustive_shard(cls, lo, hi));
      const std::uint64_t now = done.fetch_add(hi - lo) + (hi - lo);
      if (progress) {
        std::lock_guard lock(progress_mutex);
        progress(now, total);
      }
    }
    return local;
  };

  std::vector<DistanceProfile> partial(workers, DistanceProfile(recipe, ProfileMode::kExhaustive));
  std::vector<std::exception_ptr> errors(workers);
  {
    std::vector<std::jthread> threads;
    for (unsigned w = 0; w < workers; ++w) {
      const std::uint64_t begin = total * w / workers;
      const std::uint64_t end = total * (w + 1) / workers;
      threads.emplace_back([&, w, begin, end] {
        try {
          partial[w] = run_range(begin, end);
        } catch (...) {
          errors[w] = std::current_exception();
        }
      });
    }
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  DistanceProfile out(recipe, ProfileMode::kExhaustive);
  for (const auto& p : partial) out.merge(p);
  return out;
}

Quotas uniform_quotas(std::size_t first, std::size_t last, std::uint64_t per_distance) {
  Quotas q;
  for (std::size_t d = first; d <= last; ++d) q[d] = per_distance;
  return q;
}

DistanceProfile stratified_sample_profile(const Recipe& recipe, const Quotas& quotas,
                                          std::uint64_t seed, const SamplerOptions& options) {
  require_buildable(recipe);
  if (recipe.total_rank() < 5) {
    throw UsageError("stratified sampling is for ranks 5 and 6; recipe " + recipe.to_string() +
                     " has rank " + std::to_string(recipe.total_rank()) +
                     ", use exhaustive mode");
  }
  const PatternClass cls(recipe);
  const std::size_t length = cls.length();
  const std::size_t half = length / 2;
  for (const auto& [d, q] : quotas) {
    if (d < 1 || d > half) {
      throw UsageError("quota distance " + std::to_string(d) + " outside [1, " +
                       std::to_string(half) + "]");
    }
  }

  DistanceProfile profile(recipe, ProfileMode::kSampled, seed, quotas);
  Rng rng(seed);
  std::uniform_int_distribution<std::size_t> pick_member(0, length - 1);
  const auto members = cls.basis().members();

  auto credit = [&](const PatternVector& h) {
    const ThresholdReport r = cls.threshold(h);
    profile.add(r.nearest.distance, r.theta);
  };

  for (const auto& [d, quota] : quotas) {
    const std::uint64_t cap = options.attempt_factor * quota;
    for (std::uint64_t attempt = 0; profile.bucket(d).count < quota && attempt < cap; ++attempt) {
      credit(flip_random_bits(members[pick_member(rng)], d, rng));
    }
    if (options.complement_fallback) {
      for (std::uint64_t attempt = 0; profile.bucket(d).count < quota && attempt < cap; ++attempt) {
        credit(flip_random_bits(negate(members[pick_member(rng)]), half - d, rng));
      }
    }
    if (profile.bucket(d).count < quota) profile.mark_starved(d);
  }
  return profile;
}

std::vector<Probe> probe_suite(const PatternClass& cls) {
  std::vector<Probe> probes;
  const std::size_t length = cls.length();
  auto push = [&](std::string name, PatternVector h) {
    ThresholdReport r = cls.threshold(h);
    probes.push_back(Probe{std::move(name), std::move(h), std::move(r)});
  };
  push("all-ones", PatternVector::ones(length));
  push("all-zeros", PatternVector::zeros(length));
  const auto members = cls.basis().members();
  for (std::size_t k = 0; k < members.size(); ++k) {
    push("complement-" + std::to_string(k), negate(members[k]));
  }
  return probes;
}

void add_probes(DistanceProfile& profile, std::span<const Probe> probes) {
  std::set<std::string> seen;
  for (const Probe& p : probes) {
    if (!seen.insert(p.function.to_string()).second) continue;
    profile.add(p.report.nearest.distance, p.report.theta);
    profile.note_probe();
  }
}

bool IntervalSummary::consistent() const noexcept {
  return std::all_of(regions.begin(), regions.end(),
                     [](const IntervalRegion& r) { return r.consistent(); });
}

IntervalSummary interval_summary(const DistanceProfile& profile, std::optional<std::size_t> rho) {
  const std::size_t length = profile.max_distance();
  IntervalSummary s;
  s.regions[0] = {1, 1, length / 8, "0.5 < mean < 1", {}, {}};
  s.regions[1] = {2, length / 8 + 1, length / 2 - 1, "0 < mean < 0.5", {}, {}};
  s.regions[2] = {3, length / 2, length, "mean = 0 (rho spike: mean = 1)", {}, {}};

  std::optional<double> previous;
  for (std::size_t d = 1; d <= length; ++d) {
    const auto mean = profile.mean_theta(d);
    if (!mean) continue;
    if (previous && *mean > *previous + 1e-12) s.monotonicity_breaks.push_back(d);
    previous = mean;

    for (IntervalRegion& region : s.regions) {
      if (d < region.first || d > region.last) continue;
      region.populated.push_back(d);
      bool ok = true;
      switch (region.id) {
        case 1:
          ok = *mean > 0.5;
          break;
        case 2:
          ok = *mean > kZeroTheta && *mean < 0.5;
          break;
        default:
          if (rho && d == *rho) {
            ok = *mean >= 1.0 - kZeroTheta;
          } else {
            ok = *mean <= kZeroTheta;
          }
      }
      if (!ok) region.offending.push_back(d);
    }
    if (rho && d == *rho) s.spike = RhoSpike{*rho, *mean};
  }
  return s;
}

}  // namespace patternq

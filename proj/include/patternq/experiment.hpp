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

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "patternq/pattern_class.hpp"
#include "patternq/recipe.hpp"

namespace patternq {

enum class ProfileMode { kExhaustive, kSampled };

std::string_view to_string(ProfileMode mode) noexcept;
ProfileMode parse_profile_mode(std::string_view text);

/// Requested sample count per target distance.
using Quotas = std::map<std::size_t, std::uint64_t>;

/// Aggregate of classification thresholds at one exact class distance.
///
/// Thresholds are accumulated as integer multiples of 4^-n. Every outcome
/// probability of an n-bit classifier on a +-1 phase state is k / 4^n for an
/// integer k, so the sum is exact and shard merges are bit-identical.
struct DistanceBucket {
  std::uint64_t count = 0;
  std::uint64_t theta_quanta = 0;
  double min_theta = 0.0;
  double max_theta = 0.0;
  /// Sampled mode: quota not reached within the attempt cap.
  bool starved = false;

  friend bool operator==(const DistanceBucket&, const DistanceBucket&) = default;
};

class DistanceProfile {
 public:
  DistanceProfile(Recipe recipe, ProfileMode mode, std::uint64_t seed = 0, Quotas quotas = {});

  const Recipe& recipe() const noexcept { return recipe_; }
  ProfileMode mode() const noexcept { return mode_; }
  std::uint64_t seed() const noexcept { return seed_; }
  const Quotas& quotas() const noexcept { return quotas_; }
  int arity() const noexcept { return recipe_.total_rank(); }
  /// Largest possible distance, 2^n.
  std::size_t max_distance() const noexcept { return buckets_.size() - 1; }
  /// Probability resolution 4^-n.
  double quantum() const noexcept { return quantum_; }

  std::span<const DistanceBucket> buckets() const noexcept { return buckets_; }
  const DistanceBucket& bucket(std::size_t distance) const { return buckets_.at(distance); }
  std::optional<double> mean_theta(std::size_t distance) const;
  std::uint64_t total_count() const noexcept;
  bool empty() const noexcept { return total_count() == 0; }

  std::uint64_t probe_count() const noexcept { return probe_count_; }

  void add(std::size_t distance, double theta);
  void mark_starved(std::size_t distance) { buckets_.at(distance).starved = true; }
  /// Bulk setters for deserialization.
  void set_bucket(std::size_t distance, const DistanceBucket& bucket) { buckets_.at(distance) = bucket; }
  void set_probe_count(std::uint64_t n) noexcept { probe_count_ = n; }
  void note_probe() noexcept { ++probe_count_; }

  /// Bucket-wise sums; metadata is taken from *this.
  void merge(const DistanceProfile& other);

  friend bool operator==(const DistanceProfile&, const DistanceProfile&) = default;

 private:
  Recipe recipe_;
  ProfileMode mode_;
  std::uint64_t seed_;
  Quotas quotas_;
  double quantum_;
  std::uint64_t probe_count_ = 0;
  std::vector<DistanceBucket> buckets_;
};

/// Requires equal recipe and mode; throws UsageError otherwise.
DistanceProfile merge_profiles(const DistanceProfile& a, const DistanceProfile& b);

/// Called with (functions done, total). May be invoked from worker threads,
/// serialized by the caller.
using ProgressSink = std::function<void(std::uint64_t, std::uint64_t)>;

/// Largest rank accepted by exhaustive_profile (length 16, 65536 functions).
inline constexpr int kMaxExhaustiveRank = 4;

/// Classifies every function of length 2^n. Output does not depend on
/// `workers`.
DistanceProfile exhaustive_profile(const Recipe& recipe, const ProgressSink& progress = {},
                                   unsigned workers = 1);

/// Classifies the functions whose truth-table words lie in [begin, end).
DistanceProfile exhaustive_shard(const PatternClass& cls, std::uint64_t begin, std::uint64_t end);

struct SamplerOptions {
  /// Attempts allowed per bucket and per route, as a multiple of its quota.
  std::uint64_t attempt_factor = 50;
  /// After the member route starves, seed flips from member complements.
  bool complement_fallback = true;
};

/// Stratified flip sampling for ranks 5 and 6.
///
/// For each target d: draw a random member, flip a random d-subset, and
/// credit the sample to its true class distance. If the bucket is still
/// short after the attempt cap, draw a random member complement and flip
/// 2^(n-1) - d bits instead. Buckets still short are flagged `starved`.
DistanceProfile stratified_sample_profile(const Recipe& recipe, const Quotas& quotas,
                                          std::uint64_t seed, const SamplerOptions& options = {});

/// The same quota for every distance in [first, last].
Quotas uniform_quotas(std::size_t first, std::size_t last, std::uint64_t per_distance);

struct Probe {
  std::string name;
  PatternVector function;
  ThresholdReport report;
};

/// All-ones, all-zeros, and the complement of every member.
std::vector<Probe> probe_suite(const PatternClass& cls);

/// Credits each distinct probe function to `profile`.
void add_probes(DistanceProfile& profile, std::span<const Probe> probes);

/// Distance regions: [1, 2^n/8], [2^n/8 + 1, 2^n/2 - 1], [2^n/2, 2^n].
struct IntervalRegion {
  int id = 0;
  std::size_t first = 0;
  std::size_t last = 0;
  std::string expectation;
  std::vector<std::size_t> populated;
  std::vector<std::size_t> offending;

  bool empty() const noexcept { return first > last; }
  bool consistent() const noexcept { return offending.empty(); }
};

struct RhoSpike {
  std::size_t rho = 0;
  double mean_theta = 0.0;
};

struct IntervalSummary {
  std::array<IntervalRegion, 3> regions;
  std::optional<RhoSpike> spike;
  /// Distances whose mean exceeds the mean at the previous populated
  /// distance. Informational only.
  std::vector<std::size_t> monotonicity_breaks;

  bool consistent() const noexcept;
};

/// Zero tolerance used by region checks.
inline constexpr double kZeroTheta = 1e-9;

IntervalSummary interval_summary(const DistanceProfile& profile, std::optional<std::size_t> rho);

}  // namespace patternq

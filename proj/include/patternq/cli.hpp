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

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "patternq/experiment.hpp"

namespace patternq {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitTableMismatch = 2;

/// Environment variable that replaces the built-in default seed.
inline constexpr const char* kSeedEnv = "PATTERNQ_SEED";
inline constexpr std::uint64_t kDefaultSeed = 42;

/// Default seed after applying PATTERNQ_SEED. Throws UsageError when the
/// variable is set but not an unsigned integer.
std::uint64_t default_seed();

/// Parses "d=count" or "first-last=count" into `quotas`.
void parse_quota(std::string_view text, Quotas& quotas);

/// Runs one command line. `args` excludes the program name.
int cli_dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace patternq

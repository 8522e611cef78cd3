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

#include "patternq/neighborhood.hpp"

#include <gtest/gtest.h>

#include <set>

namespace patternq {
namespace {

std::vector<std::string> texts(const std::vector<PatternVector>& vs) {
  std::vector<std::string> out;
  for (const auto& v : vs) out.push_back(v.to_string());
  return out;
}

TEST(Neighborhood, RadiusZeroIsCenter) {
  EXPECT_EQ(texts(enumerate_neighborhood(PatternVector::parse("0001"), 0)),
            std::vector<std::string>{"0001"});
}

TEST(Neighborhood, OrderIsDistanceThenLexicographic) {
  EXPECT_EQ(texts(enumerate_neighborhood(PatternVector::parse("00"), 1)),
            (std::vector<std::string>{"00", "01", "10"}));
  EXPECT_EQ(texts(enumerate_neighborhood(PatternVector::parse("0000"), 2)),
            (std::vector<std::string>{"0000", "0001", "0010", "0100", "1000", "0011", "0101", "1001",
                                      "0110", "1010", "1100"}));
}

TEST(Neighborhood, CountMatchesBinomialSum) {
  EXPECT_EQ(NeighborhoodEnumerator::count(8, 2), 37u);
  const auto all = enumerate_neighborhood(PatternVector::parse("01101001"), 2);
  EXPECT_EQ(all.size(), 37u);
  std::set<std::string> unique;
  for (const auto& v : all) {
    EXPECT_LE(hamming_distance(v, PatternVector::parse("01101001")), 2u);
    unique.insert(v.to_string());
  }
  EXPECT_EQ(unique.size(), all.size());
}

TEST(Neighborhood, FullRadiusCoversEverything) {
  EXPECT_EQ(enumerate_neighborhood(PatternVector(8), 8).size(), 256u);
  EXPECT_EQ(NeighborhoodEnumerator::count(16, 16), 65536u);
}

TEST(Neighborhood, RadiusBeyondLengthIsUsageError) {
  EXPECT_THROW(NeighborhoodEnumerator(PatternVector(4), 5), UsageError);
}

TEST(Neighborhood, StreamsLazily) {
  NeighborhoodEnumerator it(PatternVector(64), 3);
  std::size_t n = 0;
  while (it.next()) ++n;
  EXPECT_EQ(n, NeighborhoodEnumerator::count(64, 3));
  EXPECT_FALSE(it.next());
}

}  // namespace
}  // namespace patternq

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

#include "patternq/pattern_vector.hpp"

#include <gtest/gtest.h>

#include <random>
#include <sstream>

#include "oracle.hpp"

namespace patternq {
namespace {

PatternVector random_vector(std::size_t length, std::mt19937_64& rng) {
  PatternVector v(length);
  for (std::size_t i = 0; i < length; ++i) v.set(i, rng() & 1U);
  return v;
}

TEST(PatternVector, ParseIsMsbFirst) {
  const auto v = PatternVector::parse("0001");
  EXPECT_EQ(v.size(), 4u);
  EXPECT_EQ(v.arity(), 2);
  EXPECT_TRUE(v[0]);
  EXPECT_FALSE(v[3]);
  EXPECT_EQ(v.to_string(), "0001");
}

TEST(PatternVector, ParseIgnoresSeparators) {
  EXPECT_EQ(PatternVector::parse("1000_1000 1000\t0111"), PatternVector::parse("1000100010000111"));
}

TEST(PatternVector, ParseRejectsBadInput) {
  EXPECT_THROW(PatternVector::parse("012"), UsageError);
  EXPECT_THROW(PatternVector::parse("101"), UsageError);
  EXPECT_THROW(PatternVector::parse(""), UsageError);
  EXPECT_THROW(PatternVector::parse("1"), UsageError);
}

TEST(PatternVector, LengthMustBePowerOfTwo) {
  EXPECT_THROW(PatternVector(0), UsageError);
  EXPECT_THROW(PatternVector(1), UsageError);
  EXPECT_THROW(PatternVector(12), UsageError);
  EXPECT_NO_THROW(PatternVector(128));
  EXPECT_TRUE(is_pattern_length(64));
  EXPECT_FALSE(is_pattern_length(48));
}

TEST(PatternVector, RoundTripTextAcrossWordBoundary) {
  std::mt19937_64 rng(7);
  for (std::size_t len : {2u, 4u, 64u, 128u, 256u}) {
    const auto v = random_vector(len, rng);
    EXPECT_EQ(PatternVector::parse(v.to_string()), v);
  }
}

TEST(PatternVector, FromWordAndOnes) {
  EXPECT_EQ(PatternVector::from_word(0b1000, 4).to_string(), "1000");
  EXPECT_EQ(PatternVector::ones(8).to_string(), "11111111");
  EXPECT_EQ(PatternVector::ones(128).count_ones(), 128u);
  EXPECT_EQ(PatternVector::ones(8).count_zeros(), 0u);
  EXPECT_THROW(PatternVector::from_word(1, 128), UsageError);
}

TEST(PatternVector, BitAccessIsRangeChecked) {
  PatternVector v(4);
  EXPECT_THROW(v.bit(4), UsageError);
  EXPECT_THROW(v.set(4, true), UsageError);
  EXPECT_THROW(v.flip(4), UsageError);
  v.flip(2);
  EXPECT_EQ(v.to_string(), "0100");
}

TEST(PatternVector, StreamOperator) {
  std::ostringstream os;
  os << PatternVector::parse("0110");
  EXPECT_EQ(os.str(), "0110");
}

TEST(Hamming, Examples) {
  EXPECT_EQ(hamming_distance(PatternVector::parse("0001"), PatternVector::parse("0010")), 2u);
  EXPECT_EQ(hamming_distance(PatternVector::parse("0001000100011110"),
                             PatternVector::parse("0000000100011110")),
            1u);
  EXPECT_EQ(hamming_distance(PatternVector::parse("00"), PatternVector::parse("00")), 0u);
}

TEST(Hamming, LengthMismatchNamesBothLengths) {
  try {
    hamming_distance(PatternVector(4), PatternVector(8));
    FAIL() << "expected UsageError";
  } catch (const UsageError& e) {
    const std::string what = e.what();
    EXPECT_NE(what.find('4'), std::string::npos);
    EXPECT_NE(what.find('8'), std::string::npos);
  }
}

TEST(Hamming, MetricAxiomsOnRandomTriples) {
  std::mt19937_64 rng(1);
  const std::size_t lengths[] = {8, 16, 32, 64};
  for (int c = 0; c < 1000; ++c) {
    const std::size_t len = lengths[c % 4];
    const auto a = random_vector(len, rng), b = random_vector(len, rng), x = random_vector(len, rng);
    EXPECT_EQ(hamming_distance(a, a), 0u);
    EXPECT_EQ(hamming_distance(a, b), hamming_distance(b, a));
    EXPECT_LE(hamming_distance(a, x), hamming_distance(a, b) + hamming_distance(b, x));
    EXPECT_EQ(hamming_distance(a, b) == 0, a == b);
    EXPECT_EQ(hamming_distance(a, b), oracle::distance(a.to_string(), b.to_string()));
  }
}

TEST(Negate, ExampleAndInvolution) {
  EXPECT_EQ(negate(PatternVector::parse("0001")).to_string(), "1110");
  std::mt19937_64 rng(2);
  for (int c = 0; c < 1000; ++c) {
    const std::size_t len = std::size_t{1} << (1 + c % 7);
    const auto a = random_vector(len, rng), b = random_vector(len, rng);
    EXPECT_EQ(negate(negate(a)), a);
    EXPECT_EQ(hamming_distance(negate(a), negate(b)), hamming_distance(a, b));
    EXPECT_EQ(hamming_distance(a, negate(a)), len);
  }
}

TEST(PatternProduct, TableExamples) {
  EXPECT_EQ(pattern_product(PatternVector::parse("0001"), PatternVector::parse("1000")).to_string(),
            "1000100010000111");
  EXPECT_EQ(pattern_product(PatternVector::parse("0001"), PatternVector::parse("0001")).to_string(),
            "0001000100011110");
}

TEST(PatternProduct, ZeroSelectorCopies) {
  const auto q = PatternVector::parse("01101001");
  EXPECT_EQ(pattern_product(PatternVector::parse("00"), q).to_string(), q.to_string() + q.to_string());
}

TEST(PatternProduct, BitLawExhaustiveUpTo16) {
  for (std::size_t lp : {2u, 4u, 8u, 16u}) {
    for (std::size_t lq : {2u, 4u, 8u, 16u}) {
      std::mt19937_64 rng(lp * 100 + lq);
      for (int rep = 0; rep < 8; ++rep) {
        const auto p = random_vector(lp, rng), q = random_vector(lq, rng);
        const auto r = pattern_product(p, q);
        ASSERT_EQ(r.size(), lp * lq);
        for (std::size_t i = 0; i < lp; ++i) {
          for (std::size_t j = 0; j < lq; ++j) EXPECT_EQ(r[j + i * lq], p[i] != q[j]);
        }
        EXPECT_EQ(r.to_string(), oracle::product(p.to_string(), q.to_string()));
      }
    }
  }
}

TEST(ExtendedProduct, Examples) {
  const auto p = PatternVector::parse("0001"), q = PatternVector::parse("1000");
  // Index 15 is the leftmost printed bit of 1000100010000111.
  const std::string r3 = oracle::product("0001", "1000");
  ASSERT_EQ(r3, "1000100010000111");
  EXPECT_EQ(extended_product_eval(p, q, 15), oracle::bit(r3, 15) == '1');
  EXPECT_TRUE(extended_product_eval(p, q, 15));
  EXPECT_FALSE(extended_product_eval(p, q, 3));
  const auto zero = PatternVector::parse("00");
  const auto g = PatternVector::parse("0110");
  for (std::size_t j = 0; j < g.size(); ++j) EXPECT_EQ(extended_product_eval(zero, g, j), g[j]);
  EXPECT_THROW(extended_product_eval(p, q, 16), UsageError);
}

TEST(ExtendedProduct, ClosedFormOnRandomTriples) {
  std::mt19937_64 rng(3);
  for (int c = 0; c < 1000; ++c) {
    const auto p = random_vector(std::size_t{1} << (1 + rng() % 4), rng);
    const auto q = random_vector(std::size_t{1} << (1 + rng() % 4), rng);
    const std::size_t i = rng() % p.size(), j = rng() % q.size();
    EXPECT_FALSE(extended_product_eval(p, q, i * q.size() + j) != p[i] != q[j]);
  }
}

TEST(ExtendedProduct, AgreesWithPatternProductEverywhere) {
  std::mt19937_64 rng(4);
  for (int c = 0; c < 1000; ++c) {
    const auto p = random_vector(std::size_t{1} << (1 + rng() % 3), rng);
    const auto q = random_vector(std::size_t{1} << (1 + rng() % 3), rng);
    const auto r = pattern_product(p, q);
    for (std::size_t k = 0; k < r.size(); ++k) ASSERT_EQ(extended_product_eval(p, q, k), r[k]);
  }
}

}  // namespace
}  // namespace patternq

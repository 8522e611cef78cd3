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

#include "patternq/pattern_basis.hpp"

#include <gtest/gtest.h>

#include "oracle.hpp"
#include "patternq/recipe.hpp"

namespace patternq {
namespace {

std::vector<PatternVector> parse_all(std::initializer_list<const char*> texts) {
  std::vector<PatternVector> out;
  for (const char* t : texts) out.push_back(PatternVector::parse(t));
  return out;
}

std::vector<std::string> gate_names(const Recipe& r) {
  std::vector<std::string> out;
  for (Factor f : r.factors()) out.emplace_back(gate_name(f));
  return out;
}

TEST(Recipe, ParseAndPrint) {
  const Recipe r = Recipe::parse(" h, C2 ,q2,B1");
  EXPECT_EQ(r.to_string(), "H,C2,C2,H");
  EXPECT_EQ(r.total_rank(), 6);
  EXPECT_EQ(r.length(), 64u);
  EXPECT_THROW(Recipe::parse("H,X"), UsageError);
  EXPECT_THROW(Recipe::parse("H,,H"), UsageError);
  EXPECT_THROW(require_buildable(Recipe{}), UsageError);
  EXPECT_THROW(require_buildable(Recipe::parse("C2,C2,C2,H")), UsageError);
}

TEST(Recipe, EnumeratesCompositions) {
  // Compositions of r into parts 1 and 2 follow the Fibonacci numbers.
  const std::size_t expected[] = {0, 1, 2, 3, 5, 8, 13};
  for (int r = 1; r <= 6; ++r) EXPECT_EQ(recipes_of_rank(r).size(), expected[r]);
  EXPECT_EQ(recipes_up_to_rank().size(), 32u);
}

TEST(BuiltinBasis, Members) {
  const auto b1 = builtin_basis(Factor::kB1);
  EXPECT_EQ(b1.rank(), 1);
  EXPECT_EQ(b1[0].to_string(), "00");
  EXPECT_EQ(b1[1].to_string(), "01");
  const auto q2 = builtin_basis(Factor::kQ2);
  EXPECT_EQ(q2.rank(), 2);
  const char* want[] = {"0001", "0010", "0100", "1000"};
  for (int k = 0; k < 4; ++k) EXPECT_EQ(q2[k].to_string(), want[k]);
  EXPECT_FALSE(validate_basis(q2.members()));
}

TEST(ValidateBasis, AcceptsB1) { EXPECT_FALSE(validate_basis(parse_all({"00", "01"}))); }

TEST(ValidateBasis, RejectsNonOrthogonalPair) {
  const auto v = validate_basis(parse_all({"00", "11"}));
  ASSERT_TRUE(v);
  EXPECT_EQ(v->kind, BasisViolation::Kind::kOrthogonality);
  EXPECT_EQ(v->xor_weight, 2u);
  EXPECT_EQ(v->expected_weight, 1u);
}

TEST(ValidateBasis, ReportsFirstOffendingPair) {
  const auto v = validate_basis(parse_all({"0001", "0010", "0100", "1110"}));
  ASSERT_TRUE(v);
  EXPECT_EQ(v->first, 0u);
  EXPECT_EQ(v->second, 3u);
  EXPECT_EQ(v->xor_weight, 4u);
}

TEST(ValidateBasis, ShapeAndEmpty) {
  EXPECT_EQ(validate_basis({})->kind, BasisViolation::Kind::kEmpty);
  EXPECT_EQ(validate_basis(parse_all({"0001", "0010"}))->kind, BasisViolation::Kind::kShape);
  EXPECT_EQ(validate_basis(parse_all({"0001", "10"}))->kind, BasisViolation::Kind::kShape);
}

TEST(PatternBasis, ConstructorValidates) {
  EXPECT_THROW(PatternBasis(Recipe::parse("H"), parse_all({"00", "11"})), UsageError);
  EXPECT_THROW(PatternBasis(Recipe::parse("C2"), parse_all({"00", "01"})), UsageError);
}

TEST(BasisProduct, Q2Q2MatchesReferenceTable) {
  const auto q4 = basis_product(builtin_basis(Factor::kQ2), builtin_basis(Factor::kQ2));
  const char* rows[] = {"0001000100011110", "0010001000101101", "0100010001001011", "1000100010000111",
                        "0001000111100001", "0010001011010010", "0100010010110100", "1000100001111000",
                        "0001111000010001", "0010110100100010", "0100101101000100", "1000011110001000",
                        "1110000100010001", "1101001000100010", "1011010001000100", "0111100010001000"};
  ASSERT_EQ(q4.size(), 16u);
  for (int k = 0; k < 16; ++k) EXPECT_EQ(q4[k].to_string(), rows[k]) << "member " << k;
  EXPECT_EQ(q4.recipe().to_string(), "C2,C2");
}

TEST(BasisProduct, B1B1ByHand) {
  const auto b = basis_product(builtin_basis(Factor::kB1), builtin_basis(Factor::kB1));
  const char* want[] = {"0000", "0101", "0011", "0110"};
  for (int k = 0; k < 4; ++k) EXPECT_EQ(b[k].to_string(), want[k]);
}

TEST(BuildBasis, ShapesAndSingleFactor) {
  const auto b = build_basis(Recipe::parse("H,C2"));
  EXPECT_EQ(b.rank(), 3);
  EXPECT_EQ(b.size(), 8u);
  EXPECT_EQ(b[0].size(), 8u);
  EXPECT_FALSE(validate_basis(b.members()));
  EXPECT_EQ(build_basis(Recipe::parse("C2,C2,C2")).size(), 64u);
  EXPECT_EQ(build_basis(Recipe::parse("H")).members()[1].to_string(), "01");
  EXPECT_THROW(build_basis(Recipe{}), UsageError);
}

TEST(BuildBasis, AllRecipesOrthogonalAndMatchOracle) {
  for (const Recipe& r : recipes_up_to_rank()) {
    const auto b = build_basis(r);
    ASSERT_FALSE(validate_basis(b.members())) << r.to_string();
    const auto ref = oracle::basis(gate_names(r));
    ASSERT_EQ(ref.size(), b.size());
    for (std::size_t k = 0; k < b.size(); ++k) {
      EXPECT_EQ(b[k].to_string(), ref[k]) << r.to_string() << " member " << k;
      for (std::size_t l = k + 1; l < b.size(); ++l) {
        EXPECT_EQ(hamming_distance(b[k], b[l]), b.size() / 2);
      }
    }
  }
}

TEST(BasisSerialize, RecipeLineThenMembers) {
  EXPECT_EQ(builtin_basis(Factor::kQ2).serialize(), "C2\n0001\n0010\n0100\n1000\n");
}

TEST(DistanceFromClass, Examples) {
  const auto q4 = build_basis(Recipe::parse("C2,C2"));
  const auto n = distance_from_class(q4, PatternVector::parse("0000000100011110"));
  EXPECT_EQ(n.distance, 1u);
  EXPECT_EQ(n.indices, std::vector<std::size_t>{0});
  EXPECT_TRUE(n.contains(0));
  EXPECT_FALSE(n.contains(1));

  const auto all = distance_from_class(builtin_basis(Factor::kQ2), PatternVector::parse("1111"));
  EXPECT_EQ(all.distance, 3u);
  EXPECT_EQ(all.indices, (std::vector<std::size_t>{0, 1, 2, 3}));

  for (std::size_t k = 0; k < q4.size(); ++k) {
    const auto self = distance_from_class(q4, q4[k]);
    EXPECT_EQ(self.distance, 0u);
    EXPECT_EQ(self.indices, std::vector<std::size_t>{k});
  }
  EXPECT_THROW(distance_from_class(q4, PatternVector(8)), UsageError);
}

TEST(ClassRho, RecurrenceAndNonUniform) {
  for (int m = 1; m <= 3; ++m) {
    std::string text = "C2";
    for (int k = 1; k < m; ++k) text += ",C2";
    EXPECT_EQ(class_rho(build_basis(Recipe::parse(text))), oracle::rho_recurrence(m));
  }
  EXPECT_EQ(oracle::rho_recurrence(2), 10u);
  EXPECT_EQ(oracle::rho_recurrence(3), 36u);
  EXPECT_FALSE(class_rho(builtin_basis(Factor::kB1)));
}

}  // namespace
}  // namespace patternq

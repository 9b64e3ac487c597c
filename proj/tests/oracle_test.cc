// Copyright 2026 The vogankm Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Sanity checks for the test-only reference implementations.

#include "oracle.h"

#include <gtest/gtest.h>

#include "test_util.h"

namespace {

using vogankm::testing::M;

TEST(OracleTest, CofactorDeterminantOfPaths) {
  for (int n = 1; n <= 7; ++n) {
    oracle::IntMatrix m(n, std::vector<long long>(n, 0));
    for (int i = 0; i < n; ++i) {
      m[i][i] = 2;
      if (i + 1 < n) m[i][i + 1] = m[i + 1][i] = -1;
    }
    EXPECT_EQ(oracle::CofactorDeterminant(m), n + 1);
  }
  EXPECT_EQ(oracle::CofactorDeterminant({{0, 1}, {1, 0}}), -1);
}

TEST(OracleTest, BruteSymmetrizer) {
  EXPECT_EQ(oracle::BruteSymmetrizer(M({{2, -2}, {-1, 2}})),
            (std::vector<long long>{1, 2}));
  EXPECT_FALSE(
      oracle::BruteSymmetrizer(M({{2, -2, -1}, {-1, 2, -1}, {-1, -1, 2}})));
}

TEST(OracleTest, MinorClassification) {
  EXPECT_EQ(oracle::ClassifyByAllMinors(M({{2, -1}, {-1, 2}})),
            oracle::Kind::kFinite);
  EXPECT_EQ(oracle::ClassifyByAllMinors(M({{2, -2}, {-2, 2}})),
            oracle::Kind::kAffine);
  EXPECT_EQ(oracle::ClassifyByAllMinors(M({{2, -3}, {-3, 2}})),
            oracle::Kind::kIndefinite);
  EXPECT_TRUE(oracle::IsHyperbolicBySubsets(M({{2, -3}, {-3, 2}})));
  EXPECT_FALSE(oracle::IsHyperbolicBySubsets(M({{2, -2}, {-2, 2}})));
}

TEST(OracleTest, BruteAutomorphismsOfPath) {
  EXPECT_EQ(oracle::BruteAutomorphisms(vogankm::testing::PathA(3)),
            (std::vector<std::vector<int>>{{0, 1, 2}, {2, 1, 0}}));
}

TEST(OracleTest, ProseRuleOnDoubleEdge) {
  const auto g = M({{2, -2}, {-1, 2}});
  EXPECT_EQ(oracle::ProseFMove(g, {0, 1}, 0b01, 0), 0b01U);
  EXPECT_EQ(oracle::ProseFMove(g, {0, 1}, 0b10, 1), 0b11U);
}

TEST(OracleTest, NaiveClosureOnA2) {
  const auto labels = oracle::NaiveClosure(vogankm::testing::PathA(2), {0, 1});
  ASSERT_EQ(labels.size(), 4U);
  EXPECT_EQ(labels[0], 0U);
  EXPECT_EQ(labels[1], labels[2]);
  EXPECT_EQ(labels[1], labels[3]);
}

}  // namespace

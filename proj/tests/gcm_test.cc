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

#include "vogankm/gcm.h"

#include <gtest/gtest.h>

#include "oracle.h"
#include "test_util.h"
#include "vogankm/error.h"

namespace vogankm {
namespace {

using testing::E10;
using testing::Iota;
using testing::M;

ErrorCode CodeOf(const std::vector<std::vector<int>>& rows) {
  try {
    CartanMatrix::Validate(rows);
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error raised";
  return ErrorCode::kParseError;
}

TEST(ValidateTest, RankOneIsValid) {
  const CartanMatrix g = M({{2}});
  EXPECT_EQ(g.rank(), 1);
  EXPECT_EQ(g(0, 0), 2);
}

TEST(ValidateTest, ZeroAsymmetryNamesLocation) {
  try {
    CartanMatrix::Validate({{2, -1}, {0, 2}});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kZeroAsymmetry);
    EXPECT_NE(std::string(e.what()).find("(1,0)"), std::string::npos);
  }
}

TEST(ValidateTest, AxiomViolations) {
  EXPECT_EQ(CodeOf({{3}}), ErrorCode::kDiagonalNotTwo);
  EXPECT_EQ(CodeOf({{2, 1}, {1, 2}}), ErrorCode::kPositiveOffDiagonal);
  EXPECT_EQ(CodeOf({}), ErrorCode::kEmptyMatrix);
  EXPECT_EQ(CodeOf({{2, -1}}), ErrorCode::kNotSquare);
}

TEST(ValidateTest, E10IsValid) {
  EXPECT_EQ(E10().rank(), 10);
  EXPECT_TRUE(E10().IsSymmetric());
}

TEST(SymmetrizerTest, SymmetricMatrixGivesOnes) {
  const Symmetrizer s = ComputeSymmetrizer(M({{2, -1}, {-1, 2}}));
  EXPECT_EQ(s.d, (std::vector<Rational>{1, 1}));
  for (const Rational& d : ComputeSymmetrizer(E10()).d) EXPECT_EQ(d, 1);
}

TEST(SymmetrizerTest, DoubleEdgeAgreesWithBruteForce) {
  const CartanMatrix g = M({{2, -2}, {-1, 2}});
  const Symmetrizer s = ComputeSymmetrizer(g);
  const auto brute = oracle::BruteSymmetrizer(g);
  ASSERT_TRUE(brute.has_value());
  ASSERT_EQ(s.d.size(), brute->size());
  for (std::size_t i = 0; i < s.d.size(); ++i) {
    EXPECT_EQ(s.d[i], Rational((*brute)[i]));
  }
}

TEST(SymmetrizerTest, NonSymmetrizableCycleIsReported) {
  // A triangle whose label ratios do not multiply to one around the cycle.
  const CartanMatrix g = M({{2, -2, -1}, {-1, 2, -1}, {-1, -1, 2}});
  SymmetrizerFailure failure{};
  EXPECT_FALSE(TrySymmetrizer(g, &failure).has_value());
  EXPECT_NE(failure.edge.first, failure.edge.second);
  EXPECT_THROW(ComputeSymmetrizer(g), Error);
  EXPECT_FALSE(oracle::BruteSymmetrizer(g).has_value());
}

TEST(ComponentsTest, Examples) {
  EXPECT_EQ(ConnectedComponents(M({{2, 0}, {0, 2}})),
            (std::vector<VertexSet>{{0}, {1}}));
  EXPECT_EQ(ConnectedComponents(E10()), (std::vector<VertexSet>{Iota(10)}));
  const Subdiagram cut = DeleteVertex(E10(), 3);
  EXPECT_EQ(ConnectedComponents(cut.matrix).size(), 3U);
}

TEST(SubdiagramTest, E10MinusOverextendedVertexIsAffine) {
  const Subdiagram e9 = DeleteVertex(E10(), 9);
  EXPECT_EQ(e9.matrix.rank(), 9);
  const AlgebraType t = Classify(e9.matrix);
  EXPECT_EQ(t.tag, TypeTag::kAffine);
  EXPECT_EQ(oracle::ClassifyByAllMinors(e9.matrix), oracle::Kind::kAffine);
}

TEST(SubdiagramTest, KeepAllIsIdentity) {
  const Subdiagram s = ExtractSubdiagram(E10(), Iota(10));
  EXPECT_EQ(s.matrix, E10());
  EXPECT_EQ(s.parent_index, Iota(10));
}

TEST(SubdiagramTest, Example2MinusVertexFourIsTriangle) {
  const Subdiagram s = DeleteVertex(Lookup("Example2-rank4").matrix, 3);
  EXPECT_EQ(s.matrix, M({{2, -1, -1}, {-1, 2, -1}, {-1, -1, 2}}));
}

TEST(SubdiagramTest, Errors) {
  std::vector<int> none;
  EXPECT_THROW(ExtractSubdiagram(E10(), none), Error);
  std::vector<int> bad = {11};
  EXPECT_THROW(ExtractSubdiagram(E10(), bad), Error);
}

TEST(ClassifyTest, RankTwoExamples) {
  EXPECT_EQ(Classify(M({{2, -1}, {-1, 2}})).tag, TypeTag::kFinite);
  EXPECT_EQ(Classify(M({{2, -2}, {-2, 2}})).tag, TypeTag::kAffine);
  const AlgebraType t = Classify(M({{2, -3}, {-3, 2}}));
  EXPECT_EQ(t.tag, TypeTag::kIndefinite);
  EXPECT_TRUE(t.hyperbolic);
}

TEST(ClassifyTest, E10IsHyperbolic) {
  const AlgebraType t = Classify(E10());
  EXPECT_EQ(t.tag, TypeTag::kIndefinite);
  EXPECT_TRUE(t.hyperbolic);
  EXPECT_TRUE(oracle::IsHyperbolicBySubsets(E10()));
}

TEST(ClassifyTest, RankOneIsFinite) {
  const AlgebraType t = Classify(M({{2}}));
  EXPECT_EQ(t.tag, TypeTag::kFinite);
  EXPECT_FALSE(t.hyperbolic);
}

TEST(ClassifyTest, DecomposableKeepsComponentTags) {
  const AlgebraType t = Classify(M({{2, -2, 0}, {-2, 2, 0}, {0, 0, 2}}));
  EXPECT_FALSE(t.indecomposable);
  EXPECT_FALSE(t.hyperbolic);
  EXPECT_EQ(t.status, HyperbolicStatus::kDecomposable);
  ASSERT_EQ(t.components.size(), 2U);
  EXPECT_EQ(t.components[0].tag, TypeTag::kAffine);
  EXPECT_EQ(t.components[1].tag, TypeTag::kFinite);
  EXPECT_EQ(t.tag, TypeTag::kAffine);
}

TEST(ClassifyTest, TwistedAffineRecognised) {
  // A2(2): labels (1,4).
  EXPECT_EQ(Classify(M({{2, -1}, {-4, 2}})).tag, TypeTag::kAffine);
  // G2 and its affine extension.
  EXPECT_EQ(Classify(M({{2, -1}, {-3, 2}})).tag, TypeTag::kFinite);
  EXPECT_EQ(Classify(M({{2, -1, 0}, {-1, 2, -1}, {0, -3, 2}})).tag,
            TypeTag::kAffine);
}

TEST(ClassifyTest, NonSymmetrizableIsIndefiniteNotHyperbolic) {
  const AlgebraType t = Classify(M({{2, -2, -1}, {-1, 2, -1}, {-1, -1, 2}}));
  EXPECT_FALSE(t.symmetrizable);
  EXPECT_EQ(t.tag, TypeTag::kIndefinite);
  EXPECT_FALSE(t.hyperbolic);
  EXPECT_EQ(t.status, HyperbolicStatus::kNotSymmetrizable);
}

TEST(PrincipalMinorTest, AgreesWithCofactorOracle) {
  std::vector<int> both = {0, 1};
  EXPECT_EQ(PrincipalMinor(M({{2, -1}, {-1, 2}}), both), 3);

  oracle::IntMatrix e10;
  for (int i = 0; i < 10; ++i) {
    e10.emplace_back();
    for (int j = 0; j < 10; ++j) e10.back().push_back(E10()(i, j));
  }
  EXPECT_EQ(PrincipalMinor(E10(), Iota(10)),
            Rational(oracle::CofactorDeterminant(e10)));
  EXPECT_EQ(oracle::CofactorDeterminant(e10), -1);

  // The E8 block: vertices 0..7 in the chain labelling.
  std::vector<int> e8 = Iota(8);
  oracle::IntMatrix block;
  for (int i : e8) {
    block.emplace_back();
    for (int j : e8) block.back().push_back(E10()(i, j));
  }
  EXPECT_EQ(oracle::CofactorDeterminant(block), 1);
  EXPECT_EQ(PrincipalMinor(E10(), e8), 1);
}

TEST(PrincipalMinorTest, NonSymmetricUsesSymmetrizedForm) {
  const CartanMatrix g = M({{2, -2}, {-1, 2}});
  std::vector<int> both = {0, 1};
  // d = (1, 2): B = [[2,-2],[-2,4]], det 4.
  EXPECT_EQ(PrincipalMinor(g, both), 4);
}

TEST(BareissTest, HandlesPivotSwap) {
  std::vector<std::vector<BigInt>> m = {{0, 1}, {1, 0}};
  EXPECT_EQ(BareissDeterminant(m), -1);
}

TEST(DeletionSummaryTest, E10OverextendedVertex) {
  const auto summary = DeletionSummary(E10());
  ASSERT_EQ(summary.size(), 10U);
  ASSERT_EQ(summary[9].components.size(), 1U);
  EXPECT_EQ(summary[9].components[0].tag, TypeTag::kAffine);
  EXPECT_TRUE(DeletionSummary(M({{2}})).empty());
}

}  // namespace
}  // namespace vogankm

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

#include "vogankm/vogan.h"

#include <gtest/gtest.h>

#include "oracle.h"
#include "test_util.h"
#include "vogankm/catalog.h"
#include "vogankm/error.h"

namespace vogankm {
namespace {

using testing::M;

ErrorCode CodeOf(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error raised";
  return ErrorCode::kParseError;
}

Painting P(std::initializer_list<int> labels_one_based) {
  std::vector<int> v;
  for (int l : labels_one_based) v.push_back(l - 1);
  return Painting::FromVertices(v);
}

TEST(InvolutionTest, CreateValidates) {
  const CartanMatrix g = testing::PathA(3);
  EXPECT_TRUE(Involution::Create(g, {0, 1, 2}).IsIdentity());
  const Involution s = Involution::Create(g, {2, 1, 0});
  EXPECT_EQ(s.FixedVertices(), std::vector<int>{1});
  EXPECT_EQ(s.FixedMask(), 0b010U);
  EXPECT_EQ(CodeOf([&] { Involution::Create(g, {1, 0, 2}); }),
            ErrorCode::kInvalidInvolution);
  EXPECT_EQ(CodeOf([&] { Involution::Create(g, {0, 1}); }),
            ErrorCode::kInvalidInvolution);
}

TEST(InvolutionTest, OrderThreeRejected) {
  const CartanMatrix tri = M({{2, -1, -1}, {-1, 2, -1}, {-1, -1, 2}});
  EXPECT_EQ(CodeOf([&] { Involution::Create(tri, {1, 2, 0}); }),
            ErrorCode::kInvalidInvolution);
}

TEST(InvolutionsTest, E10HasOnlyIdentity) {
  const auto inv = Involutions(testing::E10());
  ASSERT_EQ(inv.size(), 1U);
  EXPECT_TRUE(inv[0].involution.IsIdentity());
  EXPECT_TRUE(inv[0].representative);
}

TEST(InvolutionsTest, PathA3) {
  const auto inv = Involutions(testing::PathA(3));
  ASSERT_EQ(inv.size(), 2U);
  EXPECT_TRUE(inv[0].involution.IsIdentity());
  EXPECT_EQ(inv[1].involution.perm(), (Permutation{2, 1, 0}));
}

TEST(InvolutionsTest, Example3AbelianClassesAreSingletons) {
  const CartanMatrix& g = Lookup("Example3-rank4").matrix;
  const auto inv = Involutions(g);
  ASSERT_EQ(inv.size(), 4U);
  for (std::size_t k = 0; k < inv.size(); ++k) {
    EXPECT_EQ(inv[k].conjugacy_class, static_cast<int>(k));
    EXPECT_TRUE(inv[k].representative);
  }
  EXPECT_EQ(InvolutionClassRepresentatives(g).size(), 4U);
}

TEST(InvolutionsTest, ConjugateSwapsShareAClass) {
  // The 4-cycle has two diagonal reflections that are conjugate.
  const CartanMatrix c4 = M({{2, -1, 0, -1},
                             {-1, 2, -1, 0},
                             {0, -1, 2, -1},
                             {-1, 0, -1, 2}});
  const Involution a = Involution::Create(c4, {0, 3, 2, 1});
  const Involution b = Involution::Create(c4, {2, 1, 0, 3});
  EXPECT_EQ(ConjugacyRepresentative(c4, a), ConjugacyRepresentative(c4, b));
}

TEST(PaintingTest, OrderingByCardinalityThenLex) {
  EXPECT_LT(Painting::FromVertices({5}), Painting::FromVertices({0, 1}));
  EXPECT_LT(Painting::FromVertices({0, 4}), Painting::FromVertices({1, 2}));
  EXPECT_LT(Painting(), Painting::FromVertices({0}));
  EXPECT_EQ(Painting::FromVertices({3, 1}).Vertices(),
            (std::vector<int>{1, 3}));
  EXPECT_EQ(CodeOf([] { Painting::FromVertices({64}); }),
            ErrorCode::kVertexOutOfRange);
}

TEST(PaintingTest, Format) {
  const std::vector<std::string> labels = {"a", "b", "c"};
  EXPECT_EQ(FormatPainting(Painting::FromVertices({0, 2}), labels), "(a,c)");
  EXPECT_EQ(FormatPainting(Painting(), labels), "()");
}

TEST(VoganDiagramTest, PaintOnSwappedVertexRejected) {
  const CartanMatrix g = testing::PathA(3);
  const Involution s = Involution::Create(g, {2, 1, 0});
  EXPECT_EQ(CodeOf([&] { VoganDiagram::Create(g, s, P({1})); }),
            ErrorCode::kPaintOnSwappedVertex);
  EXPECT_EQ(CodeOf([&] {
              VoganDiagram::Create(g, s, Painting::FromVertices({7}));
            }),
            ErrorCode::kVertexOutOfRange);
  EXPECT_NO_THROW(VoganDiagram::Create(g, s, P({2})));
}

TEST(FMoveTest, Example2FirstMove) {
  const CartanMatrix& g = Lookup("Example2-rank4").matrix;
  const Involution id = Involution::Identity(4);
  EXPECT_EQ(FMove(g, id, P({1}), 0), P({1, 2, 3}));
}

TEST(FMoveTest, Example3Moves) {
  const CartanMatrix& g = Lookup("Example3-rank4").matrix;
  const Involution id = Involution::Identity(4);
  EXPECT_EQ(FMove(g, id, P({1}), 0), P({1, 2, 4}));
  EXPECT_EQ(FMove(g, id, P({1, 2, 4}), 3), P({3, 4}));
}

TEST(FMoveTest, IsolatedVertexUnchanged) {
  const CartanMatrix g = M({{2, 0}, {0, 2}});
  EXPECT_EQ(FMove(g, Involution::Identity(2), P({1}), 0), P({1}));
}

TEST(FMoveTest, DoubleEdgeParity) {
  const CartanMatrix g = M({{2, -2}, {-1, 2}});
  const Involution id = Involution::Identity(2);
  EXPECT_EQ(FMove(g, id, P({1}), 0), P({1}));
  EXPECT_EQ(FMove(g, id, P({2}), 1), P({1, 2}));
}

TEST(FMoveTest, TripleEdgeFlips) {
  const CartanMatrix g = M({{2, -3}, {-1, 2}});
  EXPECT_EQ(FMove(g, Involution::Identity(2), P({1}), 0), P({1, 2}));
}

TEST(FMoveTest, AgreesWithProseRule) {
  for (const CatalogEntry& entry : Catalog()) {
    const CartanMatrix& g = entry.matrix;
    if (g.rank() > 8) continue;
    SCOPED_TRACE(entry.name);
    for (const Involution& s : InvolutionClassRepresentatives(g)) {
      const std::uint64_t fixed = s.FixedMask();
      for (std::uint64_t m = fixed;; m = (m - 1) & fixed) {
        for (int i : Painting(m).Vertices()) {
          EXPECT_EQ(FMove(g, s, Painting(m), i).mask(),
                    oracle::ProseFMove(g, s.perm(), m, i));
        }
        if (m == 0) break;
      }
    }
  }
}

TEST(FMoveTest, Errors) {
  const CartanMatrix g = testing::PathA(3);
  const Involution s = Involution::Create(g, {2, 1, 0});
  EXPECT_EQ(CodeOf([&] { FMove(g, s, P({2}), 0); }),
            ErrorCode::kVertexNotFixed);
  EXPECT_EQ(CodeOf([&] { FMove(g, s, P({2}), 5); }),
            ErrorCode::kVertexOutOfRange);
  const Involution id = Involution::Identity(3);
  EXPECT_EQ(CodeOf([&] { FMove(g, id, P({2}), 0); }),
            ErrorCode::kUnpaintedVertex);
}

TEST(FMoveTest, DiagramOverload) {
  const CartanMatrix& g = Lookup("Example2-rank4").matrix;
  const VoganDiagram v = VoganDiagram::Create(g, Involution::Identity(4), P({1}));
  const VoganDiagram w = FMove(v, 0);
  EXPECT_EQ(w.painted(), P({1, 2, 3}));
  EXPECT_EQ(w.matrix(), g);
}

}  // namespace
}  // namespace vogankm

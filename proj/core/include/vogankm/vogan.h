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

#ifndef VOGANKM_VOGAN_H_
#define VOGANKM_VOGAN_H_

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "vogankm/automorphism.h"
#include "vogankm/gcm.h"

namespace vogankm {

// An automorphism of order at most two. The two-element cycles are the
// arrow pairs of a Vogan diagram and the fixed points carry the paint.
class Involution {
 public:
  static Involution Identity(int n);
  // Throws kInvalidInvolution unless perm is a label-preserving permutation
  // of order <= 2.
  static Involution Create(const CartanMatrix& g, Permutation perm);

  const Permutation& perm() const { return perm_; }
  int size() const { return static_cast<int>(perm_.size()); }
  int operator()(int v) const { return perm_[v]; }
  bool IsFixed(int v) const { return perm_[v] == v; }
  bool IsIdentity() const;
  std::vector<int> FixedVertices() const;
  std::uint64_t FixedMask() const;

  friend bool operator==(const Involution&, const Involution&) = default;

 private:
  explicit Involution(Permutation perm) : perm_(std::move(perm)) {}
  Permutation perm_;
};

struct InvolutionInfo {
  Involution involution;
  int conjugacy_class = 0;
  // True for the lexicographically least member of its class.
  bool representative = false;
};

// All involutions of g in lexicographic order, grouped into conjugacy classes
// under the full automorphism group. Classes are numbered in order of first
// appearance.
std::vector<InvolutionInfo> Involutions(const CartanMatrix& g);
std::vector<Involution> InvolutionClassRepresentatives(const CartanMatrix& g);
// Lexicographically least involution conjugate to sigma.
Involution ConjugacyRepresentative(const CartanMatrix& g,
                                   const Involution& sigma);

inline constexpr int kMaxPaintingRank = 64;

// A set of painted vertices stored as a bitmask over vertex indices.
class Painting {
 public:
  Painting() = default;
  explicit Painting(std::uint64_t mask) : mask_(mask) {}
  static Painting FromVertices(const std::vector<int>& vertices);

  std::uint64_t mask() const { return mask_; }
  bool empty() const { return mask_ == 0; }
  int size() const;
  bool Contains(int v) const { return (mask_ >> v) & 1U; }
  std::vector<int> Vertices() const;

  friend bool operator==(Painting a, Painting b) { return a.mask_ == b.mask_; }
  // Cardinality first, then the sorted vertex lists lexicographically.
  friend std::strong_ordering operator<=>(Painting a, Painting b);

 private:
  std::uint64_t mask_ = 0;
};

struct PaintingHash {
  std::size_t operator()(Painting p) const {
    return std::hash<std::uint64_t>{}(p.mask());
  }
};

std::string FormatPainting(Painting p, const std::vector<std::string>& labels);

Painting ApplyPermutation(const Permutation& p, Painting painting);

class VoganDiagram {
 public:
  // Throws kPaintOnSwappedVertex if a painted vertex is moved by sigma and
  // kVertexOutOfRange for indices outside the diagram.
  static VoganDiagram Create(CartanMatrix g, Involution sigma,
                             Painting painted);

  const CartanMatrix& matrix() const { return g_; }
  const Involution& sigma() const { return sigma_; }
  Painting painted() const { return painted_; }

  VoganDiagram WithPainting(Painting painted) const;

 private:
  VoganDiagram(CartanMatrix g, Involution sigma, Painting painted)
      : g_(std::move(g)), sigma_(std::move(sigma)), painted_(painted) {}

  CartanMatrix g_;
  Involution sigma_;
  Painting painted_;
};

// Bits of the fixed vertices j != i with a[i][j] odd.
std::uint64_t FlipMask(const CartanMatrix& g, const Involution& sigma, int i);

// The move F[i]: i stays painted and every other fixed vertex j changes colour
// iff a[i][j] is odd. Throws kVertexNotFixed or kUnpaintedVertex.
Painting FMove(const CartanMatrix& g, const Involution& sigma,
               Painting painting, int i);
VoganDiagram FMove(const VoganDiagram& v, int i);

}  // namespace vogankm

#endif  // VOGANKM_VOGAN_H_

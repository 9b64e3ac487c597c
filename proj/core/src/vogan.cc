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

#include <algorithm>
#include <bit>
#include <map>
#include <sstream>

#include "vogankm/error.h"

namespace vogankm {

Involution Involution::Identity(int n) {
  return Involution(IdentityPermutation(n));
}

Involution Involution::Create(const CartanMatrix& g, Permutation perm) {
  if (static_cast<int>(perm.size()) != g.rank()) {
    throw Error(ErrorCode::kInvalidInvolution,
                "involution has " + std::to_string(perm.size()) +
                    " entries, diagram has rank " + std::to_string(g.rank()));
  }
  if (!PreservesMatrix(g, perm)) {
    throw Error(ErrorCode::kInvalidInvolution,
                "involution is not a label-preserving permutation");
  }
  if (!IsInvolution(perm)) {
    throw Error(ErrorCode::kInvalidInvolution,
                "permutation does not have order <= 2");
  }
  return Involution(std::move(perm));
}

bool Involution::IsIdentity() const { return vogankm::IsIdentity(perm_); }

std::vector<int> Involution::FixedVertices() const {
  std::vector<int> out;
  for (int v = 0; v < size(); ++v) {
    if (IsFixed(v)) out.push_back(v);
  }
  return out;
}

std::uint64_t Involution::FixedMask() const {
  std::uint64_t mask = 0;
  for (int v : FixedVertices()) mask |= std::uint64_t{1} << v;
  return mask;
}

std::vector<InvolutionInfo> Involutions(const CartanMatrix& g) {
  const std::vector<Permutation> group = Automorphisms(g);
  std::vector<InvolutionInfo> out;
  std::map<Permutation, int> class_of;
  int classes = 0;
  for (const Permutation& p : group) {
    if (!IsInvolution(p)) continue;
    auto it = class_of.find(p);
    if (it == class_of.end()) {
      const int id = classes++;
      for (const Permutation& h : group) {
        class_of.emplace(Compose(Compose(h, p), Inverse(h)), id);
      }
      it = class_of.find(p);
    }
    out.push_back({Involution::Create(g, p), it->second, false});
  }
  std::vector<bool> seen(classes, false);
  for (InvolutionInfo& info : out) {
    if (!seen[info.conjugacy_class]) {
      info.representative = true;
      seen[info.conjugacy_class] = true;
    }
  }
  return out;
}

std::vector<Involution> InvolutionClassRepresentatives(const CartanMatrix& g) {
  std::vector<Involution> out;
  for (const InvolutionInfo& info : Involutions(g)) {
    if (info.representative) out.push_back(info.involution);
  }
  return out;
}

Involution ConjugacyRepresentative(const CartanMatrix& g,
                                   const Involution& sigma) {
  Permutation best = sigma.perm();
  for (const Permutation& h : Automorphisms(g)) {
    best = std::min(best, Compose(Compose(h, sigma.perm()), Inverse(h)));
  }
  return Involution::Create(g, best);
}

Painting Painting::FromVertices(const std::vector<int>& vertices) {
  std::uint64_t mask = 0;
  for (int v : vertices) {
    if (v < 0 || v >= kMaxPaintingRank) {
      throw Error(ErrorCode::kVertexOutOfRange,
                  "vertex " + std::to_string(v) + " out of range");
    }
    mask |= std::uint64_t{1} << v;
  }
  return Painting(mask);
}

int Painting::size() const { return std::popcount(mask_); }

std::vector<int> Painting::Vertices() const {
  std::vector<int> out;
  for (std::uint64_t m = mask_; m != 0; m &= m - 1) {
    out.push_back(std::countr_zero(m));
  }
  return out;
}

std::strong_ordering operator<=>(Painting a, Painting b) {
  if (a.size() != b.size()) return a.size() <=> b.size();
  return a.Vertices() <=> b.Vertices();
}

std::string FormatPainting(Painting p, const std::vector<std::string>& labels) {
  std::ostringstream out;
  out << '(';
  bool first = true;
  for (int v : p.Vertices()) {
    if (!first) out << ',';
    first = false;
    if (v < static_cast<int>(labels.size())) {
      out << labels[v];
    } else {
      out << v;
    }
  }
  out << ')';
  return out.str();
}

Painting ApplyPermutation(const Permutation& p, Painting painting) {
  std::uint64_t mask = 0;
  for (int v : painting.Vertices()) mask |= std::uint64_t{1} << p[v];
  return Painting(mask);
}

VoganDiagram VoganDiagram::Create(CartanMatrix g, Involution sigma,
                                  Painting painted) {
  if (sigma.size() != g.rank()) {
    throw Error(ErrorCode::kInvalidInvolution,
                "involution size does not match the diagram rank");
  }
  if (g.rank() > kMaxPaintingRank) {
    throw Error(ErrorCode::kRankTooLarge,
                "Vogan diagrams support rank <= " +
                    std::to_string(kMaxPaintingRank));
  }
  for (int v : painted.Vertices()) {
    if (v >= g.rank()) {
      throw Error(ErrorCode::kVertexOutOfRange,
                  "painted vertex " + std::to_string(v) + " out of range");
    }
    if (!sigma.IsFixed(v)) {
      throw Error(ErrorCode::kPaintOnSwappedVertex,
                  "vertex " + std::to_string(v) +
                      " lies in a two-element orbit and cannot be painted");
    }
  }
  return VoganDiagram(std::move(g), std::move(sigma), painted);
}

VoganDiagram VoganDiagram::WithPainting(Painting painted) const {
  return Create(g_, sigma_, painted);
}

std::uint64_t FlipMask(const CartanMatrix& g, const Involution& sigma, int i) {
  std::uint64_t mask = 0;
  for (int j = 0; j < g.rank(); ++j) {
    if (j != i && sigma.IsFixed(j) && g(i, j) % 2 != 0) {
      mask |= std::uint64_t{1} << j;
    }
  }
  return mask;
}

Painting FMove(const CartanMatrix& g, const Involution& sigma,
               Painting painting, int i) {
  if (i < 0 || i >= g.rank()) {
    throw Error(ErrorCode::kVertexOutOfRange,
                "vertex " + std::to_string(i) + " out of range");
  }
  if (!sigma.IsFixed(i)) {
    throw Error(ErrorCode::kVertexNotFixed,
                "F move at vertex " + std::to_string(i) +
                    " which is swapped by the involution");
  }
  if (!painting.Contains(i)) {
    throw Error(ErrorCode::kUnpaintedVertex,
                "F move at unpainted vertex " + std::to_string(i));
  }
  return Painting(painting.mask() ^ FlipMask(g, sigma, i));
}

VoganDiagram FMove(const VoganDiagram& v, int i) {
  return v.WithPainting(FMove(v.matrix(), v.sigma(), v.painted(), i));
}

}  // namespace vogankm

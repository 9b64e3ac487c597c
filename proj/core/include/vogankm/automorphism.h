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

#ifndef VOGANKM_AUTOMORPHISM_H_
#define VOGANKM_AUTOMORPHISM_H_

#include <vector>

#include "vogankm/gcm.h"

namespace vogankm {

// perm[i] is the image of vertex i.
using Permutation = std::vector<int>;

inline constexpr int kMaxAutomorphismRank = 16;

Permutation IdentityPermutation(int n);
Permutation Compose(const Permutation& outer, const Permutation& inner);
Permutation Inverse(const Permutation& p);
bool IsIdentity(const Permutation& p);
bool IsInvolution(const Permutation& p);
// a[p(i)][p(j)] == a[i][j] for all i, j.
bool PreservesMatrix(const CartanMatrix& g, const Permutation& p);

// All label-preserving vertex permutations, in lexicographic order of the
// image vector. Backtracking with row-signature pruning; throws
// Error(kRankTooLarge) above kMaxAutomorphismRank.
std::vector<Permutation> Automorphisms(const CartanMatrix& g);

// Canonical form for diagram isomorphism: the lexicographically least
// encoding over all vertex orders, where the encoding interleaves an
// isomorphism-invariant vertex colour with the entries linking each placed
// vertex to the ones placed before it. Two GCMs are diagram-isomorphic iff
// their canonical forms are equal.
struct CanonicalForm {
  std::vector<int> code;
  Permutation order;  // order[k] = original vertex placed at position k

  friend bool operator==(const CanonicalForm& a, const CanonicalForm& b) {
    return a.code == b.code;
  }
  friend auto operator<=>(const CanonicalForm& a, const CanonicalForm& b) {
    return a.code <=> b.code;
  }
};

CanonicalForm ComputeCanonicalForm(const CartanMatrix& g);
// The GCM relabelled along the canonical order.
CartanMatrix CanonicalMatrix(const CartanMatrix& g);
bool Isomorphic(const CartanMatrix& a, const CartanMatrix& b);

}  // namespace vogankm

#endif  // VOGANKM_AUTOMORPHISM_H_

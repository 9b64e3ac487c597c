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

#ifndef VOGANKM_HYPERSEARCH_H_
#define VOGANKM_HYPERSEARCH_H_

#include <vector>

#include "vogankm/gcm.h"

namespace vogankm {

inline constexpr int kMaxCensusRank = 8;

struct ExtensionCandidate {
  CartanMatrix base;
  std::vector<int> new_row;  // a[new][j]
  std::vector<int> new_col;  // a[j][new]
  CartanMatrix result;
};

struct ExtendOptions {
  int max_label = 4;
  // Keep only candidates whose every proper subdiagram is finite or affine
  // and whose whole matrix is hyperbolic. When false every connected
  // candidate satisfying the axioms is returned.
  bool hyperbolic_only = true;
};

// Connected one-vertex extensions of base with off-diagonal entries in
// [-max_label, 0]. Edges with label product above 4 are only generated when
// the result has rank 2, since any such edge is itself an indefinite rank-2
// subdiagram.
std::vector<ExtensionCandidate> ExtensionCandidates(const CartanMatrix& base,
                                                    const ExtendOptions& opts);

// Hyperbolic extensions of base, one per isomorphism class, ordered by
// canonical code. The new vertex is the last index.
std::vector<CartanMatrix> Extend(const CartanMatrix& base, int max_label);

// Diagrams of the given rank, connected or not, whose components are all of
// finite or affine type, with label products at most 4. One per isomorphism
// class, ordered by canonical code.
std::vector<CartanMatrix> FiniteAffineDiagrams(int rank, int max_label);

// Connected hyperbolic diagrams of the given rank up to isomorphism, ordered
// by canonical code. Throws kRankBoundExceeded above kMaxCensusRank.
std::vector<CartanMatrix> Census(int rank, int max_label);

}  // namespace vogankm

#endif  // VOGANKM_HYPERSEARCH_H_

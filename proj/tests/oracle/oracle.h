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

#ifndef VOGANKM_TESTS_ORACLE_ORACLE_H_
#define VOGANKM_TESTS_ORACLE_ORACLE_H_

// Deliberately naive reference implementations used only by tests. They share
// no code with the library beyond the matrix container.

#include <cstdint>
#include <optional>
#include <vector>

#include "vogankm/gcm.h"

namespace oracle {

using IntMatrix = std::vector<std::vector<long long>>;

// Laplace expansion along the first row.
long long CofactorDeterminant(const IntMatrix& m);

// Integer symmetrizer found by exhaustive search over entries 1..bound.
std::optional<std::vector<long long>> BruteSymmetrizer(
    const vogankm::CartanMatrix& g, int bound = 512);

enum class Kind { kFinite, kAffine, kIndefinite };

// Connected input only. Finite iff every principal minor of the symmetrized
// matrix is positive; affine iff the determinant vanishes and every proper
// principal minor is positive.
Kind ClassifyByAllMinors(const vogankm::CartanMatrix& g);

// Hyperbolic iff connected, symmetrizable, indefinite and every proper
// connected vertex subset is finite or affine.
bool IsHyperbolicBySubsets(const vogankm::CartanMatrix& g);

std::vector<std::vector<int>> BruteAutomorphisms(const vogankm::CartanMatrix& g);

// Least row-major entry vector over all vertex orders.
std::vector<int> BruteCanonicalCode(const vogankm::CartanMatrix& g);

// The colour-change rule stated in words: non-neighbours keep their colour,
// a long neighbour across a double edge keeps its colour, every other
// neighbour changes. Edges with four or more lines follow the parity of the
// Cartan integer.
std::uint64_t ProseFMove(const vogankm::CartanMatrix& g,
                         const std::vector<int>& sigma, std::uint64_t painted,
                         int i);

// Class label (least member mask) of every painting of Fix(sigma), by
// repeated relaxation until nothing changes. Indexed by vertex mask; entries
// for masks touching swapped vertices are left at UINT64_MAX.
std::vector<std::uint64_t> NaiveClosure(const vogankm::CartanMatrix& g,
                                        const std::vector<int>& sigma);

}  // namespace oracle

#endif  // VOGANKM_TESTS_ORACLE_ORACLE_H_

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

#ifndef VOGANKM_GCM_H_
#define VOGANKM_GCM_H_

// Generalized Cartan matrices over exact arithmetic.
//
// Index convention: entry (i, j) is the Cartan integer <alpha_j, alpha_i^v>,
// i.e. the eigenvalue in [h_i, e_j] = a_ij e_j. With this convention
// |a_ij| > 1 on a multiple edge means alpha_i is the shorter root, and the
// Dynkin arrow points towards i.

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace vogankm {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

class CartanMatrix {
 public:
  // Checks the three GCM axioms and throws Error naming the first violation
  // (row-major scan) together with its (i, j) location.
  static CartanMatrix Validate(const std::vector<std::vector<int>>& rows,
                               std::string name = {});

  int rank() const { return rank_; }
  int operator()(int i, int j) const { return entries_[i * rank_ + j]; }
  const std::string& name() const { return name_; }
  void set_name(std::string name) { name_ = std::move(name); }

  std::vector<std::vector<int>> Rows() const;
  // Entries in row-major order; convenient as a map key.
  const std::vector<int>& entries() const { return entries_; }

  bool Adjacent(int i, int j) const { return i != j && (*this)(i, j) != 0; }
  bool IsSymmetric() const;

  // Matrix equality ignores the display name.
  friend bool operator==(const CartanMatrix& a, const CartanMatrix& b) {
    return a.rank_ == b.rank_ && a.entries_ == b.entries_;
  }

 private:
  CartanMatrix(int rank, std::vector<int> entries, std::string name)
      : rank_(rank), entries_(std::move(entries)), name_(std::move(name)) {}

  int rank_ = 0;
  std::vector<int> entries_;
  std::string name_;
};

// Positive diagonal d with d[i] * a[i][j] == d[j] * a[j][i], normalized so
// that the smallest entry of every connected component is 1.
struct Symmetrizer {
  std::vector<Rational> d;
};

// Thrown (via Error) or reported when a cycle of the diagram forbids a
// symmetrizer; `edge` is the first non-tree edge found inconsistent.
struct SymmetrizerFailure {
  std::pair<int, int> edge;
};

std::optional<Symmetrizer> TrySymmetrizer(const CartanMatrix& g,
                                          SymmetrizerFailure* failure = nullptr);
// Throws Error(kNotSymmetrizable) naming the violating edge.
Symmetrizer ComputeSymmetrizer(const CartanMatrix& g);

using VertexSet = std::vector<int>;

// Components of the underlying graph, each sorted, ordered by smallest member.
std::vector<VertexSet> ConnectedComponents(const CartanMatrix& g);
// Components of the subgraph induced on `vertices`.
std::vector<VertexSet> ConnectedComponents(const CartanMatrix& g,
                                           std::span<const int> vertices);

struct Subdiagram {
  CartanMatrix matrix;
  // parent_index[k] is the vertex of the parent matrix that became vertex k.
  std::vector<int> parent_index;
};

// Principal submatrix on `keep` (order of `keep` is preserved).
Subdiagram ExtractSubdiagram(const CartanMatrix& g, std::span<const int> keep);
// Principal submatrix on all vertices except `removed`.
Subdiagram DeleteVertex(const CartanMatrix& g, int removed);

// Determinant of the symmetrized principal submatrix (D A) restricted to
// `rows`, in exact arithmetic. Throws if g is not symmetrizable.
Rational PrincipalMinor(const CartanMatrix& g, std::span<const int> rows);
Rational PrincipalMinor(const CartanMatrix& g, const Symmetrizer& s,
                        std::span<const int> rows);

// Fraction-free (Bareiss) determinant of a square integer matrix.
BigInt BareissDeterminant(std::vector<std::vector<BigInt>> m);

enum class TypeTag { kFinite, kAffine, kIndefinite };

enum class HyperbolicStatus {
  kHyperbolic,
  kNotIndefinite,
  kNotSymmetrizable,
  kDecomposable,
  kIndefiniteSubdiagram,
};

struct ComponentType {
  VertexSet vertices;
  TypeTag tag;
};

struct AlgebraType {
  // For decomposable input: kIndefinite if any component is, else kAffine if
  // any component is, else kFinite. Per-component tags are in `components`.
  TypeTag tag = TypeTag::kFinite;
  bool hyperbolic = false;
  bool symmetrizable = false;
  bool indecomposable = false;
  HyperbolicStatus status = HyperbolicStatus::kNotIndefinite;
  std::vector<ComponentType> components;
};

AlgebraType Classify(const CartanMatrix& g);

// Type of the principal subdiagram on a connected vertex set, using an
// already-computed symmetrizer for g (nullptr: the component is treated as
// non-symmetrizable and reported Indefinite).
TypeTag ClassifyConnected(const CartanMatrix& g, const Symmetrizer* s,
                          std::span<const int> component);

// True when every component of the subdiagram on `vertices` is of finite or
// affine type.
bool IsFiniteOrAffine(const CartanMatrix& g, std::span<const int> vertices);

struct VertexDeletion {
  int vertex;
  std::vector<ComponentType> components;
};

// For every vertex v, the types of the connected components of g - v.
std::vector<VertexDeletion> DeletionSummary(const CartanMatrix& g);

std::string_view TypeTagName(TypeTag tag);
std::string_view HyperbolicStatusName(HyperbolicStatus status);

}  // namespace vogankm

#endif  // VOGANKM_GCM_H_

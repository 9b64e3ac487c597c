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

#include <algorithm>
#include <numeric>
#include <sstream>

#include "vogankm/error.h"

namespace vogankm {
namespace {

std::string Where(int i, int j) {
  std::ostringstream os;
  os << "(" << i << "," << j << ")";
  return os.str();
}

// Integer scaling of the symmetrizer restricted to `rows`: returns the
// integer matrix L * (D A)|rows for the least L clearing denominators.
std::vector<std::vector<BigInt>> ScaledSymmetrized(
    const CartanMatrix& g, const Symmetrizer& s, std::span<const int> rows) {
  BigInt lcm = 1;
  for (int r : rows) {
    const BigInt den = boost::multiprecision::denominator(s.d[r]);
    lcm = lcm / boost::multiprecision::gcd(lcm, den) * den;
  }
  std::vector<std::vector<BigInt>> m(rows.size(),
                                     std::vector<BigInt>(rows.size()));
  for (std::size_t a = 0; a < rows.size(); ++a) {
    const Rational scaled = s.d[rows[a]] * Rational(lcm);
    const BigInt di = boost::multiprecision::numerator(scaled);
    for (std::size_t b = 0; b < rows.size(); ++b) {
      m[a][b] = di * g(rows[a], rows[b]);
    }
  }
  return m;
}

// Sylvester's criterion in one Bareiss sweep: after step k the pivot equals
// the k-th leading principal minor, so the sweep stops at the first
// non-positive one.
bool PositiveDefinite(std::vector<std::vector<BigInt>> m) {
  const std::size_t n = m.size();
  BigInt prev = 1;
  for (std::size_t k = 0; k < n; ++k) {
    if (m[k][k] <= 0) return false;
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
      }
    }
    prev = m[k][k];
  }
  return true;
}

TypeTag ClassifySymmetrized(const std::vector<std::vector<BigInt>>& b) {
  if (PositiveDefinite(b)) return TypeTag::kFinite;
  if (BareissDeterminant(b) != 0) return TypeTag::kIndefinite;
  const std::size_t n = b.size();
  for (std::size_t skip = 0; skip < n; ++skip) {
    std::vector<std::vector<BigInt>> sub;
    sub.reserve(n - 1);
    for (std::size_t i = 0; i < n; ++i) {
      if (i == skip) continue;
      std::vector<BigInt> row;
      row.reserve(n - 1);
      for (std::size_t j = 0; j < n; ++j) {
        if (j != skip) row.push_back(b[i][j]);
      }
      sub.push_back(std::move(row));
    }
    if (!PositiveDefinite(std::move(sub))) return TypeTag::kIndefinite;
  }
  return TypeTag::kAffine;
}

}  // namespace

CartanMatrix CartanMatrix::Validate(const std::vector<std::vector<int>>& rows,
                                    std::string name) {
  const int n = static_cast<int>(rows.size());
  if (n == 0) throw Error(ErrorCode::kEmptyMatrix, "matrix has no rows");
  std::vector<int> entries;
  entries.reserve(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(rows[i].size()) != n) {
      throw Error(ErrorCode::kNotSquare,
                  "row " + std::to_string(i) + " has " +
                      std::to_string(rows[i].size()) + " entries, expected " +
                      std::to_string(n));
    }
    entries.insert(entries.end(), rows[i].begin(), rows[i].end());
  }
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const int a = rows[i][j];
      if (i == j) {
        if (a != 2) {
          throw Error(ErrorCode::kDiagonalNotTwo,
                      "DiagonalNotTwo at " + Where(i, j) + ": entry is " +
                          std::to_string(a));
        }
      } else if (a > 0) {
        throw Error(ErrorCode::kPositiveOffDiagonal,
                    "PositiveOffDiagonal at " + Where(i, j) + ": entry is " +
                        std::to_string(a));
      } else if (a == 0 && rows[j][i] != 0) {
        throw Error(ErrorCode::kZeroAsymmetry,
                    "ZeroAsymmetry at " + Where(i, j) + ": entry is 0 but " +
                        Where(j, i) + " is " + std::to_string(rows[j][i]));
      }
    }
  }
  return CartanMatrix(n, std::move(entries), std::move(name));
}

std::vector<std::vector<int>> CartanMatrix::Rows() const {
  std::vector<std::vector<int>> rows(rank_);
  for (int i = 0; i < rank_; ++i) {
    rows[i].assign(entries_.begin() + i * rank_,
                   entries_.begin() + (i + 1) * rank_);
  }
  return rows;
}

bool CartanMatrix::IsSymmetric() const {
  for (int i = 0; i < rank_; ++i) {
    for (int j = i + 1; j < rank_; ++j) {
      if ((*this)(i, j) != (*this)(j, i)) return false;
    }
  }
  return true;
}

std::optional<Symmetrizer> TrySymmetrizer(const CartanMatrix& g,
                                          SymmetrizerFailure* failure) {
  const int n = g.rank();
  std::vector<Rational> d(n, Rational(0));
  std::vector<bool> seen(n, false);
  for (const VertexSet& comp : ConnectedComponents(g)) {
    // Spanning-tree propagation (DFS from the smallest vertex).
    std::vector<int> stack = {comp.front()};
    seen[comp.front()] = true;
    d[comp.front()] = 1;
    while (!stack.empty()) {
      const int i = stack.back();
      stack.pop_back();
      for (int j = 0; j < n; ++j) {
        if (!g.Adjacent(i, j) || seen[j]) continue;
        d[j] = d[i] * g(i, j) / g(j, i);
        seen[j] = true;
        stack.push_back(j);
      }
    }
    Rational lo = d[comp.front()];
    for (int v : comp) lo = std::min(lo, d[v]);
    for (int v : comp) d[v] /= lo;
  }
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (d[i] * g(i, j) != d[j] * g(j, i)) {
        if (failure != nullptr) failure->edge = {i, j};
        return std::nullopt;
      }
    }
  }
  return Symmetrizer{std::move(d)};
}

Symmetrizer ComputeSymmetrizer(const CartanMatrix& g) {
  SymmetrizerFailure failure;
  auto s = TrySymmetrizer(g, &failure);
  if (!s) {
    throw Error(ErrorCode::kNotSymmetrizable,
                "NotSymmetrizable: cycle edge " +
                    Where(failure.edge.first, failure.edge.second) +
                    " is inconsistent with the spanning-tree symmetrizer");
  }
  return *std::move(s);
}

std::vector<VertexSet> ConnectedComponents(const CartanMatrix& g) {
  std::vector<int> all(g.rank());
  std::iota(all.begin(), all.end(), 0);
  return ConnectedComponents(g, all);
}

std::vector<VertexSet> ConnectedComponents(const CartanMatrix& g,
                                           std::span<const int> vertices) {
  std::vector<int> sorted(vertices.begin(), vertices.end());
  std::sort(sorted.begin(), sorted.end());
  std::vector<bool> member(g.rank(), false), seen(g.rank(), false);
  for (int v : sorted) member[v] = true;
  std::vector<VertexSet> out;
  for (int start : sorted) {
    if (seen[start]) continue;
    VertexSet comp;
    std::vector<int> stack = {start};
    seen[start] = true;
    while (!stack.empty()) {
      const int i = stack.back();
      stack.pop_back();
      comp.push_back(i);
      for (int j : sorted) {
        if (!seen[j] && g.Adjacent(i, j)) {
          seen[j] = true;
          stack.push_back(j);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

Subdiagram ExtractSubdiagram(const CartanMatrix& g, std::span<const int> keep) {
  if (keep.empty()) {
    throw Error(ErrorCode::kEmptySelection, "subdiagram selection is empty");
  }
  std::vector<bool> used(g.rank(), false);
  for (int v : keep) {
    if (v < 0 || v >= g.rank()) {
      throw Error(ErrorCode::kVertexOutOfRange,
                  "vertex " + std::to_string(v) + " is out of range");
    }
    if (used[v]) {
      throw Error(ErrorCode::kVertexOutOfRange,
                  "vertex " + std::to_string(v) + " selected twice");
    }
    used[v] = true;
  }
  std::vector<std::vector<int>> rows(keep.size(),
                                     std::vector<int>(keep.size()));
  for (std::size_t a = 0; a < keep.size(); ++a) {
    for (std::size_t b = 0; b < keep.size(); ++b) {
      rows[a][b] = g(keep[a], keep[b]);
    }
  }
  return Subdiagram{CartanMatrix::Validate(rows),
                    std::vector<int>(keep.begin(), keep.end())};
}

Subdiagram DeleteVertex(const CartanMatrix& g, int removed) {
  std::vector<int> keep;
  for (int v = 0; v < g.rank(); ++v) {
    if (v != removed) keep.push_back(v);
  }
  return ExtractSubdiagram(g, keep);
}

BigInt BareissDeterminant(std::vector<std::vector<BigInt>> m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  BigInt prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t p = k + 1;
      while (p < n && m[p][k] == 0) ++p;
      if (p == n) return 0;
      std::swap(m[k], m[p]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
      }
    }
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

Rational PrincipalMinor(const CartanMatrix& g, std::span<const int> rows) {
  return PrincipalMinor(g, ComputeSymmetrizer(g), rows);
}

Rational PrincipalMinor(const CartanMatrix& g, const Symmetrizer& s,
                        std::span<const int> rows) {
  if (rows.empty()) {
    throw Error(ErrorCode::kEmptySelection, "principal minor of no rows");
  }
  BigInt lcm = 1;
  for (int r : rows) {
    const BigInt den = boost::multiprecision::denominator(s.d[r]);
    lcm = lcm / boost::multiprecision::gcd(lcm, den) * den;
  }
  const BigInt det = BareissDeterminant(ScaledSymmetrized(g, s, rows));
  BigInt scale = 1;
  for (std::size_t k = 0; k < rows.size(); ++k) scale *= lcm;
  return Rational(det, scale);
}

TypeTag ClassifyConnected(const CartanMatrix& g, const Symmetrizer* s,
                          std::span<const int> component) {
  // Every GCM of finite or affine type is symmetrizable.
  if (s == nullptr) return TypeTag::kIndefinite;
  return ClassifySymmetrized(ScaledSymmetrized(g, *s, component));
}

namespace {

TypeTag ClassifyComponent(const CartanMatrix& g, const VertexSet& comp) {
  const Subdiagram sub = ExtractSubdiagram(g, comp);
  const auto s = TrySymmetrizer(sub.matrix);
  std::vector<int> all(comp.size());
  std::iota(all.begin(), all.end(), 0);
  return ClassifyConnected(sub.matrix, s ? &*s : nullptr, all);
}

}  // namespace

bool IsFiniteOrAffine(const CartanMatrix& g, std::span<const int> vertices) {
  for (const VertexSet& comp : ConnectedComponents(g, vertices)) {
    if (ClassifyComponent(g, comp) == TypeTag::kIndefinite) return false;
  }
  return true;
}

AlgebraType Classify(const CartanMatrix& g) {
  AlgebraType out;
  const auto comps = ConnectedComponents(g);
  out.indecomposable = comps.size() == 1;
  out.symmetrizable = TrySymmetrizer(g).has_value();
  bool any_affine = false, any_indefinite = false;
  for (const VertexSet& comp : comps) {
    const TypeTag tag = ClassifyComponent(g, comp);
    any_affine |= tag == TypeTag::kAffine;
    any_indefinite |= tag == TypeTag::kIndefinite;
    out.components.push_back({comp, tag});
  }
  out.tag = any_indefinite ? TypeTag::kIndefinite
            : any_affine   ? TypeTag::kAffine
                           : TypeTag::kFinite;

  if (!out.indecomposable) {
    out.status = HyperbolicStatus::kDecomposable;
  } else if (out.tag != TypeTag::kIndefinite) {
    out.status = HyperbolicStatus::kNotIndefinite;
  } else if (!out.symmetrizable) {
    out.status = HyperbolicStatus::kNotSymmetrizable;
  } else {
    out.status = HyperbolicStatus::kHyperbolic;
    for (int v = 0; v < g.rank() && out.status == HyperbolicStatus::kHyperbolic;
         ++v) {
      std::vector<int> rest;
      for (int u = 0; u < g.rank(); ++u) {
        if (u != v) rest.push_back(u);
      }
      if (!IsFiniteOrAffine(g, rest)) {
        out.status = HyperbolicStatus::kIndefiniteSubdiagram;
      }
    }
  }
  out.hyperbolic = out.status == HyperbolicStatus::kHyperbolic;
  return out;
}

std::vector<VertexDeletion> DeletionSummary(const CartanMatrix& g) {
  std::vector<VertexDeletion> out;
  if (g.rank() < 2) return out;
  for (int v = 0; v < g.rank(); ++v) {
    std::vector<int> rest;
    for (int u = 0; u < g.rank(); ++u) {
      if (u != v) rest.push_back(u);
    }
    VertexDeletion del{v, {}};
    for (const VertexSet& comp : ConnectedComponents(g, rest)) {
      del.components.push_back({comp, ClassifyComponent(g, comp)});
    }
    out.push_back(std::move(del));
  }
  return out;
}

std::string_view TypeTagName(TypeTag tag) {
  switch (tag) {
    case TypeTag::kFinite: return "Finite";
    case TypeTag::kAffine: return "Affine";
    case TypeTag::kIndefinite: return "Indefinite";
  }
  return "?";
}

std::string_view HyperbolicStatusName(HyperbolicStatus status) {
  switch (status) {
    case HyperbolicStatus::kHyperbolic: return "hyperbolic";
    case HyperbolicStatus::kNotIndefinite: return "not-indefinite";
    case HyperbolicStatus::kNotSymmetrizable: return "not-symmetrizable";
    case HyperbolicStatus::kDecomposable: return "decomposable";
    case HyperbolicStatus::kIndefiniteSubdiagram:
      return "indefinite-proper-subdiagram";
  }
  return "?";
}

}  // namespace vogankm

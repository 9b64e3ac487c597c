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

#include "oracle.h"

#include <algorithm>
#include <numeric>

namespace oracle {
namespace {

IntMatrix Minor(const IntMatrix& m, std::size_t skip_col) {
  IntMatrix out;
  for (std::size_t i = 1; i < m.size(); ++i) {
    std::vector<long long> row;
    for (std::size_t j = 0; j < m.size(); ++j) {
      if (j != skip_col) row.push_back(m[i][j]);
    }
    out.push_back(row);
  }
  return out;
}

bool Connected(const vogankm::CartanMatrix& g, const std::vector<int>& vs) {
  if (vs.empty()) return false;
  std::vector<int> seen = {vs[0]};
  for (std::size_t k = 0; k < seen.size(); ++k) {
    for (int w : vs) {
      if (g(seen[k], w) != 0 && w != seen[k] &&
          std::find(seen.begin(), seen.end(), w) == seen.end()) {
        seen.push_back(w);
      }
    }
  }
  return seen.size() == vs.size();
}

IntMatrix Symmetrized(const vogankm::CartanMatrix& g,
                      const std::vector<long long>& d,
                      const std::vector<int>& vs) {
  IntMatrix b;
  for (int i : vs) {
    std::vector<long long> row;
    for (int j : vs) row.push_back(d[i] * g(i, j));
    b.push_back(row);
  }
  return b;
}

vogankm::CartanMatrix Restrict(const vogankm::CartanMatrix& g,
                               const std::vector<int>& vs) {
  std::vector<std::vector<int>> rows;
  for (int i : vs) {
    std::vector<int> row;
    for (int j : vs) row.push_back(g(i, j));
    rows.push_back(row);
  }
  return vogankm::CartanMatrix::Validate(rows);
}

}  // namespace

long long CofactorDeterminant(const IntMatrix& m) {
  if (m.empty()) return 1;
  if (m.size() == 1) return m[0][0];
  long long det = 0;
  for (std::size_t j = 0; j < m.size(); ++j) {
    if (m[0][j] == 0) continue;
    const long long sign = j % 2 == 0 ? 1 : -1;
    det += sign * m[0][j] * CofactorDeterminant(Minor(m, j));
  }
  return det;
}

std::optional<std::vector<long long>> BruteSymmetrizer(
    const vogankm::CartanMatrix& g, int bound) {
  const int n = g.rank();
  std::vector<long long> d(n, 0);
  std::vector<bool> placed(n, false);
  // Each connected component is searched on its own, visiting its vertices
  // in breadth-first order and rejecting a prefix as soon as one of its
  // pairwise equations fails.
  for (int root = 0; root < n; ++root) {
    if (placed[root]) continue;
    std::vector<int> order = {root};
    placed[root] = true;
    for (std::size_t k = 0; k < order.size(); ++k) {
      for (int w = 0; w < n; ++w) {
        if (!placed[w] && g(order[k], w) != 0) {
          placed[w] = true;
          order.push_back(w);
        }
      }
    }
    auto fill = [&](auto&& self, std::size_t k) -> bool {
      if (k == order.size()) return true;
      const int v = order[k];
      for (long long x = 1; x <= bound; ++x) {
        d[v] = x;
        bool ok = true;
        for (std::size_t i = 0; i < k && ok; ++i) {
          ok = d[order[i]] * g(order[i], v) == x * g(v, order[i]);
        }
        if (ok && self(self, k + 1)) return true;
      }
      return false;
    };
    if (!fill(fill, 0)) return std::nullopt;
  }
  return d;
}

Kind ClassifyByAllMinors(const vogankm::CartanMatrix& g) {
  const int n = g.rank();
  const auto d = BruteSymmetrizer(g);
  if (!d) return Kind::kIndefinite;
  bool proper_positive = true;
  for (std::uint32_t s = 1; s + 1 < (1U << n); ++s) {
    std::vector<int> vs;
    for (int v = 0; v < n; ++v) {
      if ((s >> v) & 1U) vs.push_back(v);
    }
    if (CofactorDeterminant(Symmetrized(g, *d, vs)) <= 0) {
      proper_positive = false;
    }
  }
  std::vector<int> all(n);
  std::iota(all.begin(), all.end(), 0);
  const long long det = CofactorDeterminant(Symmetrized(g, *d, all));
  if (proper_positive && det > 0) return Kind::kFinite;
  if (proper_positive && det == 0) return Kind::kAffine;
  return Kind::kIndefinite;
}

bool IsHyperbolicBySubsets(const vogankm::CartanMatrix& g) {
  const int n = g.rank();
  std::vector<int> all(n);
  std::iota(all.begin(), all.end(), 0);
  if (!Connected(g, all) || !BruteSymmetrizer(g)) return false;
  if (ClassifyByAllMinors(g) != Kind::kIndefinite) return false;
  for (std::uint32_t s = 1; s + 1 < (1U << n); ++s) {
    std::vector<int> vs;
    for (int v = 0; v < n; ++v) {
      if ((s >> v) & 1U) vs.push_back(v);
    }
    if (!Connected(g, vs)) continue;
    if (ClassifyByAllMinors(Restrict(g, vs)) == Kind::kIndefinite) {
      return false;
    }
  }
  return true;
}

std::vector<std::vector<int>> BruteAutomorphisms(
    const vogankm::CartanMatrix& g) {
  std::vector<int> p(g.rank());
  std::iota(p.begin(), p.end(), 0);
  std::vector<std::vector<int>> out;
  do {
    bool ok = true;
    for (int i = 0; i < g.rank() && ok; ++i) {
      for (int j = 0; j < g.rank() && ok; ++j) ok = g(p[i], p[j]) == g(i, j);
    }
    if (ok) out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

std::vector<int> BruteCanonicalCode(const vogankm::CartanMatrix& g) {
  std::vector<int> p(g.rank());
  std::iota(p.begin(), p.end(), 0);
  std::vector<int> best;
  do {
    std::vector<int> code;
    for (int i = 0; i < g.rank(); ++i) {
      for (int j = 0; j < g.rank(); ++j) code.push_back(g(p[i], p[j]));
    }
    if (best.empty() || code < best) best = code;
  } while (std::next_permutation(p.begin(), p.end()));
  return best;
}

std::uint64_t ProseFMove(const vogankm::CartanMatrix& g,
                         const std::vector<int>& sigma, std::uint64_t painted,
                         int i) {
  std::uint64_t out = painted;
  for (int j = 0; j < g.rank(); ++j) {
    if (j == i || sigma[j] != j || g(i, j) == 0) continue;
    const int lines = g(i, j) * g(j, i);
    bool flip = true;
    if (lines == 2) {
      // j is long exactly when |a[i][j]| = 2.
      flip = g(i, j) != -2;
    } else if (lines >= 4) {
      flip = g(i, j) % 2 != 0;
    }
    if (flip) out ^= std::uint64_t{1} << j;
  }
  return out;
}

std::vector<std::uint64_t> NaiveClosure(const vogankm::CartanMatrix& g,
                                        const std::vector<int>& sigma) {
  const int n = g.rank();
  std::uint64_t fixed = 0;
  for (int v = 0; v < n; ++v) {
    if (sigma[v] == v) fixed |= std::uint64_t{1} << v;
  }
  std::vector<std::vector<int>> relabel;
  for (const auto& p : BruteAutomorphisms(g)) {
    bool commutes = true;
    for (int v = 0; v < n; ++v) commutes &= p[sigma[v]] == sigma[p[v]];
    if (commutes) relabel.push_back(p);
  }
  const std::uint64_t total = std::uint64_t{1} << n;
  std::vector<std::uint64_t> label(total, UINT64_MAX);
  for (std::uint64_t m = 0; m < total; ++m) {
    if ((m & ~fixed) == 0) label[m] = m;
  }
  // Orders masks by (cardinality, sorted vertex list).
  auto less = [](std::uint64_t a, std::uint64_t b) {
    const int ca = __builtin_popcountll(a), cb = __builtin_popcountll(b);
    if (ca != cb) return ca < cb;
    while (a != b) {
      const int la = __builtin_ctzll(a), lb = __builtin_ctzll(b);
      if (la != lb) return la < lb;
      a &= a - 1;
      b &= b - 1;
    }
    return false;
  };
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::uint64_t m = 0; m < total; ++m) {
      if (label[m] == UINT64_MAX) continue;
      std::vector<std::uint64_t> next;
      for (int i = 0; i < n; ++i) {
        if ((m >> i) & 1U) next.push_back(ProseFMove(g, sigma, m, i));
      }
      for (const auto& p : relabel) {
        std::uint64_t q = 0;
        for (int v = 0; v < n; ++v) {
          if ((m >> v) & 1U) q |= std::uint64_t{1} << p[v];
        }
        next.push_back(q);
      }
      for (std::uint64_t q : next) {
        if (less(label[q], label[m])) {
          label[m] = label[q];
          changed = true;
        } else if (less(label[m], label[q])) {
          label[q] = label[m];
          changed = true;
        }
      }
    }
  }
  return label;
}

}  // namespace oracle

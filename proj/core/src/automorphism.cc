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

#include "vogankm/automorphism.h"

#include <algorithm>
#include <map>
#include <numeric>
#include <utility>

#include "vogankm/error.h"

namespace vogankm {
namespace {

// Isomorphism-invariant vertex colour: the sorted multiset of nonzero
// (a[v][j], a[j][v]) pairs, ranked among the distinct colours of g.
std::vector<int> VertexColors(const CartanMatrix& g) {
  const int n = g.rank();
  std::vector<std::vector<std::pair<int, int>>> sig(n);
  for (int v = 0; v < n; ++v) {
    for (int j = 0; j < n; ++j) {
      if (g.Adjacent(v, j)) sig[v].emplace_back(g(v, j), g(j, v));
    }
    std::sort(sig[v].begin(), sig[v].end());
  }
  std::map<std::vector<std::pair<int, int>>, int> rank;
  for (const auto& s : sig) rank.emplace(s, 0);
  int next = 0;
  for (auto& [key, value] : rank) value = next++;
  std::vector<int> colors(n);
  for (int v = 0; v < n; ++v) colors[v] = rank.at(sig[v]);
  return colors;
}

class AutomorphismSearch {
 public:
  explicit AutomorphismSearch(const CartanMatrix& g)
      : g_(g), colors_(VertexColors(g)), image_(g.rank(), -1),
        used_(g.rank(), false) {}

  std::vector<Permutation> Run() {
    Extend(0);
    return std::move(found_);
  }

 private:
  void Extend(int k) {
    const int n = g_.rank();
    if (k == n) {
      found_.push_back(image_);
      return;
    }
    for (int w = 0; w < n; ++w) {
      if (used_[w] || colors_[w] != colors_[k]) continue;
      bool ok = true;
      for (int m = 0; m < k && ok; ++m) {
        ok = g_(w, image_[m]) == g_(k, m) && g_(image_[m], w) == g_(m, k);
      }
      if (!ok) continue;
      image_[k] = w;
      used_[w] = true;
      Extend(k + 1);
      used_[w] = false;
      image_[k] = -1;
    }
  }

  const CartanMatrix& g_;
  std::vector<int> colors_;
  Permutation image_;
  std::vector<bool> used_;
  std::vector<Permutation> found_;
};

class CanonicalSearch {
 public:
  explicit CanonicalSearch(const CartanMatrix& g)
      : g_(g), colors_(VertexColors(g)), used_(g.rank(), false) {}

  CanonicalForm Run() {
    code_.push_back(g_.rank());
    Extend();
    return CanonicalForm{std::move(best_code_), std::move(best_order_)};
  }

 private:
  std::vector<int> Chunk(int v) const {
    std::vector<int> chunk = {colors_[v]};
    for (int u : order_) {
      chunk.push_back(g_(v, u));
      chunk.push_back(g_(u, v));
    }
    return chunk;
  }

  // Returns <0, 0, >0 comparing the current partial code with the same-length
  // prefix of the best complete code found so far.
  int ComparePrefix() const {
    if (best_code_.empty()) return -1;
    for (std::size_t i = 0; i < code_.size(); ++i) {
      if (code_[i] != best_code_[i]) return code_[i] < best_code_[i] ? -1 : 1;
    }
    return 0;
  }

  void Extend() {
    const int n = g_.rank();
    if (static_cast<int>(order_.size()) == n) {
      if (best_code_.empty() || code_ < best_code_) {
        best_code_ = code_;
        best_order_ = order_;
      }
      return;
    }
    // Only vertices producing the least next chunk can extend to the
    // least complete code.
    std::vector<int> candidates;
    std::vector<int> least;
    for (int v = 0; v < n; ++v) {
      if (used_[v]) continue;
      std::vector<int> chunk = Chunk(v);
      if (candidates.empty() || chunk < least) {
        least = std::move(chunk);
        candidates = {v};
      } else if (chunk == least) {
        candidates.push_back(v);
      }
    }
    const std::size_t mark = code_.size();
    code_.insert(code_.end(), least.begin(), least.end());
    if (ComparePrefix() <= 0) {
      for (int v : candidates) {
        used_[v] = true;
        order_.push_back(v);
        Extend();
        order_.pop_back();
        used_[v] = false;
      }
    }
    code_.resize(mark);
  }

  const CartanMatrix& g_;
  std::vector<int> colors_;
  std::vector<bool> used_;
  std::vector<int> order_;
  std::vector<int> code_;
  std::vector<int> best_code_;
  std::vector<int> best_order_;
};

}  // namespace

Permutation IdentityPermutation(int n) {
  Permutation p(n);
  std::iota(p.begin(), p.end(), 0);
  return p;
}

Permutation Compose(const Permutation& outer, const Permutation& inner) {
  Permutation out(inner.size());
  for (std::size_t i = 0; i < inner.size(); ++i) out[i] = outer[inner[i]];
  return out;
}

Permutation Inverse(const Permutation& p) {
  Permutation out(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) out[p[i]] = static_cast<int>(i);
  return out;
}

bool IsIdentity(const Permutation& p) {
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] != static_cast<int>(i)) return false;
  }
  return true;
}

bool IsInvolution(const Permutation& p) {
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] < 0 || p[i] >= static_cast<int>(p.size())) return false;
    if (p[p[i]] != static_cast<int>(i)) return false;
  }
  return true;
}

bool PreservesMatrix(const CartanMatrix& g, const Permutation& p) {
  if (static_cast<int>(p.size()) != g.rank()) return false;
  std::vector<bool> hit(p.size(), false);
  for (int v : p) {
    if (v < 0 || v >= g.rank() || hit[v]) return false;
    hit[v] = true;
  }
  for (int i = 0; i < g.rank(); ++i) {
    for (int j = 0; j < g.rank(); ++j) {
      if (g(p[i], p[j]) != g(i, j)) return false;
    }
  }
  return true;
}

std::vector<Permutation> Automorphisms(const CartanMatrix& g) {
  if (g.rank() > kMaxAutomorphismRank) {
    throw Error(ErrorCode::kRankTooLarge,
                "automorphism search supports rank <= " +
                    std::to_string(kMaxAutomorphismRank) + ", got " +
                    std::to_string(g.rank()));
  }
  return AutomorphismSearch(g).Run();
}

CanonicalForm ComputeCanonicalForm(const CartanMatrix& g) {
  return CanonicalSearch(g).Run();
}

CartanMatrix CanonicalMatrix(const CartanMatrix& g) {
  const CanonicalForm form = ComputeCanonicalForm(g);
  const int n = g.rank();
  std::vector<std::vector<int>> rows(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) rows[a][b] = g(form.order[a], form.order[b]);
  }
  return CartanMatrix::Validate(rows, g.name());
}

bool Isomorphic(const CartanMatrix& a, const CartanMatrix& b) {
  return a.rank() == b.rank() &&
         ComputeCanonicalForm(a) == ComputeCanonicalForm(b);
}

}  // namespace vogankm

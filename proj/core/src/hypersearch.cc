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

#include "vogankm/hypersearch.h"

#include <algorithm>
#include <map>

#include "vogankm/automorphism.h"
#include "vogankm/error.h"

namespace vogankm {
namespace {

enum class Target { kHyperbolic, kFiniteAffine };

struct Label {
  int x;  // -a[new][j]
  int y;  // -a[j][new]
};

std::vector<Label> EdgeChoices(int max_label, bool allow_bold) {
  std::vector<Label> out = {{0, 0}};
  for (int x = 1; x <= max_label; ++x) {
    for (int y = 1; y <= max_label; ++y) {
      if (allow_bold || x * y <= 4) out.push_back({x, y});
    }
  }
  return out;
}

// True when the component of `v` in the subdiagram induced on `vertices` is
// finite or affine.
bool ComponentFiniteOrAffine(const CartanMatrix& g,
                             const std::vector<int>& vertices, int v) {
  for (const VertexSet& comp : ConnectedComponents(g, vertices)) {
    if (std::find(comp.begin(), comp.end(), v) != comp.end()) {
      return IsFiniteOrAffine(g, comp);
    }
  }
  return true;
}

class Extender {
 public:
  Extender(const CartanMatrix& base, int max_label, Target target,
           bool require_connected, bool prune)
      : base_(base), n_(base.rank()), target_(target),
        require_connected_(require_connected), prune_(prune),
        choices_(EdgeChoices(max_label, base.rank() + 1 <= 2)) {
    rows_.assign(n_ + 1, std::vector<int>(n_ + 1, 0));
    for (int i = 0; i <= n_; ++i) rows_[i][i] = 2;
    for (int i = 0; i < n_; ++i) {
      for (int j = 0; j < n_; ++j) rows_[i][j] = base(i, j);
    }
  }

  std::vector<ExtensionCandidate> Run() {
    Assign(0, false);
    return std::move(found_);
  }

 private:
  void Assign(int j, bool connected) {
    if (j == n_) {
      if (require_connected_ && !connected) return;
      Emit();
      return;
    }
    for (const Label& c : choices_) {
      rows_[n_][j] = -c.x;
      rows_[j][n_] = -c.y;
      if (c.x != 0 && prune_ && !PartialOk(j)) continue;
      Assign(j + 1, connected || c.x != 0);
    }
    rows_[n_][j] = 0;
    rows_[j][n_] = 0;
  }

  // The subdiagram on {0..j, new} must stay finite or affine whenever it is a
  // proper subdiagram (hyperbolic target) or always (finite/affine target).
  bool PartialOk(int j) const {
    if (target_ == Target::kHyperbolic && j == n_ - 1) return true;
    std::vector<int> vertices;
    for (int v = 0; v <= j; ++v) vertices.push_back(v);
    vertices.push_back(n_);
    const CartanMatrix g = CartanMatrix::Validate(rows_);
    return ComponentFiniteOrAffine(g, vertices, n_);
  }

  void Emit() {
    CartanMatrix result = CartanMatrix::Validate(rows_);
    if (prune_) {
      if (target_ == Target::kHyperbolic && !Classify(result).hyperbolic) {
        return;
      }
      if (target_ == Target::kFiniteAffine) {
        std::vector<int> all(n_ + 1);
        for (int v = 0; v <= n_; ++v) all[v] = v;
        if (!ComponentFiniteOrAffine(result, all, n_)) return;
      }
    }
    ExtensionCandidate cand{base_, std::vector<int>(n_), std::vector<int>(n_),
                            std::move(result)};
    for (int j = 0; j < n_; ++j) {
      cand.new_row[j] = rows_[n_][j];
      cand.new_col[j] = rows_[j][n_];
    }
    found_.push_back(std::move(cand));
  }

  const CartanMatrix& base_;
  int n_;
  Target target_;
  bool require_connected_;
  bool prune_;
  std::vector<Label> choices_;
  std::vector<std::vector<int>> rows_;
  std::vector<ExtensionCandidate> found_;
};

void Collect(std::map<std::vector<int>, CartanMatrix>& unique,
             std::vector<ExtensionCandidate>&& candidates) {
  for (ExtensionCandidate& c : candidates) {
    unique.try_emplace(ComputeCanonicalForm(c.result).code,
                       std::move(c.result));
  }
}

std::vector<CartanMatrix> Values(std::map<std::vector<int>, CartanMatrix>& m) {
  std::vector<CartanMatrix> out;
  for (auto& [code, g] : m) out.push_back(std::move(g));
  return out;
}

bool AllFiniteOrAffine(const CartanMatrix& g) {
  std::vector<int> all(g.rank());
  for (int v = 0; v < g.rank(); ++v) all[v] = v;
  return IsFiniteOrAffine(g, all);
}

}  // namespace

std::vector<ExtensionCandidate> ExtensionCandidates(const CartanMatrix& base,
                                                    const ExtendOptions& opts) {
  if (opts.hyperbolic_only && !AllFiniteOrAffine(base)) return {};
  return Extender(base, opts.max_label, Target::kHyperbolic, true,
                  opts.hyperbolic_only)
      .Run();
}

std::vector<CartanMatrix> Extend(const CartanMatrix& base, int max_label) {
  std::map<std::vector<int>, CartanMatrix> unique;
  Collect(unique, ExtensionCandidates(base, {max_label, true}));
  return Values(unique);
}

std::vector<CartanMatrix> FiniteAffineDiagrams(int rank, int max_label) {
  if (rank > kMaxCensusRank) {
    throw Error(ErrorCode::kRankBoundExceeded,
                "rank " + std::to_string(rank) + " exceeds the census bound " +
                    std::to_string(kMaxCensusRank));
  }
  std::vector<CartanMatrix> level = {CartanMatrix::Validate({{2}})};
  if (rank < 1) return {};
  for (int m = 1; m < rank; ++m) {
    std::map<std::vector<int>, CartanMatrix> unique;
    for (const CartanMatrix& base : level) {
      Collect(unique, Extender(base, max_label, Target::kFiniteAffine, false,
                               true)
                          .Run());
    }
    level = Values(unique);
  }
  return level;
}

std::vector<CartanMatrix> Census(int rank, int max_label) {
  if (rank > kMaxCensusRank) {
    throw Error(ErrorCode::kRankBoundExceeded,
                "rank " + std::to_string(rank) + " exceeds the census bound " +
                    std::to_string(kMaxCensusRank));
  }
  if (rank < 2) return {};
  std::map<std::vector<int>, CartanMatrix> unique;
  for (const CartanMatrix& base : FiniteAffineDiagrams(rank - 1, max_label)) {
    Collect(unique, ExtensionCandidates(base, {max_label, true}));
  }
  return Values(unique);
}

}  // namespace vogankm

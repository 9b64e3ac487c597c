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

#include "vogankm/dynkin.h"

#include <algorithm>

namespace vogankm {

DynkinDiagram DynkinDiagram::FromMatrix(const CartanMatrix& g) {
  DynkinDiagram d;
  d.rank_ = g.rank();
  for (int i = 0; i < g.rank(); ++i) {
    for (int j = i + 1; j < g.rank(); ++j) {
      if (g(i, j) == 0) continue;
      DynkinEdge e{i, j, -g(i, j), -g(j, i), EdgeStyle::kSimple, 1,
                   Arrow::kNone};
      const int product = e.label_first * e.label_second;
      if (product > 4) {
        e.style = EdgeStyle::kBold;
      } else if (product > 1) {
        e.style = EdgeStyle::kMultiple;
        e.lines = product;
        const bool to_first = e.label_first > 1;
        const bool to_second = e.label_second > 1;
        e.arrow = to_first && to_second ? Arrow::kBoth
                  : to_first            ? Arrow::kTowardFirst
                                        : Arrow::kTowardSecond;
      }
      d.edges_.push_back(e);
    }
  }
  return d;
}

std::vector<int> DynkinDiagram::Neighbors(int v) const {
  std::vector<int> out;
  for (const DynkinEdge& e : edges_) {
    if (e.first == v) out.push_back(e.second);
    if (e.second == v) out.push_back(e.first);
  }
  std::sort(out.begin(), out.end());
  return out;
}

CartanMatrix DynkinDiagram::ToMatrix() const {
  std::vector<std::vector<int>> rows(rank_, std::vector<int>(rank_, 0));
  for (int i = 0; i < rank_; ++i) rows[i][i] = 2;
  for (const DynkinEdge& e : edges_) {
    rows[e.first][e.second] = -e.label_first;
    rows[e.second][e.first] = -e.label_second;
  }
  return CartanMatrix::Validate(rows);
}

}  // namespace vogankm

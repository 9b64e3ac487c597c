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

#ifndef VOGANKM_DYNKIN_H_
#define VOGANKM_DYNKIN_H_

#include <vector>

#include "vogankm/gcm.h"

namespace vogankm {

enum class EdgeStyle {
  kSimple,    // (1,1)
  kMultiple,  // product 2..4: that many lines, arrow towards the short root
  kBold,      // product > 4: bold line annotated with the ordered pair
};

enum class Arrow { kNone, kTowardFirst, kTowardSecond, kBoth };

struct DynkinEdge {
  int first;   // first < second
  int second;
  int label_first;   // |a[first][second]|
  int label_second;  // |a[second][first]|
  EdgeStyle style;
  int lines;  // product of the labels for simple/multiple edges, 1 for bold
  Arrow arrow;

  friend bool operator==(const DynkinEdge&, const DynkinEdge&) = default;
};

// Labelled-graph view of a GCM. It carries exactly the information of the
// matrix, so ToMatrix(FromMatrix(g)) == g.
class DynkinDiagram {
 public:
  static DynkinDiagram FromMatrix(const CartanMatrix& g);

  int rank() const { return rank_; }
  const std::vector<DynkinEdge>& edges() const { return edges_; }
  std::vector<int> Neighbors(int v) const;

  CartanMatrix ToMatrix() const;

  friend bool operator==(const DynkinDiagram&, const DynkinDiagram&) = default;

 private:
  int rank_ = 0;
  std::vector<DynkinEdge> edges_;
};

}  // namespace vogankm

#endif  // VOGANKM_DYNKIN_H_

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

#include "vogankm/catalog.h"

#include <algorithm>
#include <sstream>

#include "vogankm/dynkin.h"
#include "vogankm/error.h"

namespace vogankm {
namespace {

// (i, j, x, y) sets a[i][j] = -x and a[j][i] = -y.
struct EdgeSpec {
  int i;
  int j;
  int x = 1;
  int y = 1;
};

CartanMatrix FromEdges(int n, const std::vector<EdgeSpec>& edges, int base,
                       std::string name) {
  std::vector<std::vector<int>> rows(n, std::vector<int>(n, 0));
  for (int v = 0; v < n; ++v) rows[v][v] = 2;
  for (const EdgeSpec& e : edges) {
    rows[e.i - base][e.j - base] = -e.x;
    rows[e.j - base][e.i - base] = -e.y;
  }
  return CartanMatrix::Validate(rows, std::move(name));
}

std::vector<std::string> NumericLabels(int n, int first) {
  std::vector<std::string> out;
  for (int v = 0; v < n; ++v) out.push_back(std::to_string(first + v));
  return out;
}

std::vector<std::string> SplitLabels(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

// Paintings are written as comma-separated label lists, e.g. "1,2,4".
ClaimedClass Claim(const std::vector<std::string>& labels, std::string id,
                   const std::vector<std::string>& paintings,
                   std::string quote, bool distinct = true) {
  ClaimedClass c;
  c.id = std::move(id);
  c.distinct = distinct;
  c.quote = std::move(quote);
  for (const std::string& p : paintings) {
    c.paintings.push_back(PaintingFromLabels(labels, SplitLabels(p)));
  }
  return c;
}

LemmaInstance Instance(const std::string& left, const std::string& right,
                       std::string description) {
  return {SplitLabels(left), SplitLabels(right), std::move(description)};
}

CatalogEntry Make(std::string name, int n, const std::vector<EdgeSpec>& edges,
                  Provenance provenance, std::string notes) {
  CatalogEntry e{name, FromEdges(n, edges, 1, name), NumericLabels(n, 1),
                 {}, provenance, std::move(notes), {}, {}};
  return e;
}

CatalogEntry E10() {
  const int n = 10;
  std::vector<EdgeSpec> edges = {{0, 3}};
  for (int v = 1; v < 9; ++v) edges.push_back({v, v + 1});
  CatalogEntry e{"E10", FromEdges(n, edges, 0, "E10"), NumericLabels(n, 0),
                 {"α8", "α1", "α2", "α3", "α4", "α5", "α6", "α7", "α0", "α-1"},
                 Provenance::kFigureCertain,
                 "Chain 1-2-...-9 with vertex 0 on the trivalent node 3. "
                 "Vertex 8 is the affine vertex α0 and vertex 9 the "
                 "overextended vertex α-1.",
                 {},
                 {}};
  const auto& l = e.labels;
  e.claims = {
      Claim(l, "1", {"1", "5", "0,4", "0,9", "0,8"},
            "1∼5∼(0,4)∼(0,9)∼(0,8)"),
      Claim(l, "2",
            {"2", "3", "7", "8", "0,7", "0,6", "0", "4", "6", "9", "0,3", "0,1",
             "0,2", "0,5"},
            "2∼3∼7∼8∼(0,7)∼(0,6)∼0∼4∼6∼9∼(0,3)∼(0,1)∼(0,2)∼(0,5)∼(0,7)"),
      Claim(l, "chain", {"9,8,6", "8,7", "0,7", "0"},
            "(9,8,6)∼(8,7)∼(0,7)∼(0) by F<8,7,0>", false),
  };
  for (int q = 4; q <= 9; ++q) {
    const std::string qs = std::to_string(q);
    const std::string qm = std::to_string(q - 1);
    e.lemma_instances.push_back(
        Instance("1," + qs, "0," + qm, "(1,q)∼(0,q-1), q=" + qs));
    e.lemma_instances.push_back(
        Instance("0,1," + qs, qm, "(0,1,q)∼(q-1), q=" + qs));
    for (int p = 2; p <= 3; ++p) {
      const std::string ps = std::to_string(p);
      const std::string pm = std::to_string(p - 1);
      e.lemma_instances.push_back(
          Instance(ps + "," + qs, "0," + pm + "," + qm,
                   "(p,q)∼(0,p-1,q-1), p=" + ps + " q=" + qs));
      e.lemma_instances.push_back(
          Instance("0," + ps + "," + qs, pm + "," + qm,
                   "(0,p,q)∼(p-1,q-1), p=" + ps + " q=" + qs));
    }
  }
  return e;
}

std::vector<CatalogEntry> Build() {
  using P = Provenance;
  std::vector<CatalogEntry> out;
  out.push_back(E10());

  {
    CatalogEntry e = Make("Example2-rank4", 4, {{1, 2}, {2, 3}, {1, 3}, {2, 4}},
                          P::kFigureCertain,
                          "Triangle 1-2-3 with pendant 4 on vertex 2.");
    e.claims = {Claim(e.labels, "a", {"1", "3", "4"}, "1∼ 3∼ 4"),
                Claim(e.labels, "b", {"2"}, "2")};
    out.push_back(std::move(e));
  }
  {
    CatalogEntry e =
        Make("Example3-rank4", 4, {{1, 2}, {2, 3}, {3, 4}, {4, 1}, {2, 4}},
             P::kFigureCertain, "Square 1-2-3-4 with diagonal 2-4.");
    e.claims = {Claim(e.labels, "a", {"3", "1", "1,2,4", "3,4"},
                      "3 ∼ 1 (by symmetry) ∼ (1,2,4) ∼ (3,4)"),
                Claim(e.labels, "b", {"4", "2"}, "4 ∼ 2 by symmetry")};
    out.push_back(std::move(e));
  }
  {
    CatalogEntry e = Make(
        "Example4-rank5", 5, {{1, 3}, {2, 3}, {3, 4, 1, 2}, {4, 5}},
        P::kFigureInferred,
        "Double edge 3-4 drawn with the long-to-short macro from vertex 3; "
        "read as 3 long, 4 short.");
    e.claims = {Claim(e.labels, "a", {"1", "2", "3"}, "1∼ 2 ∼ 3"),
                Claim(e.labels, "b", {"4", "4,5", "5"}, "4 ∼ (4,5) ∼ 5")};
    out.push_back(std::move(e));
  }
  {
    CatalogEntry e = Make(
        "Example5-rank5", 5, {{1, 2}, {2, 3}, {1, 5, 1, 2}, {3, 4, 1, 2}, {4, 5}},
        P::kFigureCertain,
        "Pentagon 1-2-3-4-5 with double edges 1-5 and 3-4; arrowheads drawn "
        "explicitly toward 5 and 4.");
    e.claims = {
        Claim(e.labels, "a", {"2", "1,2,3"}, "2∼ (1,2,3)"),
        Claim(e.labels, "b", {"5", "4,5", "2,3,4,5", "4"},
              "5∼ (4,5)∼ (2,3,4,5) ∼4∼ (4,5)"),
        Claim(e.labels, "c", {"1", "1,2,5", "2,3,5", "3", "2,3,4", "1,2,4"},
              "1∼ (1,2,5)∼ (2,3,5) ∼ 3 ∼ (2,3,4)∼ (1,2,4)"),
    };
    out.push_back(std::move(e));
  }
  {
    CatalogEntry e = Make(
        "Example6-rank5", 5, {{1, 2, 2, 1}, {2, 3}, {3, 4, 1, 2}, {3, 5}},
        P::kFigureInferred,
        "Double edges 1-2 and 3-4 drawn with macros; read as 1 short, 2 long "
        "and 3 long, 4 short.");
    e.claims = {Claim(e.labels, "a", {"1"}, "1"),
                Claim(e.labels, "b", {"4"}, "4"),
                Claim(e.labels, "c", {"5"}, "5"),
                Claim(e.labels, "d", {"3"}, "3"),
                Claim(e.labels, "e", {"2"}, "2")};
    out.push_back(std::move(e));
  }
  {
    CatalogEntry e = Make("GG3", 3, {{1, 2, 3, 1}, {2, 3, 1, 3}},
                          P::kFigureInferred,
                          "Two triple edges meeting at the long vertex 2; "
                          "ends 1 and 3 short, so 1 and 3 are symmetric.");
    e.claims = {Claim(e.labels, "a", {"1", "3"}, "1∼ 3 by symmetry"),
                Claim(e.labels, "b", {"2", "1,2,3"}, "2∼ (1,2,3)")};
    out.push_back(std::move(e));
  }
  {
    CatalogEntry e = Make("G'G3", 3, {{1, 2, 1, 3}, {2, 3, 1, 3}},
                          P::kFigureInferred,
                          "Triple edges 1-2 (2 short) and 2-3 (3 short).");
    e.claims = {Claim(e.labels, "a", {"1", "2"}, "1∼2"),
                Claim(e.labels, "b", {"3"}, "3")};
    out.push_back(std::move(e));
  }
  {
    CatalogEntry e = Make("G'G'3", 3, {{1, 2, 1, 3}, {2, 3, 3, 1}},
                          P::kFigureInferred,
                          "Two triple edges with vertex 2 short; ends 1 and 3 "
                          "long and symmetric.");
    e.claims = {Claim(e.labels, "a", {"1", "3"}, "1∼ 3"),
                Claim(e.labels, "b", {"2"}, "2∼2")};
    out.push_back(std::move(e));
  }
  {
    CatalogEntry e = Make(
        "AC2(1)", 3, {{1, 2}, {1, 3, 1, 2}, {2, 3, 1, 2}}, P::kFigureInferred,
        "Triangle: simple edge 1-2, double edges from 1 and 2 to vertex 3, "
        "read with 3 short.");
    e.claims = {Claim(e.labels, "a", {"1", "1,2,3", "2"}, "1∼ (1,2,3)∼ 2"),
                Claim(e.labels, "b", {"3"}, "3")};
    out.push_back(std::move(e));
  }
  {
    CatalogEntry e = Make(
        "AD3(2)", 3, {{1, 2}, {1, 3, 2, 1}, {2, 3, 2, 1}}, P::kFigureInferred,
        "Triangle: simple edge 1-2, double edges from 1 and 2 to vertex 3, "
        "read with 3 long.");
    e.claims = {Claim(e.labels, "a", {"1", "1,2", "2"}, "1∼ (1,2)∼ 2"),
                Claim(e.labels, "b", {"3", "1,2,3"}, "3∼(1,2,3)")};
    out.push_back(std::move(e));
  }
  {
    CatalogEntry e = Make(
        "AGG3", 3, {{1, 2}, {1, 3, 3, 1}, {2, 3, 3, 1}}, P::kFigureInferred,
        "Triangle: simple edge 1-2, triple edges from 1 and 2 to vertex 3, "
        "read with 3 long.");
    e.claims = {Claim(e.labels, "a", {"1", "1,2", "2"}, "1∼ (1,2)∼ 2"),
                Claim(e.labels, "b", {"3", "1,2,3"}, "3∼(1,2,3)")};
    out.push_back(std::move(e));
  }
  {
    CatalogEntry e = Make(
        "AG'G'3", 3, {{1, 2}, {1, 3, 1, 3}, {2, 3, 1, 3}}, P::kFigureInferred,
        "Triangle: simple edge 1-2, triple edges from 1 and 2 to vertex 3, "
        "read with 3 short.");
    e.claims = {Claim(e.labels, "a", {"1", "1,2,3", "2"}, "1∼ (1,2,3)∼ 2"),
                Claim(e.labels, "b", {"3"}, "3∼3")};
    out.push_back(std::move(e));
  }
  {
    CatalogEntry e = Make(
        "AC3,4(1)", 4, {{1, 2, 1, 2}, {4, 3, 1, 2}, {1, 4}, {2, 3}},
        P::kFigureInferred,
        "Square with corners 1 top-left, 2 top-right, 3 bottom-right, 4 "
        "bottom-left; horizontal double edges read with the right-hand "
        "vertices 2 and 3 short.");
    e.claims = {Claim(e.labels, "a", {"1", "4"}, "By symmetry 1∼4"),
                Claim(e.labels, "b", {"2", "3"}, "By symmetry 2∼3")};
    out.push_back(std::move(e));
  }
  {
    CatalogEntry e = Make("HG2(1)", 4, {{1, 2, 3, 1}, {2, 3}, {3, 4}},
                          P::kFigureInferred,
                          "Triple edge 1-2 read with 1 short; chain 2-3-4.");
    e.claims = {
        Claim(e.labels, "a", {"1"}, "1∼ 1 by F<1>"),
        Claim(e.labels, "b", {"2", "1,2,3", "1,3,4", "4"},
              "2∼(1,2,3)∼(1,3,4)∼4 by F<2,3,4>"),
        Claim(e.labels, "c", {"3", "2,3,4", "2,4"}, "3∼(2,3,4)∼(2,4)"),
        Claim(e.labels, "d", {"4", "3,4", "2,3", "1,2"}, "4∼(3,4)∼(2,3)∼(1,2)"),
    };
    out.push_back(std::move(e));
  }
  {
    CatalogEntry e = Make("HF4(1)", 6,
                          {{1, 2}, {2, 3}, {3, 4}, {4, 5, 1, 2}, {5, 6}},
                          P::kFigureInferred,
                          "Chain 1-...-6 with double edge 4-5 read with 5 "
                          "short.");
    e.claims = {
        Claim(e.labels, "a", {"1", "1,2", "2,3", "3,4", "4,5", "4,5,6", "4,6"},
              "1∼(1,2)∼(2,3)∼(3,4)∼(4,5)∼(4,5,6)∼(4,6)"),
        Claim(e.labels, "b",
              {"2", "1,2,3", "1,3,4", "1,4,5", "1,4,5,6", "1,4,6"},
              "2∼(1,2,3)∼(1,3,4)∼(1,4,5)∼(1,4,5,6)∼(1,4,6)"),
        Claim(e.labels, "c", {"3", "2,3,4", "2,4,5", "2,4,5,6", "2,4,6"},
              "3∼(2,3,4)∼(2,4,5)∼(2,4,5,6)∼(2,4,6)"),
        Claim(e.labels, "d", {"4", "3,4,5", "3,4,5,6", "3,4,6"},
              "4∼(3,4,5)∼(3,4,5,6)∼(3,4,6)"),
        Claim(e.labels, "e", {"5", "5,6", "6"}, "5∼(5,6)∼ 6"),
    };
    out.push_back(std::move(e));
  }
  {
    CatalogEntry e = Make("HA2(2)", 3, {{1, 2}, {2, 3, 1, 4}},
                          P::kFigureInferred,
                          "Quadruple edge 2-3 labelled (1,4), read with 3 "
                          "short so that 2-3 is twisted affine A2(2).");
    e.claims = {Claim(e.labels, "a", {"1", "1,2", "1,2,3", "2"},
                      "1∼(1,2)∼ (1,2,3)∼2"),
                Claim(e.labels, "b", {"3"}, "3")};
    out.push_back(std::move(e));
  }
  {
    CatalogEntry e = Make("H'A2(2)", 3, {{1, 2}, {2, 3, 4, 1}},
                          P::kFigureInferred,
                          "Quadruple edge 2-3 labelled (4,1), read with 2 "
                          "short.");
    e.claims = {Claim(e.labels, "a", {"1", "1,2", "2"}, "1∼(1,2)∼2"),
                Claim(e.labels, "b", {"3", "2,3", "1,2,3", "1,3"},
                      "3∼(2,3)∼(1,2,3)∼(1,3)")};
    out.push_back(std::move(e));
  }
  {
    CatalogEntry e{"HC6(1)-instance", OverextendedC(4), NumericLabels(6, 1),
                   {}, P::kFigureInferred,
                   "Overextended C4(1): 1-2 simple, 2=>3 with 3 short, short "
                   "chain 3-4-5, 5<=6 with 6 long.",
                   {},
                   {}};
    e.matrix.set_name(e.name);
    e.claims = {
        Claim(e.labels, "a", {"1", "1,2", "1,2,3", "2"}, "1∼(1,2)∼(1,2,3)∼2"),
        Claim(e.labels, "b", {"3", "3,4", "4,5", "5"}, "3∼(3,4)∼(4,5)∼5"),
        Claim(e.labels, "c", {"4", "3,4,5", "3,5"}, "4∼(3,4,5)∼(3,5)"),
        Claim(e.labels, "d", {"5", "4,5", "5,6"}, "5∼(4,5)∼(5,6)"),
    };
    out.push_back(std::move(e));
  }
  {
    CatalogEntry e{"HD-family-instance", OverextendedD(6), NumericLabels(8, 1),
                   {}, P::kFigureCertain,
                   "Overextended D6(1), simply laced: 1-2, forks 2,3 at 4 and "
                   "7,8 at 6, chain 4-5-6.",
                   {},
                   {}};
    e.matrix.set_name(e.name);
    out.push_back(std::move(e));
  }
  {
    CatalogEntry e = Make(
        "H2D4(1)", 6, {{1, 2}, {2, 3}, {3, 4}, {3, 5}, {3, 6}},
        P::kFigureInferred,
        "Drawn with a double edge 2-3, which is not hyperbolic in either "
        "orientation; catalogued as the simply laced overextended D4(1) "
        "consistent with the symmetry 4∼5∼6.");
    e.claims = {Claim(e.labels, "a", {"1", "2"}, "1∼2"),
                Claim(e.labels, "b", {"4", "5", "6"}, "4∼5∼6"),
                Claim(e.labels, "c", {"3", "2,3,4,5,6"}, "3∼(2,3,4,5,6)")};
    out.push_back(std::move(e));
  }
  return out;
}

std::size_t EditDistance(std::string_view a, std::string_view b) {
  std::vector<std::size_t> prev(b.size() + 1), cur(b.size() + 1);
  for (std::size_t j = 0; j <= b.size(); ++j) prev[j] = j;
  for (std::size_t i = 1; i <= a.size(); ++i) {
    cur[0] = i;
    for (std::size_t j = 1; j <= b.size(); ++j) {
      const std::size_t sub = prev[j - 1] + (a[i - 1] == b[j - 1] ? 0 : 1);
      cur[j] = std::min({prev[j] + 1, cur[j - 1] + 1, sub});
    }
    std::swap(prev, cur);
  }
  return prev[b.size()];
}

}  // namespace

std::string_view ProvenanceName(Provenance p) {
  switch (p) {
    case Provenance::kFigureCertain:
      return "Figure-certain";
    case Provenance::kFigureInferred:
      return "Figure-inferred";
  }
  return "?";
}

CartanMatrix OverextendedC(int n) {
  if (n < 2) {
    throw Error(ErrorCode::kVertexOutOfRange,
                "overextended C_n needs n >= 2, got " + std::to_string(n));
  }
  std::vector<EdgeSpec> edges = {{1, 2}, {2, 3, 1, 2}};
  for (int v = 3; v < n + 1; ++v) edges.push_back({v, v + 1});
  edges.push_back({n + 1, n + 2, 2, 1});
  return FromEdges(n + 2, edges, 1, "HC" + std::to_string(n) + "(1)");
}

CartanMatrix OverextendedD(int n) {
  if (n < 4) {
    throw Error(ErrorCode::kVertexOutOfRange,
                "overextended D_n needs n >= 4, got " + std::to_string(n));
  }
  std::vector<EdgeSpec> edges = {{1, 2}, {2, 4}, {3, 4}};
  for (int v = 4; v < n; ++v) edges.push_back({v, v + 1});
  edges.push_back({n, n + 1});
  edges.push_back({n, n + 2});
  return FromEdges(n + 2, edges, 1, "HD" + std::to_string(n) + "(1)");
}

const std::vector<CatalogEntry>& Catalog() {
  static const std::vector<CatalogEntry> entries = Build();
  return entries;
}

std::vector<std::string> CatalogNames() {
  std::vector<std::string> out;
  for (const CatalogEntry& e : Catalog()) out.push_back(e.name);
  return out;
}

bool Contains(std::string_view name) {
  const auto& c = Catalog();
  return std::any_of(c.begin(), c.end(),
                     [&](const CatalogEntry& e) { return e.name == name; });
}

const CatalogEntry& Lookup(std::string_view name) {
  for (const CatalogEntry& e : Catalog()) {
    if (e.name == name) return e;
  }
  std::vector<std::pair<std::size_t, std::string>> ranked;
  for (const CatalogEntry& e : Catalog()) {
    ranked.emplace_back(EditDistance(name, e.name), e.name);
  }
  std::sort(ranked.begin(), ranked.end());
  std::string message = "unknown catalog entry '" + std::string(name) +
                        "'; nearest:";
  for (std::size_t k = 0; k < 3 && k < ranked.size(); ++k) {
    message += (k == 0 ? " " : ", ") + ranked[k].second;
  }
  throw Error(ErrorCode::kUnknownEntry, message);
}

const std::vector<ClaimedClass>& Expectations(std::string_view name) {
  const CatalogEntry& e = Lookup(name);
  if (e.claims.empty()) {
    throw Error(ErrorCode::kNoClaims,
                "catalog entry '" + e.name + "' carries no claims");
  }
  return e.claims;
}

std::vector<AuditFinding> AuditCatalog() {
  std::vector<AuditFinding> out;
  for (const CatalogEntry& e : Catalog()) {
    const AlgebraType t = Classify(e.matrix);
    if (!t.hyperbolic) {
      out.push_back({e.name, "not hyperbolic: " +
                                 std::string(HyperbolicStatusName(t.status))});
    }
    if (!(DynkinDiagram::FromMatrix(e.matrix).ToMatrix() == e.matrix)) {
      out.push_back({e.name, "diagram round trip changes the matrix"});
    }
    if (static_cast<int>(e.labels.size()) != e.matrix.rank()) {
      out.push_back({e.name, "label count differs from rank"});
    }
    const std::uint64_t all =
        e.matrix.rank() >= 64 ? ~std::uint64_t{0}
                              : (std::uint64_t{1} << e.matrix.rank()) - 1;
    for (const ClaimedClass& c : e.claims) {
      for (Painting p : c.paintings) {
        if ((p.mask() & ~all) != 0) {
          out.push_back({e.name, "claim " + c.id + " paints a missing vertex"});
        }
      }
    }
  }
  return out;
}

}  // namespace vogankm

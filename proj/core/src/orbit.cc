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

#include "vogankm/orbit.h"

#include <algorithm>
#include <deque>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "vogankm/error.h"

namespace vogankm {
namespace {

std::uint64_t Expand(std::uint64_t index, const std::vector<int>& fixed) {
  std::uint64_t mask = 0;
  for (std::size_t b = 0; b < fixed.size(); ++b) {
    if ((index >> b) & 1U) mask |= std::uint64_t{1} << fixed[b];
  }
  return mask;
}

std::uint64_t Compress(std::uint64_t mask, const std::vector<int>& fixed) {
  std::uint64_t index = 0;
  for (std::size_t b = 0; b < fixed.size(); ++b) {
    if ((mask >> fixed[b]) & 1U) index |= std::uint64_t{1} << b;
  }
  return index;
}

std::string Describe(const OrbitReport& report, int cls) {
  if (cls < 0) return "not a painting of the fixed vertices";
  return "class " + std::to_string(cls) + " " +
         FormatPainting(report.classes[cls].representative(), report.labels);
}

}  // namespace

std::vector<Permutation> CommutingAutomorphisms(const CartanMatrix& g,
                                                const Involution& sigma) {
  std::vector<Permutation> out;
  for (Permutation& p : Automorphisms(g)) {
    if (Compose(p, sigma.perm()) == Compose(sigma.perm(), p)) {
      out.push_back(std::move(p));
    }
  }
  return out;
}

MoveSystem::MoveSystem(const CartanMatrix& g, const Involution& sigma)
    : g_(g), sigma_(sigma) {
  flip_.resize(g.rank());
  for (int i = 0; i < g.rank(); ++i) flip_[i] = FlipMask(g, sigma, i);
  for (Permutation& p : CommutingAutomorphisms(g, sigma)) {
    if (!IsIdentity(p)) relabelings_.push_back(std::move(p));
  }
}

std::vector<Painting> Orbit(const VoganDiagram& v) {
  const MoveSystem moves(v.matrix(), v.sigma());
  std::unordered_set<Painting, PaintingHash> seen = {v.painted()};
  std::deque<Painting> queue = {v.painted()};
  while (!queue.empty()) {
    const Painting p = queue.front();
    queue.pop_front();
    moves.ForEachNeighbor(p, [&](Painting q) {
      if (seen.insert(q).second) queue.push_back(q);
    });
  }
  std::vector<Painting> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end());
  return out;
}

int OrbitReport::ClassOf(Painting p) const {
  std::uint64_t fixed_mask = 0;
  for (int v : fixed_vertices) fixed_mask |= std::uint64_t{1} << v;
  if ((p.mask() & ~fixed_mask) != 0) return -1;
  return class_index[Compress(p.mask(), fixed_vertices)];
}

bool OrbitReport::AllMatch() const {
  return std::all_of(verdicts.begin(), verdicts.end(),
                     [](const ClaimVerdict& v) { return v.match; });
}

OrbitReport AllClasses(const CartanMatrix& g, const Involution& sigma) {
  OrbitReport report;
  report.diagram_name = g.name();
  report.sigma = Involution::Create(g, sigma.perm());
  report.fixed_vertices = sigma.FixedVertices();
  const auto& fixed = report.fixed_vertices;
  if (static_cast<int>(fixed.size()) > kMaxFixedVertices) {
    throw Error(ErrorCode::kTooManyFixedVertices,
                std::to_string(fixed.size()) + " fixed vertices exceed the " +
                    std::to_string(kMaxFixedVertices) + "-vertex bound");
  }
  report.sigma_representative = ConjugacyRepresentative(g, sigma);
  const MoveSystem moves(g, sigma);
  const std::uint64_t total = std::uint64_t{1} << fixed.size();
  std::vector<int> raw(total, -1);
  std::vector<OrbitClass> classes;
  std::deque<Painting> queue;
  for (std::uint64_t start = 0; start < total; ++start) {
    if (raw[start] >= 0) continue;
    const int id = static_cast<int>(classes.size());
    OrbitClass cls;
    raw[start] = id;
    queue.push_back(Painting(Expand(start, fixed)));
    while (!queue.empty()) {
      const Painting p = queue.front();
      queue.pop_front();
      cls.members.push_back(p);
      moves.ForEachNeighbor(p, [&](Painting q) {
        int& slot = raw[Compress(q.mask(), fixed)];
        if (slot < 0) {
          slot = id;
          queue.push_back(q);
        }
      });
    }
    std::sort(cls.members.begin(), cls.members.end());
    const int least = cls.members.front().size();
    for (Painting p : cls.members) {
      if (p.size() != least) break;
      cls.minimal_reps.push_back(p);
    }
    if (least <= 1) cls.bds_witness = cls.members.front();
    classes.push_back(std::move(cls));
  }

  std::vector<int> order(classes.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    return classes[a].representative() < classes[b].representative();
  });
  std::vector<int> renumber(classes.size());
  for (std::size_t pos = 0; pos < order.size(); ++pos) {
    renumber[order[pos]] = static_cast<int>(pos);
    report.classes.push_back(std::move(classes[order[pos]]));
  }
  report.class_index.resize(total);
  for (std::uint64_t s = 0; s < total; ++s) {
    report.class_index[s] = renumber[raw[s]];
  }
  return report;
}

std::vector<ClaimVerdict> CompareClaims(
    const OrbitReport& report, const std::vector<ClaimedClass>& claims) {
  std::vector<ClaimVerdict> out;
  for (const ClaimedClass& claim : claims) {
    ClaimVerdict verdict;
    verdict.id = claim.id;
    for (Painting p : claim.paintings) {
      verdict.computed_classes.push_back(report.ClassOf(p));
    }
    std::ostringstream details;
    const auto& cc = verdict.computed_classes;
    const bool together =
        !cc.empty() && cc.front() >= 0 &&
        std::all_of(cc.begin(), cc.end(), [&](int c) { return c == cc[0]; });
    verdict.match = together;
    if (!together) {
      details << "split:";
      for (std::size_t k = 0; k < claim.paintings.size(); ++k) {
        details << ' ' << FormatPainting(claim.paintings[k], report.labels)
                << " in " << Describe(report, cc[k]) << ';';
      }
    }
    if (together && claim.distinct) {
      for (const ClaimedClass& other : claims) {
        if (&other == &claim || !other.distinct) continue;
        for (Painting p : other.paintings) {
          if (report.ClassOf(p) == cc[0]) {
            verdict.match = false;
            details << "shares " << Describe(report, cc[0]) << " with claim "
                    << other.id << " via " << FormatPainting(p, report.labels)
                    << ';';
            break;
          }
        }
      }
    }
    verdict.details = details.str();
    if (!verdict.details.empty() && verdict.details.back() == ';') {
      verdict.details.pop_back();
    }
    out.push_back(std::move(verdict));
  }
  return out;
}

void AttachClaims(OrbitReport& report, std::vector<ClaimedClass> claims) {
  report.verdicts = CompareClaims(report, claims);
  report.expectation = std::move(claims);
}

Reduction ReduceToMinimal(const VoganDiagram& v) {
  const MoveSystem moves(v.matrix(), v.sigma());
  struct Step {
    Painting parent;
    Move move;
  };
  std::unordered_map<Painting, Step, PaintingHash> parent;
  std::deque<Painting> queue = {v.painted()};
  parent.emplace(v.painted(), Step{v.painted(), {}});
  Painting best = v.painted();
  while (!queue.empty()) {
    const Painting p = queue.front();
    queue.pop_front();
    if (p < best) best = p;
    for (int i : p.Vertices()) {
      const Painting q = moves.ApplyF(p, i);
      if (parent.emplace(q, Step{p, Move{Move::Kind::kFMove, i, {}}}).second) {
        queue.push_back(q);
      }
    }
    for (const Permutation& perm : moves.relabelings()) {
      const Painting q = ApplyPermutation(perm, p);
      if (parent.emplace(q, Step{p, Move{Move::Kind::kRelabel, -1, perm}})
              .second) {
        queue.push_back(q);
      }
    }
  }
  Reduction out;
  out.representative = best;
  for (Painting p = best; p != v.painted();) {
    const Step& step = parent.at(p);
    out.trace.push_back(step.move);
    p = step.parent;
  }
  std::reverse(out.trace.begin(), out.trace.end());
  return out;
}

Painting Replay(const CartanMatrix& g, const Involution& sigma, Painting start,
                const std::vector<Move>& trace) {
  Painting p = VoganDiagram::Create(g, sigma, start).painted();
  for (const Move& move : trace) {
    if (move.kind == Move::Kind::kFMove) {
      p = FMove(g, sigma, p, move.vertex);
      continue;
    }
    if (!PreservesMatrix(g, move.relabel) ||
        Compose(move.relabel, sigma.perm()) !=
            Compose(sigma.perm(), move.relabel)) {
      throw Error(ErrorCode::kInvalidInvolution,
                  "relabeling is not an automorphism commuting with the "
                  "involution");
    }
    p = ApplyPermutation(move.relabel, p);
  }
  return p;
}

std::string FormatMove(const Move& move,
                       const std::vector<std::string>& labels) {
  auto label = [&](int v) {
    return v < static_cast<int>(labels.size()) ? labels[v] : std::to_string(v);
  };
  if (move.kind == Move::Kind::kFMove) return "F(" + label(move.vertex) + ")";
  std::string out = "relabel";
  for (std::size_t v = 0; v < move.relabel.size(); ++v) {
    if (move.relabel[v] == static_cast<int>(v)) continue;
    out += ' ' + label(static_cast<int>(v)) + "->" + label(move.relabel[v]);
  }
  return out;
}

BdsResult VerifyBorelDeSiebenthal(const OrbitReport& report) {
  BdsResult out;
  for (const OrbitClass& cls : report.classes) {
    if (cls.representative().empty()) continue;
    ++out.nonempty_orbits;
    out.nonempty_paintings += static_cast<int>(cls.members.size());
    const bool has_single =
        std::any_of(cls.members.begin(), cls.members.end(),
                    [](Painting p) { return p.size() == 1; });
    if (!has_single) {
      out.holds = false;
      out.counterexamples.push_back(cls.representative());
    }
  }
  return out;
}

BdsResult VerifyBorelDeSiebenthal(const CartanMatrix& g,
                                  const Involution& sigma) {
  return VerifyBorelDeSiebenthal(AllClasses(g, sigma));
}

Painting PaintingFromLabels(const std::vector<std::string>& labels,
                            const std::vector<std::string>& painted) {
  std::vector<int> vertices;
  for (const std::string& name : painted) {
    const auto it = std::find(labels.begin(), labels.end(), name);
    if (it == labels.end()) {
      throw Error(ErrorCode::kUnknownVertexLabel,
                  "unknown vertex label '" + name + "'");
    }
    vertices.push_back(static_cast<int>(it - labels.begin()));
  }
  return Painting::FromVertices(vertices);
}

std::vector<LemmaVerdict> VerifyLemmaInstances(
    const CartanMatrix& g, const Involution& sigma,
    const std::vector<std::string>& labels,
    const std::vector<LemmaInstance>& instances) {
  std::vector<LemmaVerdict> out;
  for (const LemmaInstance& inst : instances) {
    out.push_back({inst, PaintingFromLabels(labels, inst.left),
                   PaintingFromLabels(labels, inst.right), false});
  }
  if (out.empty()) return out;
  const OrbitReport report = AllClasses(g, sigma);
  for (LemmaVerdict& v : out) {
    const int a = report.ClassOf(v.left);
    v.same_orbit = a >= 0 && a == report.ClassOf(v.right);
  }
  return out;
}

}  // namespace vogankm

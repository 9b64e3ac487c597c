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

#ifndef VOGANKM_ORBIT_H_
#define VOGANKM_ORBIT_H_

#include <optional>
#include <string>
#include <vector>

#include "vogankm/vogan.h"

namespace vogankm {

inline constexpr int kMaxFixedVertices = 24;

// Automorphisms of g that commute with sigma, in lexicographic order.
std::vector<Permutation> CommutingAutomorphisms(const CartanMatrix& g,
                                                const Involution& sigma);

// The one-step moves available from a painting: F[i] at each painted fixed
// vertex, then each non-identity commuting automorphism.
class MoveSystem {
 public:
  MoveSystem(const CartanMatrix& g, const Involution& sigma);

  const CartanMatrix& matrix() const { return g_; }
  const Involution& sigma() const { return sigma_; }
  const std::vector<Permutation>& relabelings() const { return relabelings_; }

  Painting ApplyF(Painting p, int i) const {
    return Painting(p.mask() ^ flip_[i]);
  }

  template <typename Visit>
  void ForEachNeighbor(Painting p, Visit&& visit) const {
    for (int i : p.Vertices()) visit(ApplyF(p, i));
    for (const Permutation& perm : relabelings_) {
      visit(ApplyPermutation(perm, p));
    }
  }

 private:
  CartanMatrix g_;
  Involution sigma_;
  std::vector<std::uint64_t> flip_;
  std::vector<Permutation> relabelings_;
};

// Every painting reachable from v.painted(), sorted.
std::vector<Painting> Orbit(const VoganDiagram& v);

struct OrbitClass {
  std::vector<Painting> members;       // sorted
  std::vector<Painting> minimal_reps;  // members of minimum cardinality
  std::optional<Painting> bds_witness;  // least member with <= 1 painted vertex

  Painting representative() const { return members.front(); }
};

// A set of paintings asserted pairwise equivalent. When `distinct` is set the
// class is also asserted different from every other distinct claim.
struct ClaimedClass {
  std::string id;
  std::vector<Painting> paintings;
  bool distinct = true;
  std::string quote;
};

struct ClaimVerdict {
  std::string id;
  bool match = false;
  // Computed class index of each claimed painting, in claim order.
  std::vector<int> computed_classes;
  std::string details;
};

struct OrbitReport {
  std::string diagram_name;
  std::vector<std::string> labels;
  Involution sigma = Involution::Identity(0);
  Involution sigma_representative = Involution::Identity(0);
  std::vector<OrbitClass> classes;  // ordered by representative
  std::vector<ClaimedClass> expectation;
  std::vector<ClaimVerdict> verdicts;

  // Index into `classes` of the class containing p, or -1.
  int ClassOf(Painting p) const;
  bool AllMatch() const;

  std::vector<int> class_index;  // indexed by fixed-vertex subset
  std::vector<int> fixed_vertices;
};

// Partitions every painting of Fix(sigma), including the empty one.
// Throws kTooManyFixedVertices when |Fix(sigma)| exceeds the bound.
OrbitReport AllClasses(const CartanMatrix& g, const Involution& sigma);

std::vector<ClaimVerdict> CompareClaims(const OrbitReport& report,
                                        const std::vector<ClaimedClass>& claims);
// Fills report.expectation and report.verdicts.
void AttachClaims(OrbitReport& report, std::vector<ClaimedClass> claims);

struct Move {
  enum class Kind { kFMove, kRelabel };
  Kind kind = Kind::kFMove;
  int vertex = -1;        // for kFMove
  Permutation relabel;    // for kRelabel
};

struct Reduction {
  Painting representative;
  std::vector<Move> trace;
};

// Shortest move sequence from v.painted() to the least member of its orbit.
Reduction ReduceToMinimal(const VoganDiagram& v);
// Applies a trace, validating each move. Throws on an inadmissible move.
Painting Replay(const CartanMatrix& g, const Involution& sigma, Painting start,
                const std::vector<Move>& trace);
std::string FormatMove(const Move& move, const std::vector<std::string>& labels);

struct BdsResult {
  bool holds = true;
  int nonempty_paintings = 0;
  int nonempty_orbits = 0;
  // Least member of each nonempty orbit lacking a single-vertex member.
  std::vector<Painting> counterexamples;
};

BdsResult VerifyBorelDeSiebenthal(const CartanMatrix& g,
                                  const Involution& sigma);
BdsResult VerifyBorelDeSiebenthal(const OrbitReport& report);

struct LemmaInstance {
  std::vector<std::string> left;  // vertex labels
  std::vector<std::string> right;
  std::string description;
};

struct LemmaVerdict {
  LemmaInstance instance;
  Painting left;
  Painting right;
  bool same_orbit = false;
};

// Resolves vertex labels through `labels` (vertex index -> display label) and
// throws kUnknownVertexLabel for labels not present.
Painting PaintingFromLabels(const std::vector<std::string>& labels,
                            const std::vector<std::string>& painted);

std::vector<LemmaVerdict> VerifyLemmaInstances(
    const CartanMatrix& g, const Involution& sigma,
    const std::vector<std::string>& labels,
    const std::vector<LemmaInstance>& instances);

}  // namespace vogankm

#endif  // VOGANKM_ORBIT_H_

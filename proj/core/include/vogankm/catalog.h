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

#ifndef VOGANKM_CATALOG_H_
#define VOGANKM_CATALOG_H_

#include <string>
#include <string_view>
#include <vector>

#include "vogankm/gcm.h"
#include "vogankm/orbit.h"

namespace vogankm {

enum class Provenance {
  kFigureCertain,
  // The drawing leaves an edge orientation open; the chosen orientation is
  // recorded in the entry notes.
  kFigureInferred,
};

std::string_view ProvenanceName(Provenance p);

struct CatalogEntry {
  std::string name;
  CartanMatrix matrix;
  std::vector<std::string> labels;      // display label per vertex
  std::vector<std::string> alt_labels;  // optional second labelling
  Provenance provenance = Provenance::kFigureCertain;
  std::string notes;
  // Claimed classes under the trivial involution.
  std::vector<ClaimedClass> claims;
  std::vector<LemmaInstance> lemma_instances;
};

// All built-in entries in a fixed order.
const std::vector<CatalogEntry>& Catalog();
std::vector<std::string> CatalogNames();

// Throws kUnknownEntry listing the nearest known names.
const CatalogEntry& Lookup(std::string_view name);
bool Contains(std::string_view name);

// Throws kUnknownEntry or kNoClaims.
const std::vector<ClaimedClass>& Expectations(std::string_view name);

// Overextended C_n^(1): an extra vertex 1 joined to the long affine vertex 2,
// short chain 3..n+1, long end vertex n+2. Rank n+2, n >= 2.
CartanMatrix OverextendedC(int n);
// Overextended D_n^(1): an extra vertex 1 joined to fork leaf 2; fork 2,3 at
// vertex 4, chain 4..n, fork n+1,n+2 at vertex n. Rank n+2, n >= 4.
CartanMatrix OverextendedD(int n);

struct AuditFinding {
  std::string entry;
  std::string problem;
};

// Structural checks over the whole catalog: hyperbolicity, diagram round
// trip, claim paintings within range.
std::vector<AuditFinding> AuditCatalog();

}  // namespace vogankm

#endif  // VOGANKM_CATALOG_H_

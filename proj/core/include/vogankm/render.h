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

#ifndef VOGANKM_RENDER_H_
#define VOGANKM_RENDER_H_

#include <string>
#include <string_view>
#include <vector>

#include "vogankm/gcm.h"
#include "vogankm/vogan.h"

namespace vogankm {

enum class RenderFormat { kAscii, kDot };

struct RenderSpec {
  RenderFormat format = RenderFormat::kAscii;
  bool show_labels = true;
  // ANSI highlighting of painted vertices in ASCII output.
  bool color = false;
};

// Throws kParseError for anything other than "ascii" or "dot".
RenderFormat ParseRenderFormat(std::string_view name);

// ASCII: the longest path is drawn as a horizontal spine with "o" for
// unpainted and "*" for painted vertices, single pendants hang below their
// spine vertex, and every edge not drawn is listed underneath. Involution
// pairs are listed as dashed two-headed arcs.
std::string RenderAscii(const CartanMatrix& g,
                        const std::vector<std::string>& labels,
                        const Involution& sigma, Painting painted,
                        const RenderSpec& spec = {});

// Graphviz digraph. Painted vertices are filled, multiple edges use parallel
// strokes with the arrow toward the short root, bold edges carry the ordered
// pair, and involution pairs are dashed dir=both edges.
std::string RenderDot(const CartanMatrix& g,
                      const std::vector<std::string>& labels,
                      const Involution& sigma, Painting painted);

std::string Render(const CartanMatrix& g,
                   const std::vector<std::string>& labels,
                   const Involution& sigma, Painting painted,
                   const RenderSpec& spec);

}  // namespace vogankm

#endif  // VOGANKM_RENDER_H_

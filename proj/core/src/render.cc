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

#include "vogankm/render.h"

#include <algorithm>
#include <sstream>

#include "vogankm/dynkin.h"
#include "vogankm/error.h"

namespace vogankm {
namespace {

std::string LabelOf(const std::vector<std::string>& labels, int v) {
  return v < static_cast<int>(labels.size()) ? labels[v] : std::to_string(v);
}

const DynkinEdge* FindEdge(const DynkinDiagram& d, int u, int w) {
  const int a = std::min(u, w), b = std::max(u, w);
  for (const DynkinEdge& e : d.edges()) {
    if (e.first == a && e.second == b) return &e;
  }
  return nullptr;
}

// Connector between `left` and `right` when drawn left to right.
std::string Connector(const DynkinEdge& e, int left) {
  const bool flipped = e.first != left;
  if (e.style == EdgeStyle::kSimple) return "-----";
  if (e.style == EdgeStyle::kBold) {
    const int a = flipped ? e.label_second : e.label_first;
    const int b = flipped ? e.label_first : e.label_second;
    return "=" + std::to_string(a) + "," + std::to_string(b) + "=";
  }
  const std::string n = std::to_string(e.lines);
  Arrow arrow = e.arrow;
  if (flipped && arrow == Arrow::kTowardFirst) {
    arrow = Arrow::kTowardSecond;
  } else if (flipped && arrow == Arrow::kTowardSecond) {
    arrow = Arrow::kTowardFirst;
  }
  switch (arrow) {
    case Arrow::kTowardSecond:
      return "==" + n + "=>";
    case Arrow::kTowardFirst:
      return "<=" + n + "==";
    case Arrow::kBoth:
      return "<=" + n + "=>";
    case Arrow::kNone:
      break;
  }
  return "==" + n + "==";
}

class LongestPath {
 public:
  explicit LongestPath(const DynkinDiagram& d) : d_(d), used_(d.rank()) {}

  std::vector<int> Run() {
    for (int v = 0; v < d_.rank() && static_cast<int>(best_.size()) < d_.rank();
         ++v) {
      Visit(v);
    }
    return best_;
  }

 private:
  void Visit(int v) {
    used_[v] = true;
    path_.push_back(v);
    if (path_.size() > best_.size()) best_ = path_;
    for (int w : d_.Neighbors(v)) {
      if (static_cast<int>(best_.size()) == d_.rank()) break;
      if (!used_[w]) Visit(w);
    }
    path_.pop_back();
    used_[v] = false;
  }

  const DynkinDiagram& d_;
  std::vector<bool> used_;
  std::vector<int> path_;
  std::vector<int> best_;
};

void RightTrim(std::string& s) {
  while (!s.empty() && s.back() == ' ') s.pop_back();
}

void Put(std::string& row, std::size_t col, const std::string& text) {
  if (row.size() < col + text.size()) row.resize(col + text.size(), ' ');
  row.replace(col, text.size(), text);
}

}  // namespace

RenderFormat ParseRenderFormat(std::string_view name) {
  if (name == "ascii") return RenderFormat::kAscii;
  if (name == "dot") return RenderFormat::kDot;
  throw Error(ErrorCode::kParseError,
              "unknown render format '" + std::string(name) +
                  "' (expected ascii or dot)");
}

std::string RenderAscii(const CartanMatrix& g,
                        const std::vector<std::string>& labels,
                        const Involution& sigma, Painting painted,
                        const RenderSpec& spec) {
  const DynkinDiagram d = DynkinDiagram::FromMatrix(g);
  const int n = g.rank();
  auto glyph = [&](int v) -> std::string {
    if (!painted.Contains(v)) return "o";
    return spec.color ? "\x1b[1;31m*\x1b[0m" : "*";
  };
  auto label = [&](int v) { return LabelOf(labels, v); };

  std::size_t width = 5;
  for (int v = 0; v < n; ++v) width = std::max(width, label(v).size() + 1);

  const std::vector<int> spine = LongestPath(d).Run();
  std::vector<bool> placed(n, false);
  std::vector<bool> drawn_edge(d.edges().size(), false);
  auto mark = [&](int u, int w) {
    const DynkinEdge* e = FindEdge(d, u, w);
    drawn_edge[e - d.edges().data()] = true;
  };

  std::string label_row, spine_row, link_row, pendant_row;
  std::vector<std::size_t> column(n, 0);
  std::size_t col = 0;
  for (std::size_t k = 0; k < spine.size(); ++k) {
    const int v = spine[k];
    placed[v] = true;
    column[v] = col;
    if (spec.show_labels) Put(label_row, col, label(v));
    Put(spine_row, col, "o");
    if (k + 1 < spine.size()) {
      const DynkinEdge* e = FindEdge(d, v, spine[k + 1]);
      const std::string link = Connector(*e, v);
      const bool simple = e->style == EdgeStyle::kSimple;
      const std::size_t span =
          std::max(width + 1, link.size() + (simple ? 1 : 3));
      std::string filled(span - 1, simple ? '-' : ' ');
      if (!simple) filled.replace((span - 1 - link.size()) / 2, link.size(), link);
      Put(spine_row, col + 1, filled);
      mark(v, spine[k + 1]);
      col += span;
    }
  }

  std::vector<std::string> notes;
  for (int s : spine) {
    for (int w : d.Neighbors(s)) {
      if (placed[w]) continue;
      placed[w] = true;
      const DynkinEdge* e = FindEdge(d, s, w);
      mark(s, w);
      Put(link_row, column[s], e->style == EdgeStyle::kSimple ? "|" : ":");
      Put(pendant_row, column[s], "o" + (spec.show_labels ? " " + label(w) : ""));
      column[w] = column[s];
      if (e->style != EdgeStyle::kSimple) {
        notes.push_back("  " + label(s) + " " + Connector(*e, s) + " " +
                        label(w));
      }
      break;
    }
  }

  std::ostringstream out;
  auto emit = [&](std::string row) {
    RightTrim(row);
    if (!row.empty()) out << row << '\n';
  };
  // Glyphs are substituted last so that colour escapes do not disturb the
  // column arithmetic.
  auto paint_row = [&](std::string row, bool pendant) {
    std::string result;
    std::size_t last = 0;
    std::vector<std::pair<std::size_t, int>> at;
    for (int v = 0; v < n; ++v) {
      if (!placed[v]) continue;
      const bool on_spine =
          std::find(spine.begin(), spine.end(), v) != spine.end();
      if (on_spine != !pendant) continue;
      at.emplace_back(column[v], v);
    }
    std::sort(at.begin(), at.end());
    for (const auto& [c, v] : at) {
      if (c >= row.size()) continue;
      result += row.substr(last, c - last);
      result += glyph(v);
      last = c + 1;
    }
    result += row.substr(std::min(last, row.size()));
    return result;
  };
  if (spec.show_labels) emit(label_row);
  emit(paint_row(spine_row, false));
  emit(link_row);
  emit(paint_row(pendant_row, true));

  std::vector<std::string> loose;
  for (int v = 0; v < n; ++v) {
    if (!placed[v]) loose.push_back(glyph(v) + " " + label(v));
  }
  if (!loose.empty()) {
    out << "vertices:";
    for (const std::string& s : loose) out << "  " << s;
    out << '\n';
  }
  for (std::size_t k = 0; k < d.edges().size(); ++k) {
    if (drawn_edge[k]) continue;
    const DynkinEdge& e = d.edges()[k];
    notes.push_back("  " + label(e.first) + " " + Connector(e, e.first) + " " +
                    label(e.second));
  }
  if (!notes.empty()) {
    out << "edges:\n";
    for (const std::string& s : notes) out << s << '\n';
  }
  bool header = false;
  for (int v = 0; v < n; ++v) {
    if (sigma(v) > v) {
      if (!header) out << "arcs:\n";
      header = true;
      out << "  " << label(v) << " <- - -> " << label(sigma(v)) << '\n';
    }
  }
  return out.str();
}

std::string RenderDot(const CartanMatrix& g,
                      const std::vector<std::string>& labels,
                      const Involution& sigma, Painting painted) {
  const DynkinDiagram d = DynkinDiagram::FromMatrix(g);
  auto quote = [](const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
      if (c == '"' || c == '\\') out += '\\';
      out += c;
    }
    return out + "\"";
  };
  std::ostringstream out;
  out << "digraph " << quote(g.name().empty() ? "diagram" : g.name())
      << " {\n  node [shape=circle];\n";
  for (int v = 0; v < g.rank(); ++v) {
    out << "  v" << v << " [label=" << quote(LabelOf(labels, v));
    if (painted.Contains(v)) {
      out << ", style=filled, fillcolor=black, fontcolor=white";
    }
    out << "];\n";
  }
  for (const DynkinEdge& e : d.edges()) {
    if (e.style == EdgeStyle::kSimple) {
      out << "  v" << e.first << " -> v" << e.second << " [dir=none];\n";
    } else if (e.style == EdgeStyle::kBold) {
      out << "  v" << e.first << " -> v" << e.second
          << " [dir=none, penwidth=3, label=\"" << e.label_first << ','
          << e.label_second << "\"];\n";
    } else {
      std::string strokes = "black";
      for (int k = 1; k < e.lines; ++k) strokes += ":black";
      const int tail = e.arrow == Arrow::kTowardFirst ? e.second : e.first;
      const int head = e.arrow == Arrow::kTowardFirst ? e.first : e.second;
      out << "  v" << tail << " -> v" << head << " [color=\"" << strokes
          << "\", dir=" << (e.arrow == Arrow::kBoth ? "both" : "forward")
          << "];\n";
    }
  }
  for (int v = 0; v < g.rank(); ++v) {
    if (sigma(v) > v) {
      out << "  v" << v << " -> v" << sigma(v)
          << " [style=dashed, dir=both, constraint=false];\n";
    }
  }
  out << "}\n";
  return out.str();
}

std::string Render(const CartanMatrix& g,
                   const std::vector<std::string>& labels,
                   const Involution& sigma, Painting painted,
                   const RenderSpec& spec) {
  if (spec.format == RenderFormat::kDot) {
    return RenderDot(g, labels, sigma, painted);
  }
  return RenderAscii(g, labels, sigma, painted, spec);
}

}  // namespace vogankm

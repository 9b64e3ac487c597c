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

#include "vogankm/diagram_io.h"

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "vogankm/catalog.h"
#include "vogankm/error.h"

namespace vogankm {
namespace {

using Json = nlohmann::ordered_json;

[[noreturn]] void Fail(std::string_view source, const std::string& what) {
  throw Error(ErrorCode::kParseError, std::string(source) + ": " + what);
}

std::pair<std::size_t, std::size_t> LineColumn(std::string_view text,
                                               std::size_t offset) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i < offset && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

Json ParseJson(std::string_view text, std::string_view source) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const Json::parse_error& e) {
    // e.byte is one past the offending character.
    const auto [line, col] =
        LineColumn(text, e.byte == 0 ? 0 : e.byte - 1);
    std::string what = e.what();
    const auto colon = what.rfind(": ");
    if (colon != std::string::npos) what = what.substr(colon + 2);
    throw Error(ErrorCode::kParseError,
                std::string(source) + ":" + std::to_string(line) + ":" +
                    std::to_string(col) + ": " + what);
  }
}

int IntField(const Json& j, std::string_view source, const std::string& path) {
  if (!j.is_number_integer()) Fail(source, path + ": expected an integer");
  const auto v = j.get<std::int64_t>();
  if (v < -1000000 || v > 1000000) Fail(source, path + ": integer out of range");
  return static_cast<int>(v);
}

std::vector<int> IntList(const Json& j, std::string_view source,
                         const std::string& path) {
  if (!j.is_array()) Fail(source, path + ": expected an array of integers");
  std::vector<int> out;
  for (std::size_t k = 0; k < j.size(); ++k) {
    out.push_back(IntField(j[k], source, path + "[" + std::to_string(k) + "]"));
  }
  return out;
}

DiagramFile DiagramFromJson(const Json& doc, std::string_view source,
                            const std::string& prefix) {
  if (!doc.is_object()) Fail(source, prefix + "expected a JSON object");
  for (auto it = doc.begin(); it != doc.end(); ++it) {
    if (it.key() != "name" && it.key() != "matrix" && it.key() != "labels") {
      Fail(source, prefix + it.key() + ": unknown field");
    }
  }
  std::string name;
  if (doc.contains("name")) {
    if (!doc["name"].is_string()) Fail(source, prefix + "name: expected a string");
    name = doc["name"].get<std::string>();
  }
  if (!doc.contains("matrix")) Fail(source, prefix + "matrix: missing field");
  const Json& m = doc["matrix"];
  if (!m.is_array()) Fail(source, prefix + "matrix: expected an array of rows");
  if (m.empty()) {
    throw Error(ErrorCode::kEmptyMatrix,
                std::string(source) + ": " + prefix + "matrix: empty matrix");
  }
  std::vector<std::vector<int>> rows;
  for (std::size_t i = 0; i < m.size(); ++i) {
    rows.push_back(IntList(m[i], source,
                           prefix + "matrix[" + std::to_string(i) + "]"));
  }
  DiagramFile out{CartanMatrix::Validate(rows, name), {}};
  if (doc.contains("labels")) {
    const Json& l = doc["labels"];
    if (!l.is_array()) Fail(source, prefix + "labels: expected an array");
    if (static_cast<int>(l.size()) != out.matrix.rank()) {
      Fail(source, prefix + "labels: expected " +
                       std::to_string(out.matrix.rank()) + " entries, got " +
                       std::to_string(l.size()));
    }
    for (std::size_t k = 0; k < l.size(); ++k) {
      if (!l[k].is_string()) {
        Fail(source, prefix + "labels[" + std::to_string(k) +
                         "]: expected a string");
      }
      out.labels.push_back(l[k].get<std::string>());
    }
  } else {
    out.labels = IndexLabels(out.matrix.rank());
  }
  return out;
}

VoganFile VoganFromJson(const Json& doc, std::string_view source) {
  for (auto it = doc.begin(); it != doc.end(); ++it) {
    if (it.key() != "diagram" && it.key() != "involution" &&
        it.key() != "painted") {
      Fail(source, it.key() + ": unknown field");
    }
  }
  DiagramFile diagram{CartanMatrix::Validate({{2}}), {}};
  const Json& d = doc["diagram"];
  if (d.is_string()) {
    const CatalogEntry& e = Lookup(d.get<std::string>());
    diagram = {e.matrix, e.labels};
  } else {
    diagram = DiagramFromJson(d, source, "diagram.");
  }
  const int n = diagram.matrix.rank();
  Involution sigma = Involution::Identity(n);
  if (doc.contains("involution")) {
    sigma = Involution::Create(diagram.matrix,
                               IntList(doc["involution"], source, "involution"));
  }
  Painting painted;
  if (doc.contains("painted")) {
    const std::vector<int> vs = IntList(doc["painted"], source, "painted");
    for (std::size_t k = 0; k < vs.size(); ++k) {
      if (vs[k] < 0 || vs[k] >= n) {
        throw Error(ErrorCode::kVertexOutOfRange,
                    std::string(source) + ": painted[" + std::to_string(k) +
                        "]: vertex " + std::to_string(vs[k]) +
                        " out of range");
      }
    }
    painted = Painting::FromVertices(vs);
  }
  VoganDiagram::Create(diagram.matrix, sigma, painted);
  return {std::move(diagram), std::move(sigma), painted};
}

std::string Quote(const std::string& s) { return Json(s).dump(); }

std::string IntArray(const std::vector<int>& v) {
  std::string out = "[";
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (k) out += ", ";
    out += std::to_string(v[k]);
  }
  return out + "]";
}

void WriteDiagram(std::ostream& out, const CartanMatrix& g,
                  const std::vector<std::string>& labels,
                  const std::string& indent) {
  out << "{\n" << indent << "  \"name\": " << Quote(g.name()) << ",\n"
      << indent << "  \"matrix\": [\n";
  const auto rows = g.Rows();
  for (std::size_t i = 0; i < rows.size(); ++i) {
    out << indent << "    " << IntArray(rows[i])
        << (i + 1 < rows.size() ? ",\n" : "\n");
  }
  out << indent << "  ],\n" << indent << "  \"labels\": [";
  for (std::size_t k = 0; k < labels.size(); ++k) {
    out << (k ? ", " : "") << Quote(labels[k]);
  }
  out << "]\n" << indent << "}";
}

bool Flat(const Json& j) {
  if (!j.is_array()) return false;
  for (const Json& e : j) {
    if (e.is_array() || e.is_object()) return false;
  }
  return true;
}

// Two-space indented output with arrays of scalars kept on one line.
void Pretty(std::ostream& out, const Json& j, int indent) {
  const std::string pad(indent + 2, ' ');
  if (j.is_object()) {
    if (j.empty()) {
      out << "{}";
      return;
    }
    out << "{\n";
    std::size_t k = 0;
    for (auto it = j.begin(); it != j.end(); ++it, ++k) {
      out << pad << Json(it.key()).dump() << ": ";
      Pretty(out, it.value(), indent + 2);
      out << (k + 1 < j.size() ? ",\n" : "\n");
    }
    out << std::string(indent, ' ') << '}';
  } else if (j.is_array() && !Flat(j)) {
    out << "[\n";
    for (std::size_t k = 0; k < j.size(); ++k) {
      out << pad;
      Pretty(out, j[k], indent + 2);
      out << (k + 1 < j.size() ? ",\n" : "\n");
    }
    out << std::string(indent, ' ') << ']';
  } else if (j.is_array()) {
    out << '[';
    for (std::size_t k = 0; k < j.size(); ++k) {
      out << (k ? ", " : "") << j[k].dump();
    }
    out << ']';
  } else {
    out << j.dump();
  }
}

Json PaintingJson(Painting p) { return Json(p.Vertices()); }

}  // namespace

std::vector<std::string> IndexLabels(int n) {
  std::vector<std::string> out;
  for (int v = 0; v < n; ++v) out.push_back(std::to_string(v));
  return out;
}

DiagramFile ParseDiagram(std::string_view text, std::string_view source) {
  return DiagramFromJson(ParseJson(text, source), source, "");
}

std::string SerializeDiagram(const CartanMatrix& g,
                             const std::vector<std::string>& labels) {
  std::ostringstream out;
  WriteDiagram(out, g, labels, "");
  out << '\n';
  return out.str();
}

VoganFile ParseVogan(std::string_view text, std::string_view source) {
  const Json doc = ParseJson(text, source);
  if (!doc.is_object()) Fail(source, "expected a JSON object");
  if (!doc.contains("diagram")) Fail(source, "diagram: missing field");
  return VoganFromJson(doc, source);
}

std::string SerializeVogan(const VoganFile& v) {
  std::ostringstream out;
  out << "{\n  \"diagram\": ";
  WriteDiagram(out, v.diagram.matrix, v.diagram.labels, "  ");
  out << ",\n  \"involution\": " << IntArray(v.sigma.perm())
      << ",\n  \"painted\": " << IntArray(v.painted.Vertices()) << "\n}\n";
  return out.str();
}

VoganFile ParseAny(std::string_view text, std::string_view source) {
  const Json doc = ParseJson(text, source);
  if (doc.is_object() && doc.contains("diagram")) {
    return VoganFromJson(doc, source);
  }
  DiagramFile d = DiagramFromJson(doc, source, "");
  const int n = d.matrix.rank();
  return {std::move(d), Involution::Identity(n), Painting()};
}

VoganFile LoadSource(const std::string& path_or_name) {
  std::error_code ec;
  if (std::filesystem::is_regular_file(path_or_name, ec)) {
    std::ifstream in(path_or_name, std::ios::binary);
    if (!in) Fail(path_or_name, "cannot open file");
    std::ostringstream buf;
    buf << in.rdbuf();
    return ParseAny(buf.str(), path_or_name);
  }
  if (!Contains(path_or_name) &&
      (path_or_name.find('/') != std::string::npos ||
       path_or_name.ends_with(".json"))) {
    Fail(path_or_name, "no such file");
  }
  const CatalogEntry& e = Lookup(path_or_name);
  return {{e.matrix, e.labels},
          Involution::Identity(e.matrix.rank()),
          Painting()};
}

std::string SerializeOrbitReport(const OrbitReport& report) {
  Json doc;
  doc["diagram"] = report.diagram_name;
  doc["labels"] = report.labels;
  doc["involution"] = report.sigma.perm();
  doc["involution_class_representative"] = report.sigma_representative.perm();
  doc["fixed_vertices"] = report.fixed_vertices;
  doc["painting_count"] = report.class_index.size();
  doc["class_count"] = report.classes.size();
  Json classes = Json::array();
  for (std::size_t k = 0; k < report.classes.size(); ++k) {
    const OrbitClass& c = report.classes[k];
    Json cj;
    cj["index"] = k;
    cj["representative"] = PaintingJson(c.representative());
    cj["size"] = c.members.size();
    Json reps = Json::array();
    for (Painting p : c.minimal_reps) reps.push_back(PaintingJson(p));
    cj["minimal_reps"] = reps;
    cj["bds_witness"] =
        c.bds_witness ? PaintingJson(*c.bds_witness) : Json(nullptr);
    Json members = Json::array();
    for (Painting p : c.members) members.push_back(PaintingJson(p));
    cj["members"] = members;
    classes.push_back(cj);
  }
  doc["classes"] = classes;
  const BdsResult bds = VerifyBorelDeSiebenthal(report);
  Json bj;
  bj["holds"] = bds.holds;
  bj["nonempty_paintings"] = bds.nonempty_paintings;
  bj["nonempty_orbits"] = bds.nonempty_orbits;
  Json ce = Json::array();
  for (Painting p : bds.counterexamples) ce.push_back(PaintingJson(p));
  bj["counterexamples"] = ce;
  doc["borel_de_siebenthal"] = bj;
  if (!report.expectation.empty()) {
    Json claims = Json::array();
    for (std::size_t k = 0; k < report.expectation.size(); ++k) {
      const ClaimedClass& c = report.expectation[k];
      Json cj;
      cj["id"] = c.id;
      cj["quote"] = c.quote;
      cj["distinct"] = c.distinct;
      Json ps = Json::array();
      for (Painting p : c.paintings) ps.push_back(PaintingJson(p));
      cj["paintings"] = ps;
      if (k < report.verdicts.size()) {
        const ClaimVerdict& v = report.verdicts[k];
        cj["verdict"] = v.match ? "Match" : "Mismatch";
        cj["computed_classes"] = v.computed_classes;
        cj["details"] = v.details;
      }
      claims.push_back(cj);
    }
    doc["claims"] = claims;
  }
  std::ostringstream out;
  Pretty(out, doc, 0);
  out << '\n';
  return out.str();
}

}  // namespace vogankm

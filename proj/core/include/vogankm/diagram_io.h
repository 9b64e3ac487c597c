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

#ifndef VOGANKM_DIAGRAM_IO_H_
#define VOGANKM_DIAGRAM_IO_H_

#include <string>
#include <string_view>
#include <vector>

#include "vogankm/gcm.h"
#include "vogankm/orbit.h"
#include "vogankm/vogan.h"

namespace vogankm {

struct DiagramFile {
  CartanMatrix matrix;
  std::vector<std::string> labels;  // always one per vertex
};

struct VoganFile {
  DiagramFile diagram;
  Involution sigma;
  Painting painted;
};

// Default display labels "0", "1", ... for a rank-n diagram.
std::vector<std::string> IndexLabels(int n);

// Parses {"name": ..., "matrix": [[...]], "labels": [...]}. Errors are thrown
// as kParseError with "source:line:col" or a field path in the message, or as
// the validation error of the matrix.
DiagramFile ParseDiagram(std::string_view text,
                         std::string_view source = "<input>");
std::string SerializeDiagram(const CartanMatrix& g,
                             const std::vector<std::string>& labels);

// Parses {"diagram": <diagram object or catalog name>, "involution": [...],
// "painted": [...]}. Involution defaults to the identity and painted to
// the empty set.
VoganFile ParseVogan(std::string_view text, std::string_view source = "<input>");
std::string SerializeVogan(const VoganFile& v);

// Reads a file and accepts either document kind; a plain diagram gets the
// identity involution and no paint.
VoganFile ParseAny(std::string_view text, std::string_view source = "<input>");

// Resolves an argument naming either a readable file or a catalog entry.
VoganFile LoadSource(const std::string& path_or_name);

std::string SerializeOrbitReport(const OrbitReport& report);

}  // namespace vogankm

#endif  // VOGANKM_DIAGRAM_IO_H_

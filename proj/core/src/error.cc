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

#include "vogankm/error.h"

namespace vogankm {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kEmptyMatrix: return "EmptyMatrix";
    case ErrorCode::kNotSquare: return "NotSquare";
    case ErrorCode::kDiagonalNotTwo: return "DiagonalNotTwo";
    case ErrorCode::kPositiveOffDiagonal: return "PositiveOffDiagonal";
    case ErrorCode::kZeroAsymmetry: return "ZeroAsymmetry";
    case ErrorCode::kNotSymmetrizable: return "NotSymmetrizable";
    case ErrorCode::kEmptySelection: return "EmptySelection";
    case ErrorCode::kVertexOutOfRange: return "VertexOutOfRange";
    case ErrorCode::kRankTooLarge: return "RankTooLarge";
    case ErrorCode::kInvalidInvolution: return "InvalidInvolution";
    case ErrorCode::kPaintOnSwappedVertex: return "PaintOnSwappedVertex";
    case ErrorCode::kUnpaintedVertex: return "UnpaintedVertex";
    case ErrorCode::kVertexNotFixed: return "VertexNotFixed";
    case ErrorCode::kTooManyFixedVertices: return "TooManyFixedVertices";
    case ErrorCode::kUnknownVertexLabel: return "UnknownVertexLabel";
    case ErrorCode::kUnknownEntry: return "UnknownEntry";
    case ErrorCode::kNoClaims: return "NoClaims";
    case ErrorCode::kRankBoundExceeded: return "RankBoundExceeded";
    case ErrorCode::kParseError: return "ParseError";
  }
  return "Unknown";
}

}  // namespace vogankm

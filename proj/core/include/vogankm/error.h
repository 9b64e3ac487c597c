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

#ifndef VOGANKM_ERROR_H_
#define VOGANKM_ERROR_H_

#include <stdexcept>
#include <string>
#include <string_view>

namespace vogankm {

enum class ErrorCode {
  kEmptyMatrix,
  kNotSquare,
  kDiagonalNotTwo,
  kPositiveOffDiagonal,
  kZeroAsymmetry,
  kNotSymmetrizable,
  kEmptySelection,
  kVertexOutOfRange,
  kRankTooLarge,
  kInvalidInvolution,
  kPaintOnSwappedVertex,
  kUnpaintedVertex,
  kVertexNotFixed,
  kTooManyFixedVertices,
  kUnknownVertexLabel,
  kUnknownEntry,
  kNoClaims,
  kRankBoundExceeded,
  kParseError,
};

std::string_view ErrorCodeName(ErrorCode code);

// Every recoverable failure in the library is reported as an Error carrying
// a machine-readable code; what() holds the human-readable diagnostic.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace vogankm

#endif  // VOGANKM_ERROR_H_

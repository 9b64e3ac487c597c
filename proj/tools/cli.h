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

#ifndef VOGANKM_TOOLS_CLI_H_
#define VOGANKM_TOOLS_CLI_H_

#include <ostream>
#include <string>
#include <vector>

namespace vogankm::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitMismatch = 1;
inline constexpr int kExitInputError = 2;

struct CliOptions {
  bool color = false;
};

// Runs the command line `args` (without the program name) and returns the
// process exit code.
int Run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err, const CliOptions& options = {});

}  // namespace vogankm::cli

#endif  // VOGANKM_TOOLS_CLI_H_

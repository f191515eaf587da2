// Copyright 2026 The Tempus Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef TEMPUS_TOOLS_CLI_HPP
#define TEMPUS_TOOLS_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace tempus::cli {

/// Exit codes of the `tempus` tool.
inline constexpr int kExitOk = 0;
inline constexpr int kExitError = 1;           // bad input, I/O failure
inline constexpr int kExitCheckFailed = 2;     // outputs written but an invariant check failed

/// Runs the tool with `args` (without the program name). Results go to `out`,
/// diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace tempus::cli

#endif  // TEMPUS_TOOLS_CLI_HPP

// Copyright 2026 The zerosum Authors
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

#ifndef ZEROSUM_CLI_H_
#define ZEROSUM_CLI_H_

#include <ostream>
#include <string>
#include <vector>

namespace zerosum {

// Exit codes shared by every subcommand.
inline constexpr int kExitOk = 0;
inline constexpr int kExitNegative = 1;  // not adversarial, audit failed, ...
inline constexpr int kExitError = 2;     // malformed input or usage

// Runs the command line `args` (args[0] is the program name), writing JSON
// results to `out` and diagnostics to `err`.
int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err);

}  // namespace zerosum

#endif  // ZEROSUM_CLI_H_

// Copyright 2026 The cpw Authors
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

#ifndef CPW_TOOLS_CLI_HPP
#define CPW_TOOLS_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace cpw::cli {

/// Process exit codes.
enum ExitCode : int { kOk = 0, kNegative = 1, kUsage = 2, kResourceCap = 3 };

/// Runs the command line `args` (without the program name). JSON and CSV go
/// to `out`, diagnostics to `err`.
int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cpw::cli

#endif  // CPW_TOOLS_CLI_HPP

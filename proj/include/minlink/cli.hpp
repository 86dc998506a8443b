// Copyright 2026 The minlink Authors
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

#ifndef MINLINK_CLI_HPP
#define MINLINK_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace minlink {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInfeasible = 1;
inline constexpr int kExitInput = 2;

/// Runs the command line `args` (without the program name). Results go to
/// `out`, diagnostics to `err`. MINLINK_LOG=0|1|2 sets the diagnostic level.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace minlink

#endif  // MINLINK_CLI_HPP

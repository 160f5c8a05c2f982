// Copyright 2026 The kdsm Authors.
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

// Command-line front end. One JSON object goes to `out`; progress traces and
// diagnostics go to `err`.
//
// Exit status: 0 success, 1 negative answer (e.g. a violated distance check)
// or user error, 2 internal-consistency failure.

#ifndef KDSM_CLI_H_
#define KDSM_CLI_H_

#include <ostream>
#include <string>
#include <vector>

namespace kdsm {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitInternal = 2;

// Name of the variable overriding the default ellipsoid iteration budget.
inline constexpr const char* kBudgetEnvVar = "KDSM_BUDGET";

// args excludes the program name.
int RunCli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace kdsm

#endif  // KDSM_CLI_H_

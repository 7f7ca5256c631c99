// Copyright 2026 The kassoc Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef KASSOC_CLI_HPP_
#define KASSOC_CLI_HPP_

#include <iosfwd>
#include <string>
#include <vector>

namespace kassoc::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitPrecondition = 1;
inline constexpr int kExitInput = 2;

/// Runs one subcommand (assoc, orient, mb, sp, audit, sample). `args`
/// excludes the program name. The JSON report goes to `out` (or --out), a
/// one-line summary and diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Key every report carries that varies between runs.
inline constexpr const char* kTimingField = "wall_time_ms";

}  // namespace kassoc::cli

#endif  // KASSOC_CLI_HPP_

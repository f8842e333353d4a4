// Copyright 2026 The tqpe Authors
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

#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace tqpe {

enum ExitCode : int {
  kExitOk = 0,
  kExitFailure = 1,
  kExitUsage = 2,
  kExitInvalidArgument = 3,
  kExitResourceLimit = 4,
  kExitIo = 5,
  kExitPhaseAliasing = 6,
  kExitInternal = 7,
};

/// Environment variable naming the default output directory.
inline constexpr const char* kOutputDirEnv = "TQPE_OUTPUT_DIR";

/// "3", "1,2,4", "3..10" or a mix such as "1,4..6". Throws InvalidArgument.
std::vector<int> parse_int_list(const std::string& text);
std::vector<double> parse_real_list(const std::string& text);

/// Runs one command line (without the program name) and returns the exit
/// code. Summary lines go to `out`, diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run_cli(const std::vector<std::string>& args);

}  // namespace tqpe

// Copyright 2026 The symclone Authors
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


// Command-line front end. `run_cli` holds all of the logic so tests can
// drive it without spawning a process.

#pragma once

#include <complex>
#include <string>
#include <vector>

namespace symclone {

inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;

struct CliOutcome {
  int exit_code = kExitOk;
  std::string output;  // report text; empty when written to --out
  std::string error;   // diagnostics for stderr
};

/// `args` excludes the program name.
CliOutcome run_cli(const std::vector<std::string>& args);

/// Comma-separated "a+bi", "a-bi", "bi" or bare real tokens. Throws
/// std::invalid_argument on malformed input.
std::vector<std::complex<double>> parse_state(const std::string& text);

}  // namespace symclone

// Copyright 2026 The cyclewalk authors
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

#ifndef CYCLEWALK_CLI_HPP_
#define CYCLEWALK_CLI_HPP_

#include <ostream>
#include <string>
#include <vector>

namespace cyclewalk::cli {

/// Exit codes: 0 success, 1 verification failure, 2 usage/validation error.
inline constexpr int kExitOk = 0;
inline constexpr int kExitVerificationFailed = 1;
inline constexpr int kExitUsage = 2;

/// Runs the command line given as argv-style tokens (excluding the program
/// name).  Results go to `out` unless --out redirects them to a file;
/// diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace cyclewalk::cli

#endif  // CYCLEWALK_CLI_HPP_

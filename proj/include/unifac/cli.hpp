// Copyright 2026 The unifac Authors
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

#ifndef UNIFAC_CLI_HPP
#define UNIFAC_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace unifac::cli {

/// Process exit codes.
enum ExitCode : int {
  kOk = 0,
  kVerifyFailed = 1,  // verify: residual above tolerance
  kParseError = 2,    // bad flags, unreadable or malformed file
  kShapeError = 3,    // counts or dimensions do not match, value out of range
  kNotUnitary = 4,    // decompose input failed the unitarity gate
};

/// Runs one subcommand. `args` excludes the program name. Results written to
/// `--out -` go to `out`; every diagnostic goes to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace unifac::cli

#endif  // UNIFAC_CLI_HPP

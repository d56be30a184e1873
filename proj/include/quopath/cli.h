// Copyright 2026 The Quopath Authors
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

#ifndef QUOPATH_CLI_H
#define QUOPATH_CLI_H

#include <complex>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "quopath/fp.h"

namespace quopath {

/// Exit codes of the command-line tool.
enum ExitCode : int {
    kExitOk = 0,
    kExitInvalid = 1,
    kExitCapExceeded = 2,
    kExitCheckFailed = 3,
};

/// Runs the tool on `args` (args[0] is the program name) and returns the exit code.
int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

/// Comma-separated residues, e.g. "0,2,1"; register 0 first.
std::vector<uint32_t> parse_tuple(std::string_view text, OddPrime modulus, size_t num_registers);

/// Fixed six fractional digits; never prints a negative zero.
std::string format_decimal(double value);
std::string format_complex(std::complex<double> value);

}  // namespace quopath

#endif

// Copyright 2026 The netcert Authors
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

#ifndef NETCERT_CLI_H
#define NETCERT_CLI_H

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

namespace netcert {

/// Exit codes of the command-line tool.
enum ExitCode : int {
    EXIT_OK = 0,             ///< certified / all checks passed
    EXIT_ERROR = 1,          ///< bad input or internal failure
    EXIT_NOT_CERTIFIED = 2,  ///< ran to completion without a certificate (or with failing checks)
    EXIT_BUDGET = 3,         ///< a budget ran out; output is partial
};

/// Parses "2..5", "3" or "2,3,7" into a list of integers.
std::vector<int> parse_int_range(const std::string &text);

/// Entire command-line front end. Regular output goes to `out`, diagnostics to `err`.
int run_cli(int argc, const char *const *argv, std::ostream &out, std::ostream &err);

int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

}  // namespace netcert

#endif

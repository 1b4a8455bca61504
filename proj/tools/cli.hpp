// Copyright 2026 The djpart Authors
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

#ifndef DJPART_TOOLS_CLI_HPP
#define DJPART_TOOLS_CLI_HPP

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "djpart/cell.hpp"

namespace djpart::cli {

/// Process exit codes.
enum ExitCode : int {
    kSuccess = 0,
    kUsageError = 1,
    kDataError = 2,
    kCapacityError = 3,
    kOracleContractError = 4,
};

/// Parsed input file. Every row has a value; bins are present either on
/// every row or on none.
struct InputFile {
    std::vector<Cell> bins;
    std::vector<Number> values;
    [[nodiscard]] bool has_bins() const { return !bins.empty(); }
};

/// Reads "bin value" or "value" lines; '#' starts a comment and blank lines
/// are skipped. Throws TypeError/DomainError for malformed rows and
/// CapacityError for more than 25 rows.
InputFile parse_input(std::istream& in);

/// Runs one command line. `args` excludes the program name. Results go to
/// `out` only when the command succeeds; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace djpart::cli

#endif  // DJPART_TOOLS_CLI_HPP

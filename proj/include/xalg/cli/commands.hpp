/*
   Copyright 2026 The xalg Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef XALG_CLI_COMMANDS_HPP
#define XALG_CLI_COMMANDS_HPP

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "xalg/cli/definition.hpp"
#include "xalg/cli/report.hpp"

namespace xalg::cli {

/// Wrong number of positional arguments and similar; exit status 2.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct RunOptions {
  std::string format = "text";
  SearchOptions search;
  std::optional<std::uint64_t> seed;
  bool timing = false;
  std::optional<std::string> file;
};

const std::vector<std::string>& command_names();

/// Dispatches one command against `defs`, appending to `report`. Library
/// errors propagate.
void run_command(const std::string& command, const std::vector<std::string>& args, const DefinitionFile& defs,
                 const RunOptions& options, Report& report);

/// 0 pass, 1 verification failure or library error, 2 usage or parse error,
/// 3 search budget exceeded.
int exit_code(ErrorKind kind);

/// Loads definitions (the bundled catalog when no file is given), runs the
/// command and prints the report. Returns the exit status.
int run(const std::string& command, const std::vector<std::string>& args, const RunOptions& options,
        std::ostream& out, std::ostream& err);

}  // namespace xalg::cli

#endif  // XALG_CLI_COMMANDS_HPP

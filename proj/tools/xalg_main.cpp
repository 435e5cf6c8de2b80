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

#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "xalg/cli/commands.hpp"

int main(int argc, char** argv) {
  CLI::App app{"xalg: crossed modules of commutative algebras over F_p"};
  app.set_version_flag("--version", "xalg 1.0.0");

  std::string command;
  std::vector<std::string> names;
  xalg::cli::RunOptions options;
  std::string file;
  std::uint64_t seed = 0;

  std::string commands;
  for (const auto& c : xalg::cli::command_names()) commands += (commands.empty() ? "" : ", ") + c;
  app.add_option("command", command, "one of: " + commands)->required();
  app.add_option("names", names, "object names from the definition file");
  app.add_option("--file,-f", file, "definition file (default: bundled catalog)");
  app.add_option("--format", options.format, "report format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--max-search", options.search.max_search, "largest candidate space a search may enumerate")
      ->check(CLI::PositiveNumber);
  auto* seed_opt = app.add_option("--seed", seed, "echoed in the report; no algorithm is randomized");
  app.add_flag("--timing", options.timing, "add wall-clock fields to the report");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }
  if (!file.empty()) options.file = file;
  if (seed_opt->count() > 0) options.seed = seed;
  return xalg::cli::run(command, names, options, std::cout, std::cerr);
}

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

#ifndef XALG_CLI_CATALOG_HPP
#define XALG_CLI_CATALOG_HPP

#include <string_view>

#include "xalg/algebra.hpp"
#include "xalg/cli/definition.hpp"
#include "xalg/cli/report.hpp"

namespace xalg::cli {

/// Text of the bundled catalog/t3.xalg, compiled in.
std::string_view builtin_definitions_text();
DefinitionFile builtin_definitions();

/// Runs every bundled worked example, one report section per entry.
void run_catalog(const SearchOptions& options, bool timing, Report& report);

}  // namespace xalg::cli

#endif  // XALG_CLI_CATALOG_HPP

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

#include "xalg/cli/commands.hpp"

#include <chrono>
#include <ostream>

#include "sections.hpp"
#include "xalg/cli/catalog.hpp"

namespace xalg::cli {
namespace {

void expect_args(const std::string& command, const std::vector<std::string>& args, std::size_t lo, std::size_t hi,
                 const char* usage) {
  if (args.size() < lo || args.size() > hi) throw UsageError("usage: xalg " + command + " " + usage);
}

}  // namespace

const std::vector<std::string>& command_names() {
  static const std::vector<std::string> names{"verify", "pullback",   "induce", "induce-epi", "induce-ideal",
                                              "adjunction", "free", "koszul", "multiplier", "catalog"};
  return names;
}

void run_command(const std::string& command, const std::vector<std::string>& args, const DefinitionFile& defs,
                 const RunOptions& options, Report& report) {
  const SearchOptions& search = options.search;
  if (command == "verify") {
    std::vector<std::string> names = args;
    if (names.empty())
      for (const auto& [name, xm] : defs.xmods) names.push_back(name);
    for (const auto& name : names) verify_section(report.section(name, "crossed module axioms"), defs.xmod(name));
  } else if (command == "pullback") {
    expect_args(command, args, 2, 2, "<xmod over R> <morphism S -> R>");
    pullback_section(report.section("pullback", "pullback along a base morphism"), defs.xmod(args[0]),
                     defs.morphism(args[1]), search);
  } else if (command == "induce") {
    expect_args(command, args, 2, 2, "<xmod over S> <morphism S -> R>");
    induce_section(report.section("induce", "induced crossed module D (x)_S R"), defs.xmod(args[0]),
                   defs.morphism(args[1]), search);
  } else if (command == "induce-epi") {
    expect_args(command, args, 2, 2, "<xmod over S> <surjective morphism S -> R>");
    epi_section(report.section("induce-epi", "induced along an epimorphism, D/KD"), defs.xmod(args[0]),
                defs.morphism(args[1]), search);
  } else if (command == "induce-ideal") {
    expect_args(command, args, 3, 4, "<algebra R> <ideal S> <ideal D inside S> [<ideal of R giving Q>]");
    std::optional<Ideal> q;
    if (args.size() == 4) q = defs.ideal(args[3]);
    ideal_section(report.section("induce-ideal", "induced along an ideal inclusion, D x (D/D^2 (x) Q)"),
                  defs.algebra(args[0]), defs.ideal(args[1]), defs.ideal(args[2]), q, search);
  } else if (command == "adjunction") {
    expect_args(command, args, 3, 3, "<morphism S -> R> <xmod D over S> <xmod C over R>");
    adjunction_section(report.section("adjunction", "hom-set bijection between induced and pullback"),
                       defs.morphism(args[0]), defs.xmod(args[1]), defs.xmod(args[2]), search);
  } else if (command == "free") {
    expect_args(command, args, 1, 3, "<function> [<target xmod> [<w function>]]");
    const FunctionValues& f = defs.function(args[0]);
    FreeXModPresentation pres =
        free_section(report.section("free", "free crossed module on f"), defs.algebra(f.algebra), f.values,
                     f.generators, search);
    if (args.size() >= 2) {
      std::optional<std::vector<Vector>> w;
      if (args.size() == 3) w = defs.function(args[2]).values;
      free_target_section(report.section("free-universal", "mediators into " + args[1]), pres, defs.xmod(args[1]), w,
                          search);
    }
  } else if (command == "koszul") {
    expect_args(command, args, 1, 1, "<function>");
    const FunctionValues& f = defs.function(args[0]);
    koszul_section(report.section("koszul", "Koszul presentation of the free crossed module"),
                   defs.algebra(f.algebra), f.values);
  } else if (command == "multiplier") {
    expect_args(command, args, 1, 1, "<algebra>");
    multiplier_section(report.section("multiplier", "multiplier algebra and multiplication crossed module"),
                       defs.algebra(args[0]));
  } else if (command == "catalog") {
    expect_args(command, args, 0, 0, "");
    run_catalog(search, options.timing, report);
  } else {
    throw Error(ErrorKind::UnknownCommand, "unknown command '" + command + "'");
  }
}

int exit_code(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::SyntaxError:
    case ErrorKind::ValidationError:
    case ErrorKind::DanglingReference:
    case ErrorKind::UnknownCommand:
      return 2;
    case ErrorKind::SearchTooLarge:
    case ErrorKind::BudgetExceeded:
      return 3;
    default:
      return 1;
  }
}

int run(const std::string& command, const std::vector<std::string>& args, const RunOptions& options,
        std::ostream& out, std::ostream& err) {
  Report report(command, args);
  report.option("format", options.format);
  report.option("max_search", options.search.max_search);
  if (options.seed) report.option("seed", *options.seed);
  if (options.file) report.option("file", *options.file);

  auto emit = [&] {
    if (options.format == "json")
      out << report.to_json().dump(2) << '\n';
    else
      out << report.to_text();
  };

  int status = 0;
  try {
    const DefinitionFile defs = options.file ? load_definitions(*options.file) : builtin_definitions();
    const auto start = std::chrono::steady_clock::now();
    run_command(command, args, defs, options, report);
    if (options.timing)
      report.option("elapsed_ms",
                    std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count());
    status = report.passed() ? 0 : 1;
  } catch (const UsageError& e) {
    err << e.what() << '\n';
    return 2;
  } catch (const Error& e) {
    report.set_error(e);
    err << "error: " << e.what() << '\n';
    status = exit_code(e.kind());
  }
  emit();
  return status;
}

}  // namespace xalg::cli

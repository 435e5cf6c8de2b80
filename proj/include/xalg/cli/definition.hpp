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

#ifndef XALG_CLI_DEFINITION_HPP
#define XALG_CLI_DEFINITION_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "xalg/xmod.hpp"

namespace xalg::cli {

/// A named list of elements of one algebra, e.g. the values f(y_i) of a
/// function on generators.
struct FunctionValues {
  std::string algebra;
  std::vector<std::string> generators;
  std::vector<Vector> values;
};

/// Validated object graph loaded from a definition file. Every object has
/// passed its constructor's checks; every reference resolved.
struct DefinitionFile {
  std::optional<PrimeField> field;
  std::map<std::string, Algebra> algebras;
  std::map<std::string, AlgebraMorphism> morphisms;
  std::map<std::string, Ideal> ideals;
  std::map<std::string, AlgebraAction> actions;
  std::map<std::string, CrossedModule> xmods;
  std::map<std::string, FunctionValues> functions;

  const Algebra& algebra(const std::string& name) const;
  const AlgebraMorphism& morphism(const std::string& name) const;
  const Ideal& ideal(const std::string& name) const;
  const CrossedModule& xmod(const std::string& name) const;
  const FunctionValues& function(const std::string& name) const;
};

/// Throws SyntaxError (malformed text), ValidationError (an object fails its
/// checks; the message names the entry and line) or DanglingReference.
DefinitionFile parse_definitions(const std::string& text, const std::string& source = "<string>");
DefinitionFile load_definitions(const std::string& path);

}  // namespace xalg::cli

#endif  // XALG_CLI_DEFINITION_HPP

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

#include "xalg/error.hpp"

#include <sstream>

namespace xalg {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidModulus: return "InvalidModulus";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::NotCommutative: return "NotCommutative";
    case ErrorKind::NotAssociative: return "NotAssociative";
    case ErrorKind::BadUnit: return "BadUnit";
    case ErrorKind::NotMorphism: return "NotMorphism";
    case ErrorKind::NotIdeal: return "NotIdeal";
    case ErrorKind::NotSubalgebra: return "NotSubalgebra";
    case ErrorKind::BadAction: return "BadAction";
    case ErrorKind::NotEquivariant: return "NotEquivariant";
    case ErrorKind::PeifferFails: return "PeifferFails";
    case ErrorKind::NotXModMorphism: return "NotXModMorphism";
    case ErrorKind::HypothesisViolated: return "HypothesisViolated";
    case ErrorKind::NotCommutativeMultipliers: return "NotCommutativeMultipliers";
    case ErrorKind::SearchTooLarge: return "SearchTooLarge";
    case ErrorKind::BudgetExceeded: return "BudgetExceeded";
    case ErrorKind::NotSurjective: return "NotSurjective";
    case ErrorKind::RNotUnital: return "RNotUnital";
    case ErrorKind::WNotCompatible: return "WNotCompatible";
    case ErrorKind::SyntaxError: return "SyntaxError";
    case ErrorKind::ValidationError: return "ValidationError";
    case ErrorKind::DanglingReference: return "DanglingReference";
    case ErrorKind::UnknownCommand: return "UnknownCommand";
  }
  return "Unknown";
}

namespace {

std::string format_message(ErrorKind kind, const std::string& message,
                           const std::vector<std::size_t>& witness) {
  std::ostringstream out;
  out << to_string(kind);
  if (!witness.empty()) {
    out << '(';
    for (std::size_t i = 0; i < witness.size(); ++i) out << (i ? "," : "") << witness[i];
    out << ')';
  }
  if (!message.empty()) out << ": " << message;
  return out.str();
}

}  // namespace

Error::Error(ErrorKind kind, std::string message, std::vector<std::size_t> witness)
    : std::runtime_error(format_message(kind, message, witness)),
      kind_(kind),
      witness_(std::move(witness)) {}

}  // namespace xalg

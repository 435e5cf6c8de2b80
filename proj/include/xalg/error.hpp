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

#ifndef XALG_ERROR_HPP
#define XALG_ERROR_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace xalg {

enum class ErrorKind {
  InvalidModulus,
  DimensionMismatch,
  NotCommutative,
  NotAssociative,
  BadUnit,
  NotMorphism,
  NotIdeal,
  NotSubalgebra,
  BadAction,
  NotEquivariant,
  PeifferFails,
  NotXModMorphism,
  HypothesisViolated,
  NotCommutativeMultipliers,
  SearchTooLarge,
  BudgetExceeded,
  NotSurjective,
  RNotUnital,
  WNotCompatible,
  SyntaxError,
  ValidationError,
  DanglingReference,
  UnknownCommand,
};

std::string_view to_string(ErrorKind kind);

/// Every failure in the library is reported through this type. Validation
/// failures carry the basis indices that witness the violated law.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, std::string message, std::vector<std::size_t> witness = {});

  ErrorKind kind() const noexcept { return kind_; }
  const std::vector<std::size_t>& witness() const noexcept { return witness_; }

 private:
  ErrorKind kind_;
  std::vector<std::size_t> witness_;
};

}  // namespace xalg

#endif  // XALG_ERROR_HPP

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

#ifndef XALG_KOSZUL_HPP
#define XALG_KOSZUL_HPP

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "xalg/basechange.hpp"

namespace xalg {

/// Lambda^2 R^n as an R-module: F_p-basis e_b (e_i ^ e_j) for i < j, indexed
/// pair_index * dim R + b.
struct ExteriorSquare {
  Algebra base;
  std::size_t n = 0;
  std::vector<std::pair<std::size_t, std::size_t>> pairs;

  std::size_t rank() const noexcept { return pairs.size(); }
  std::size_t dim() const noexcept { return pairs.size() * base.dim(); }
};

ExteriorSquare exterior_square(const Algebra& r, std::size_t n);

/// d(e_i ^ e_j) = f_i e_j - f_j e_i, extended R-linearly. R^n is indexed
/// i * dim R + b. Returns an (n dim R) x (dim Lambda^2) matrix.
Matrix koszul_differential(const Algebra& r, const std::vector<Vector>& f);

/// r . v on R^n, slot by slot.
Vector act_on_free_module(const Algebra& r, const Vector& rv, const Vector& v);

struct FreeXModPresentation {
  Algebra base;
  std::vector<std::string> generators;
  std::vector<Vector> f;
  Matrix differential;
  QuotientSpace quotient;  // R^n / im d
  CrossedModule xm;

  /// Class of e_i (the generator y_i) in C coordinates.
  Vector generator_class(std::size_t i) const;
};

/// C = R^n / im d with d(c) the linear extension of e_i |-> f_i and product
/// c c' = d(c).c'. Throws RNotUnital.
FreeXModPresentation free_xmod(const Algebra& r, const std::vector<Vector>& f,
                               std::vector<std::string> generators = {});

/// Mediator y_i |-> w_i into `target`; throws WNotCompatible (witness {i})
/// when delta(w_i) != f_i.
MediatorReport free_universal_check(const FreeXModPresentation& pres, const CrossedModule& target,
                                    const std::vector<Vector>& w, const SearchOptions& options = {});

struct IsoLeg {
  std::string name;
  bool verified = false;
  std::string detail;
  bool skipped = false;  // not attempted; ignored by all_verified
};

struct IsoReport {
  std::size_t free_dim = 0;
  std::size_t image_dim = 0;
  std::vector<IsoLeg> legs;
  bool all_verified() const;
};

/// Cross-checks the free crossed module on f against R^n / d(Lambda^2 R^n)
/// computed independently, together with the identities showing theta(P) = 0.
/// The tensor product over the infinite-dimensional k+[X] is not built; the
/// report lists it as a skipped leg.
IsoReport koszul_free_induced_iso(const Algebra& r, const std::vector<Vector>& f);

}  // namespace xalg

#endif  // XALG_KOSZUL_HPP

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

#ifndef XALG_XMOD_HPP
#define XALG_XMOD_HPP

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "xalg/algebra.hpp"

namespace xalg {

/// Bilinear action of a base algebra R on a top algebra C, stored as the
/// constants e_i^R . e_p^C. Validated for (r r').c = r.(r'.c) and
/// r.(c c') = (r.c) c'. Unitality (1.c = c) is recorded, not required.
class AlgebraAction {
 public:
  const Algebra& base() const noexcept { return base_; }
  const Algebra& top() const noexcept { return top_; }
  const Vector& act_basis(std::size_t i, std::size_t p) const { return table_[i * top_.dim() + p]; }
  const std::vector<Vector>& table() const noexcept { return table_; }
  bool is_unital() const noexcept { return unital_; }

  Vector act(const Vector& r, const Vector& c) const;
  /// top.dim() x top.dim() matrix of c |-> r.c
  Matrix action_matrix(const Vector& r) const;

 private:
  AlgebraAction(Algebra base, Algebra top, std::vector<Vector> table, bool unital)
      : base_(std::move(base)), top_(std::move(top)), table_(std::move(table)), unital_(unital) {}

  Algebra base_;
  Algebra top_;
  std::vector<Vector> table_;
  bool unital_;

  friend AlgebraAction make_action(const Algebra&, const Algebra&, std::vector<Vector>);
};

/// `table[i * top.dim() + p]` is e_i . e_p. Throws BadAction with witness
/// indices (i, j, p) for the module law or (i, p, q) for multiplicativity.
AlgebraAction make_action(const Algebra& base, const Algebra& top, std::vector<Vector> table);
/// R acting on itself by multiplication.
AlgebraAction multiplication_action(const Algebra& r);
/// A crossed module (C, R, d): d an equivariant morphism with
/// d(c).c' = c c' (Peiffer).
class CrossedModule {
 public:
  const Algebra& top() const noexcept { return data_->boundary.source(); }
  const Algebra& base() const noexcept { return data_->boundary.target(); }
  const AlgebraMorphism& boundary() const noexcept { return data_->boundary; }
  const AlgebraAction& action() const noexcept { return data_->action; }
  const std::string& label() const noexcept { return data_->label; }

  CrossedModule relabeled(std::string label) const;

 private:
  struct Data {
    AlgebraMorphism boundary;
    AlgebraAction action;
    std::string label;
  };
  explicit CrossedModule(std::shared_ptr<const Data> data) : data_(std::move(data)) {}

  std::shared_ptr<const Data> data_;

  friend CrossedModule validate_xmod(const Algebra&, const Algebra&, const AlgebraMorphism&, const AlgebraAction&,
                                     std::string);
};

/// Throws NotEquivariant(i, p) or PeifferFails(p, q) with basis witnesses.
CrossedModule validate_xmod(const Algebra& top, const Algebra& base, const AlgebraMorphism& boundary,
                            const AlgebraAction& action, std::string label);

struct ExhaustiveCheck {
  bool performed = false;
  bool passed = true;
  std::uint64_t pairs_checked = 0;
};

/// Peiffer on all element pairs of C and equivariance on all pairs R x C.
/// Only performed when |C| * |R| <= limit.
ExhaustiveCheck check_xmod_exhaustive(const CrossedModule& xm, std::uint64_t limit = 4096);

CrossedModule inclusion_xmod(const Algebra& r, const Ideal& ideal, std::string label = {});
CrossedModule identity_xmod(const Algebra& r, std::string label = {});
/// M given by the action constants of R on an m-dimensional module; M gets the
/// zero multiplication and the boundary is zero.
CrossedModule zero_module_xmod(const Algebra& r, std::size_t module_dim, std::vector<Vector> action_table,
                               std::string label = {});
/// (0, R, 0)
CrossedModule zero_xmod(const Algebra& base, std::string label = {});
/// (R, M(R), mu) with delta . r = delta(r).
CrossedModule multiplication_xmod(const Algebra& r, std::string label = {});

/// d(C) verified multiplicatively closed in R.
Ideal boundary_image_is_ideal(const CrossedModule& xm);

struct KernelModule {
  Ideal kernel;                      // ker d, an ideal of C
  QuotientAlgebra base_quotient;     // R / d(C)
  Subalgebra kernel_algebra;         // ker d standalone (zero multiplication)
  AlgebraAction induced_action;      // R/d(C) acting on ker d
};

/// ker d is an ideal of C, an R-submodule, and d(C) acts trivially on it, so
/// it carries an R/d(C)-module structure. All three claims are checked.
KernelModule kernel_module(const CrossedModule& xm);

/// (f, phi) with d' f = phi d and f(r.c) = phi(r).f(c).
class XModMorphism {
 public:
  const CrossedModule& source() const noexcept { return *source_; }
  const CrossedModule& target() const noexcept { return *target_; }
  const AlgebraMorphism& top_map() const noexcept { return top_; }
  const AlgebraMorphism& base_map() const noexcept { return base_; }
  bool is_isomorphism() const { return top_.is_bijective() && base_.is_bijective(); }

 private:
  XModMorphism(std::shared_ptr<const CrossedModule> source, std::shared_ptr<const CrossedModule> target,
               AlgebraMorphism top, AlgebraMorphism base)
      : source_(std::move(source)), target_(std::move(target)), top_(std::move(top)), base_(std::move(base)) {}

  std::shared_ptr<const CrossedModule> source_;
  std::shared_ptr<const CrossedModule> target_;
  AlgebraMorphism top_;
  AlgebraMorphism base_;

  friend XModMorphism make_xmod_morphism(const CrossedModule&, const CrossedModule&, const AlgebraMorphism&,
                                         const AlgebraMorphism&);
};

/// Throws NotXModMorphism: witness (0, p) for a failing square at e_p, (1, i, p)
/// for a failing action law.
XModMorphism make_xmod_morphism(const CrossedModule& source, const CrossedModule& target,
                                const AlgebraMorphism& top_map, const AlgebraMorphism& base_map);
XModMorphism identity_xmod_morphism(const CrossedModule& xm);
XModMorphism compose(const XModMorphism& g, const XModMorphism& f);

/// The linear constraints every top map f must satisfy once the base map is
/// fixed: d' f = phi d and f A_i = A'_{phi(e_i)} f.
MapConstraints top_map_constraints(const CrossedModule& source, const CrossedModule& target,
                                   const AlgebraMorphism& base_map);

/// Visits every crossed module morphism with the given base map whose top map
/// also satisfies `extra` (if given). Returns false if the visitor stopped.
bool search_xmod_morphisms(const CrossedModule& source, const CrossedModule& target, const AlgebraMorphism& base_map,
                           const std::optional<MapConstraints>& extra, const SearchOptions& options,
                           const std::function<bool(const XModMorphism&)>& visit);

/// All morphisms source -> target; the base map is fixed or enumerated.
std::vector<XModMorphism> enumerate_xmod_morphisms(const CrossedModule& source, const CrossedModule& target,
                                                   const std::optional<AlgebraMorphism>& fixed_base = std::nullopt,
                                                   const SearchOptions& options = {});

}  // namespace xalg

#endif  // XALG_XMOD_HPP

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

#ifndef XALG_ALGEBRA_HPP
#define XALG_ALGEBRA_HPP

#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "xalg/linalg.hpp"

namespace xalg {

/// Finite-dimensional commutative associative F_p-algebra given by structure
/// constants on an explicit basis e_0..e_{n-1}. Immutable; copies share the
/// underlying tables.
///
/// Instances only come out of validate_algebra (or constructions that call
/// it), so every Algebra in circulation satisfies commutativity,
/// associativity and, when present, the unit law.
class Algebra {
 public:
  const PrimeField& field() const noexcept { return data_->field; }
  std::size_t dim() const noexcept { return data_->dim; }
  const std::string& label() const noexcept { return data_->label; }
  const std::optional<Vector>& unit() const noexcept { return data_->unit; }
  bool is_unital() const noexcept { return data_->unit.has_value(); }

  /// e_i * e_j
  const Vector& product(std::size_t i, std::size_t j) const { return data_->products[i * data_->dim + j]; }
  const std::vector<Vector>& structure_constants() const noexcept { return data_->products; }

  Vector multiply(const Vector& x, const Vector& y) const;
  /// Matrix of y |-> x*y.
  Matrix multiplication_matrix(const Vector& x) const;
  Vector basis_element(std::size_t i) const { return field().unit_vector(dim(), i); }
  Vector zero() const { return Vector(dim(), 0); }
  /// Number of elements, saturated.
  std::uint64_t order() const noexcept { return saturating_power(field().modulus(), dim()); }
  bool has_zero_multiplication() const noexcept;

  Algebra relabeled(std::string label) const;

  /// Structural equality; labels are ignored.
  bool operator==(const Algebra& o) const;

 private:
  struct Data {
    PrimeField field;
    std::size_t dim;
    std::vector<Vector> products;
    std::optional<Vector> unit;
    std::string label;
  };
  explicit Algebra(std::shared_ptr<const Data> data) : data_(std::move(data)) {}

  std::shared_ptr<const Data> data_;

  friend Algebra validate_algebra(PrimeField, std::size_t, std::vector<Vector>, std::optional<Vector>,
                                  std::string);
};

/// Checks commutativity, associativity (over basis triples) and the unit law.
/// `products` holds e_i*e_j at index i*dim+j. Throws NotCommutative(i,j),
/// NotAssociative(i,j,l) or BadUnit(i).
Algebra validate_algebra(PrimeField field, std::size_t dim, std::vector<Vector> products,
                         std::optional<Vector> unit, std::string label);

/// Like validate_algebra, but the unit is found by solving u*e_i = e_i.
Algebra make_algebra_detect_unit(PrimeField field, std::size_t dim, std::vector<Vector> products,
                                 std::string label);
std::optional<Vector> find_unit(const PrimeField& field, std::size_t dim, const std::vector<Vector>& products);

Algebra zero_multiplication_algebra(PrimeField field, std::size_t dim, std::string label);
Algebra zero_algebra(PrimeField field);

/// Exhaustive law check over all element triples. Only run when the algebra
/// has at most `max_order` elements; returns nullopt otherwise.
std::optional<bool> check_algebra_exhaustive(const Algebra& a, std::uint64_t max_order = 512);

/// Linear map between algebras satisfying f(xy) = f(x)f(y). Units need not be
/// preserved.
class AlgebraMorphism {
 public:
  const Algebra& source() const noexcept { return source_; }
  const Algebra& target() const noexcept { return target_; }
  /// target.dim() x source.dim()
  const Matrix& matrix() const noexcept { return matrix_; }
  Vector apply(const Vector& x) const { return matrix_.apply(x); }

  bool is_injective() const { return rank(matrix_) == source_.dim(); }
  bool is_surjective() const { return rank(matrix_) == target_.dim(); }
  bool is_bijective() const { return is_injective() && is_surjective(); }

  bool operator==(const AlgebraMorphism& o) const {
    return matrix_ == o.matrix_ && source_ == o.source_ && target_ == o.target_;
  }

 private:
  AlgebraMorphism(Algebra source, Algebra target, Matrix matrix)
      : source_(std::move(source)), target_(std::move(target)), matrix_(std::move(matrix)) {}

  Algebra source_;
  Algebra target_;
  Matrix matrix_;

  friend AlgebraMorphism make_morphism(const Algebra&, const Algebra&, Matrix);
};

/// Throws DimensionMismatch or NotMorphism(i,j).
AlgebraMorphism make_morphism(const Algebra& source, const Algebra& target, Matrix matrix);
AlgebraMorphism identity_morphism(const Algebra& a);
AlgebraMorphism zero_morphism(const Algebra& source, const Algebra& target);
/// g after f
AlgebraMorphism compose(const AlgebraMorphism& g, const AlgebraMorphism& f);
/// Inverse of a bijective morphism.
AlgebraMorphism inverse(const AlgebraMorphism& f);

class Ideal {
 public:
  const Algebra& parent() const noexcept { return parent_; }
  const Subspace& space() const noexcept { return space_; }
  std::size_t dim() const noexcept { return space_.dim(); }
  bool contains(const Vector& v) const { return space_.contains(v); }

  bool operator==(const Ideal& o) const { return space_ == o.space_ && parent_ == o.parent_; }

 private:
  Ideal(Algebra parent, Subspace space) : parent_(std::move(parent)), space_(std::move(space)) {}

  Algebra parent_;
  Subspace space_;

  friend Ideal make_ideal(const Algebra&, Subspace);
};

/// Throws NotIdeal(k,i) when e_i times basis row k leaves the space.
Ideal make_ideal(const Algebra& parent, Subspace space);
Ideal zero_ideal(const Algebra& parent);
Ideal whole_ideal(const Algebra& parent);
Ideal ideal_closure(const Algebra& parent, const std::vector<Vector>& generators);
/// span of all products, A^2
Ideal square_ideal(const Algebra& a);
/// Product ideal IJ, the span of all products of elements of I and J.
Ideal product_ideal(const Ideal& i, const Ideal& j);

/// A multiplicatively closed subspace presented as a standalone algebra.
struct Subalgebra {
  Algebra algebra;
  Subspace space;
  Matrix inclusion;  // ambient.dim() x space.dim()
};

/// Restricts structure constants to `space` (basis = canonical basis of the
/// subspace). Throws NotSubalgebra.
Subalgebra subalgebra(const Algebra& ambient, const Subspace& space, std::string label);

struct QuotientAlgebra {
  Algebra algebra;
  AlgebraMorphism projection;
  QuotientSpace space;
};

QuotientAlgebra quotient_algebra(const Algebra& parent, const Ideal& ideal);

struct ProductAlgebra {
  Algebra algebra;
  AlgebraMorphism first_projection;
  AlgebraMorphism second_projection;
  AlgebraMorphism first_injection;
  AlgebraMorphism second_injection;
};

ProductAlgebra product_algebra(const Algebra& a, const Algebra& b);

Ideal kernel_ideal(const AlgebraMorphism& f);
Subspace image_space(const AlgebraMorphism& f);
Ideal annihilator(const Algebra& a);
/// Nilpotent elements. In characteristic p the map x |-> x^p is F_p-linear,
/// so the nilradical is the kernel of a suitable iterate of it.
Ideal nilradical(const Algebra& a);

struct MultiplierAlgebra {
  Algebra algebra;
  AlgebraMorphism mu;               // r |-> (r' |-> r r')
  std::vector<Matrix> multipliers;  // basis of M(R) as n x n matrices
  /// The multiplier with the given coordinates.
  Matrix to_matrix(const Vector& coords) const;
};

/// M(R) = { delta : delta(r r') = delta(r) r' } with composition. Requires
/// Ann(R) = 0 or R^2 = R (HypothesisViolated otherwise); reports
/// NotCommutativeMultipliers if composition fails to commute.
MultiplierAlgebra multiplier_algebra(const Algebra& r);

// ---------------------------------------------------------------------------
// Morphism search

struct SearchOptions {
  std::uint64_t max_search = std::uint64_t{1} << 24;
};

/// Affine constraints on an unknown target.dim() x source.dim() matrix F.
class MapConstraints {
 public:
  MapConstraints(PrimeField field, std::size_t rows, std::size_t cols);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  std::size_t variable(std::size_t r, std::size_t c) const noexcept { return r * cols_ + c; }

  void add_equation(Vector coefficients, Scalar rhs);
  /// F x = y
  void add_point(const Vector& x, const Vector& y);
  /// G F = H
  void add_left_product(const Matrix& g, const Matrix& h);
  /// F G = H
  void add_right_product(const Matrix& g, const Matrix& h);
  /// F A = B F
  void add_intertwining(const Matrix& a, const Matrix& b);
  void fix(const Matrix& f);

  const PrimeField& field() const noexcept { return field_; }
  const std::vector<Vector>& equations() const noexcept { return equations_; }
  const Vector& rhs() const noexcept { return rhs_; }

 private:
  PrimeField field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Vector> equations_;
  Vector rhs_;
};

/// Enumerates every multiplicative matrix satisfying `constraints`, in a fixed
/// deterministic order, calling `visit` on each; `visit` returns false to
/// stop. The free part of the affine solution space must have at most
/// options.max_search points (SearchTooLarge otherwise). Columns are fixed
/// one source basis element at a time and partial products are checked as
/// soon as they are determined.
void search_multiplicative_maps(const Algebra& source, const Algebra& target, const MapConstraints& constraints,
                                const SearchOptions& options, const std::function<bool(const Matrix&)>& visit);

/// Size of the search space implied by `constraints` (saturated), 0 when
/// inconsistent.
std::uint64_t search_space_size(const MapConstraints& constraints);

/// All morphisms source -> target with f(x) = y for every pinned pair.
std::vector<AlgebraMorphism> enumerate_morphisms(const Algebra& source, const Algebra& target,
                                                 const std::vector<std::pair<Vector, Vector>>& constraints = {},
                                                 const SearchOptions& options = {});

}  // namespace xalg

#endif  // XALG_ALGEBRA_HPP

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

#ifndef XALG_LINALG_HPP
#define XALG_LINALG_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

namespace xalg {

using Scalar = std::uint32_t;
using Vector = std::vector<Scalar>;

/// The prime field F_p, 2 <= p <= 97. Construction rejects composite or
/// out-of-range moduli.
class PrimeField {
 public:
  static constexpr std::uint32_t kMaxModulus = 97;

  explicit PrimeField(std::uint32_t modulus);

  std::uint32_t modulus() const noexcept { return p_; }

  Scalar reduce(std::int64_t value) const noexcept;
  Scalar add(Scalar a, Scalar b) const noexcept { return (a + b) % p_; }
  Scalar sub(Scalar a, Scalar b) const noexcept { return (a + p_ - b) % p_; }
  Scalar mul(Scalar a, Scalar b) const noexcept { return (a * b) % p_; }
  Scalar neg(Scalar a) const noexcept { return (p_ - a) % p_; }
  Scalar inv(Scalar a) const;

  Vector zero(std::size_t n) const { return Vector(n, 0); }
  Vector unit_vector(std::size_t n, std::size_t i) const;
  Vector reduce(const std::vector<std::int64_t>& values) const;
  Vector add(const Vector& a, const Vector& b) const;
  Vector sub(const Vector& a, const Vector& b) const;
  Vector scale(Scalar s, const Vector& v) const;
  /// y += a * x
  void axpy(Vector& y, Scalar a, const Vector& x) const;

  bool operator==(const PrimeField&) const = default;

 private:
  std::uint32_t p_;
};

bool is_zero(const Vector& v) noexcept;

/// Strongly typed element of F_p. Kernels work on raw Scalar vectors; this
/// type is the checked entry point for scalar arithmetic.
class Fp {
 public:
  Fp(PrimeField field, std::int64_t value) : field_(field), value_(field.reduce(value)) {}

  const PrimeField& field() const noexcept { return field_; }
  Scalar value() const noexcept { return value_; }

  Fp operator+(const Fp& o) const;
  Fp operator-(const Fp& o) const;
  Fp operator*(const Fp& o) const;
  Fp operator/(const Fp& o) const;
  Fp operator-() const { return Fp(field_, field_.neg(value_)); }
  Fp inverse() const { return Fp(field_, field_.inv(value_)); }

  bool operator==(const Fp&) const = default;

 private:
  void check_same(const Fp& o) const;

  PrimeField field_;
  Scalar value_;
};

/// Dense row-major matrix over F_p. Zero rows or columns are allowed.
class Matrix {
 public:
  Matrix(PrimeField field, std::size_t rows, std::size_t cols);

  static Matrix identity(PrimeField field, std::size_t n);
  static Matrix from_rows(PrimeField field, std::size_t cols,
                          const std::vector<std::vector<std::int64_t>>& rows);
  static Matrix from_row_vectors(PrimeField field, std::size_t cols, const std::vector<Vector>& rows);
  static Matrix from_columns(PrimeField field, std::size_t rows, const std::vector<Vector>& columns);

  const PrimeField& field() const noexcept { return field_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Scalar operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  void set(std::size_t r, std::size_t c, Scalar v) { data_[r * cols_ + c] = v % field_.modulus(); }

  Vector row(std::size_t r) const;
  Vector column(std::size_t c) const;
  std::vector<Vector> row_list() const;

  Vector apply(const Vector& x) const;
  Matrix operator*(const Matrix& rhs) const;
  Matrix operator+(const Matrix& rhs) const;
  Matrix operator-(const Matrix& rhs) const;
  Matrix transpose() const;
  bool is_zero() const noexcept;

  bool operator==(const Matrix&) const = default;

 private:
  PrimeField field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Scalar> data_;
};

Matrix hstack(const Matrix& left, const Matrix& right);
Matrix vstack(const Matrix& top, const Matrix& bottom);

/// Reduced row echelon form with zero rows dropped.
Matrix rref(const Matrix& m);
/// Pivot column of each row of a matrix already in RREF.
std::vector<std::size_t> pivot_columns(const Matrix& reduced);
std::size_t rank(const Matrix& m);

/// A subspace of F_p^n held by its canonical (RREF) basis. Two subspaces are
/// equal iff their canonical bases are identical.
class Subspace {
 public:
  static Subspace zero(PrimeField field, std::size_t ambient_dim);
  static Subspace full(PrimeField field, std::size_t ambient_dim);
  static Subspace span(PrimeField field, std::size_t ambient_dim, const std::vector<Vector>& generators);
  /// Row space of `generators`.
  static Subspace row_space(const Matrix& generators);

  const PrimeField& field() const noexcept { return basis_.field(); }
  std::size_t ambient_dim() const noexcept { return basis_.cols(); }
  std::size_t dim() const noexcept { return basis_.rows(); }
  const Matrix& basis() const noexcept { return basis_; }
  Vector basis_vector(std::size_t i) const { return basis_.row(i); }
  std::vector<Vector> basis_vectors() const { return basis_.row_list(); }
  const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }

  /// v minus its components along the basis; zero iff v lies in the space.
  Vector reduce(const Vector& v) const;
  bool contains(const Vector& v) const;
  /// Coordinates of v in the canonical basis, or nullopt if v is outside.
  std::optional<Vector> coordinates(const Vector& v) const;

  bool operator==(const Subspace& o) const { return basis_ == o.basis_; }

 private:
  explicit Subspace(Matrix reduced);

  Matrix basis_;
  std::vector<std::size_t> pivots_;
};

Subspace kernel(const Matrix& m);
Subspace column_space(const Matrix& m);
Subspace sum(const Subspace& a, const Subspace& b);
Subspace intersect(const Subspace& a, const Subspace& b);
inline bool contains(const Subspace& a, const Vector& v) { return a.contains(v); }

/// Free-variables-zero solution of m x = rhs, or nullopt if inconsistent.
std::optional<Vector> solve(const Matrix& m, const Vector& rhs);

/// F_p^n modulo a relation subspace. Quotient coordinates are indexed by the
/// non-pivot columns of the relations (the section).
class QuotientSpace {
 public:
  explicit QuotientSpace(Subspace relations);

  std::size_t ambient_dim() const noexcept { return relations_.ambient_dim(); }
  std::size_t dim() const noexcept { return section_.size(); }
  const Subspace& relations() const noexcept { return relations_; }
  const std::vector<std::size_t>& section() const noexcept { return section_; }
  const PrimeField& field() const noexcept { return relations_.field(); }

  Vector project(const Vector& v) const;
  Vector lift(const Vector& coords) const;
  /// dim() x ambient_dim() matrix of project.
  Matrix projection_matrix() const;
  /// ambient_dim() x dim() matrix of lift.
  Matrix lift_matrix() const;

 private:
  Subspace relations_;
  std::vector<std::size_t> section_;
};

QuotientSpace quotient(std::size_t ambient_dim, const Subspace& relations);

/// Calls `visit` with every vector of F_p^n in lexicographic order. Stops
/// early when `visit` returns false.
template <class Visit>
bool for_each_vector(const PrimeField& field, std::size_t n, Visit&& visit) {
  Vector v(n, 0);
  while (true) {
    if (!visit(static_cast<const Vector&>(v))) return false;
    std::size_t i = n;
    while (true) {
      if (i == 0) return true;
      --i;
      if (++v[i] < field.modulus()) break;
      v[i] = 0;
    }
  }
}

/// p^n saturated at UINT64_MAX.
std::uint64_t saturating_power(std::uint64_t p, std::size_t n) noexcept;

}  // namespace xalg

#endif  // XALG_LINALG_HPP

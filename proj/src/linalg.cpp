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

#include "xalg/linalg.hpp"

#include <limits>

#include "xalg/error.hpp"

namespace xalg {

namespace {

bool is_prime(std::uint32_t n) {
  if (n < 2) return false;
  for (std::uint32_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

void require_same_length(const Vector& a, const Vector& b) {
  if (a.size() != b.size())
    throw Error(ErrorKind::DimensionMismatch, "vector lengths differ", {a.size(), b.size()});
}

}  // namespace

PrimeField::PrimeField(std::uint32_t modulus) : p_(modulus) {
  if (modulus > kMaxModulus || !is_prime(modulus))
    throw Error(ErrorKind::InvalidModulus,
                "modulus must be a prime between 2 and 97, got " + std::to_string(modulus));
}

Scalar PrimeField::reduce(std::int64_t value) const noexcept {
  auto r = value % static_cast<std::int64_t>(p_);
  if (r < 0) r += p_;
  return static_cast<Scalar>(r);
}

Scalar PrimeField::inv(Scalar a) const {
  if (a % p_ == 0) throw Error(ErrorKind::DimensionMismatch, "inverse of zero in F_p");
  // Fermat: a^(p-2)
  Scalar result = 1, base = a % p_;
  for (std::uint32_t e = p_ - 2; e > 0; e >>= 1) {
    if (e & 1) result = mul(result, base);
    base = mul(base, base);
  }
  return result;
}

Vector PrimeField::unit_vector(std::size_t n, std::size_t i) const {
  Vector v(n, 0);
  v.at(i) = 1;
  return v;
}

Vector PrimeField::reduce(const std::vector<std::int64_t>& values) const {
  Vector out(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) out[i] = reduce(values[i]);
  return out;
}

Vector PrimeField::add(const Vector& a, const Vector& b) const {
  require_same_length(a, b);
  Vector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = add(a[i], b[i]);
  return out;
}

Vector PrimeField::sub(const Vector& a, const Vector& b) const {
  require_same_length(a, b);
  Vector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = sub(a[i], b[i]);
  return out;
}

Vector PrimeField::scale(Scalar s, const Vector& v) const {
  Vector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = mul(s, v[i]);
  return out;
}

void PrimeField::axpy(Vector& y, Scalar a, const Vector& x) const {
  require_same_length(y, x);
  if (a == 0) return;
  for (std::size_t i = 0; i < y.size(); ++i) y[i] = (y[i] + a * x[i]) % p_;
}

bool is_zero(const Vector& v) noexcept {
  for (Scalar s : v)
    if (s != 0) return false;
  return true;
}

void Fp::check_same(const Fp& o) const {
  if (!(field_ == o.field_))
    throw Error(ErrorKind::DimensionMismatch, "mixed moduli",
                {field_.modulus(), o.field_.modulus()});
}

Fp Fp::operator+(const Fp& o) const {
  check_same(o);
  return Fp(field_, field_.add(value_, o.value_));
}

Fp Fp::operator-(const Fp& o) const {
  check_same(o);
  return Fp(field_, field_.sub(value_, o.value_));
}

Fp Fp::operator*(const Fp& o) const {
  check_same(o);
  return Fp(field_, field_.mul(value_, o.value_));
}

Fp Fp::operator/(const Fp& o) const {
  check_same(o);
  return Fp(field_, field_.mul(value_, field_.inv(o.value_)));
}

// ---------------------------------------------------------------------------
// Matrix

Matrix::Matrix(PrimeField field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols), data_(rows * cols, 0) {}

Matrix Matrix::identity(PrimeField field, std::size_t n) {
  Matrix m(field, n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, 1);
  return m;
}

Matrix Matrix::from_rows(PrimeField field, std::size_t cols,
                         const std::vector<std::vector<std::int64_t>>& rows) {
  Matrix m(field, rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols)
      throw Error(ErrorKind::DimensionMismatch, "ragged matrix row", {r, rows[r].size(), cols});
    for (std::size_t c = 0; c < cols; ++c) m.data_[r * cols + c] = field.reduce(rows[r][c]);
  }
  return m;
}

Matrix Matrix::from_row_vectors(PrimeField field, std::size_t cols, const std::vector<Vector>& rows) {
  Matrix m(field, rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols)
      throw Error(ErrorKind::DimensionMismatch, "ragged matrix row", {r, rows[r].size(), cols});
    for (std::size_t c = 0; c < cols; ++c) m.set(r, c, rows[r][c]);
  }
  return m;
}

Matrix Matrix::from_columns(PrimeField field, std::size_t rows, const std::vector<Vector>& columns) {
  Matrix m(field, rows, columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) {
    if (columns[c].size() != rows)
      throw Error(ErrorKind::DimensionMismatch, "ragged matrix column", {c, columns[c].size(), rows});
    for (std::size_t r = 0; r < rows; ++r) m.set(r, c, columns[c][r]);
  }
  return m;
}

Vector Matrix::row(std::size_t r) const {
  return Vector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

Vector Matrix::column(std::size_t c) const {
  Vector out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out[r] = data_[r * cols_ + c];
  return out;
}

std::vector<Vector> Matrix::row_list() const {
  std::vector<Vector> out;
  out.reserve(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out.push_back(row(r));
  return out;
}

Vector Matrix::apply(const Vector& x) const {
  if (x.size() != cols_)
    throw Error(ErrorKind::DimensionMismatch, "matrix-vector size", {rows_, cols_, x.size()});
  Vector out(rows_, 0);
  const auto p = field_.modulus();
  for (std::size_t r = 0; r < rows_; ++r) {
    std::uint64_t acc = 0;
    for (std::size_t c = 0; c < cols_; ++c) acc += static_cast<std::uint64_t>(data_[r * cols_ + c]) * x[c];
    out[r] = static_cast<Scalar>(acc % p);
  }
  return out;
}

Matrix Matrix::operator*(const Matrix& rhs) const {
  if (cols_ != rhs.rows_)
    throw Error(ErrorKind::DimensionMismatch, "matrix product", {rows_, cols_, rhs.rows_, rhs.cols_});
  Matrix out(field_, rows_, rhs.cols_);
  const auto p = field_.modulus();
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < rhs.cols_; ++c) {
      std::uint64_t acc = 0;
      for (std::size_t k = 0; k < cols_; ++k)
        acc += static_cast<std::uint64_t>(data_[r * cols_ + k]) * rhs.data_[k * rhs.cols_ + c];
      out.data_[r * rhs.cols_ + c] = static_cast<Scalar>(acc % p);
    }
  return out;
}

Matrix Matrix::operator+(const Matrix& rhs) const {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
    throw Error(ErrorKind::DimensionMismatch, "matrix sum", {rows_, cols_, rhs.rows_, rhs.cols_});
  Matrix out(*this);
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = field_.add(data_[i], rhs.data_[i]);
  return out;
}

Matrix Matrix::operator-(const Matrix& rhs) const {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
    throw Error(ErrorKind::DimensionMismatch, "matrix difference", {rows_, cols_, rhs.rows_, rhs.cols_});
  Matrix out(*this);
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = field_.sub(data_[i], rhs.data_[i]);
  return out;
}

Matrix Matrix::transpose() const {
  Matrix out(field_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) out.data_[c * rows_ + r] = data_[r * cols_ + c];
  return out;
}

bool Matrix::is_zero() const noexcept {
  for (Scalar s : data_)
    if (s != 0) return false;
  return true;
}

Matrix hstack(const Matrix& left, const Matrix& right) {
  if (left.rows() != right.rows())
    throw Error(ErrorKind::DimensionMismatch, "hstack row counts", {left.rows(), right.rows()});
  Matrix out(left.field(), left.rows(), left.cols() + right.cols());
  for (std::size_t r = 0; r < left.rows(); ++r) {
    for (std::size_t c = 0; c < left.cols(); ++c) out.set(r, c, left(r, c));
    for (std::size_t c = 0; c < right.cols(); ++c) out.set(r, left.cols() + c, right(r, c));
  }
  return out;
}

Matrix vstack(const Matrix& top, const Matrix& bottom) {
  if (top.cols() != bottom.cols())
    throw Error(ErrorKind::DimensionMismatch, "vstack column counts", {top.cols(), bottom.cols()});
  Matrix out(top.field(), top.rows() + bottom.rows(), top.cols());
  for (std::size_t c = 0; c < top.cols(); ++c) {
    for (std::size_t r = 0; r < top.rows(); ++r) out.set(r, c, top(r, c));
    for (std::size_t r = 0; r < bottom.rows(); ++r) out.set(top.rows() + r, c, bottom(r, c));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Elimination

Matrix rref(const Matrix& m) {
  const PrimeField& f = m.field();
  std::vector<Vector> rows = m.row_list();
  std::size_t lead = 0;
  for (std::size_t col = 0; col < m.cols() && lead < rows.size(); ++col) {
    std::size_t pivot = lead;
    while (pivot < rows.size() && rows[pivot][col] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[lead], rows[pivot]);
    rows[lead] = f.scale(f.inv(rows[lead][col]), rows[lead]);
    for (std::size_t r = 0; r < rows.size(); ++r)
      if (r != lead && rows[r][col] != 0) f.axpy(rows[r], f.neg(rows[r][col]), rows[lead]);
    ++lead;
  }
  rows.resize(lead);
  return Matrix::from_row_vectors(f, m.cols(), rows);
}

std::vector<std::size_t> pivot_columns(const Matrix& reduced) {
  std::vector<std::size_t> pivots;
  pivots.reserve(reduced.rows());
  for (std::size_t r = 0; r < reduced.rows(); ++r) {
    std::size_t c = 0;
    while (c < reduced.cols() && reduced(r, c) == 0) ++c;
    pivots.push_back(c);
  }
  return pivots;
}

std::size_t rank(const Matrix& m) { return rref(m).rows(); }

std::optional<Vector> solve(const Matrix& m, const Vector& rhs) {
  if (rhs.size() != m.rows())
    throw Error(ErrorKind::DimensionMismatch, "solve: rhs length", {m.rows(), rhs.size()});
  const Matrix reduced = rref(hstack(m, Matrix::from_columns(m.field(), m.rows(), {rhs})));
  const auto pivots = pivot_columns(reduced);
  Vector x(m.cols(), 0);
  for (std::size_t r = 0; r < reduced.rows(); ++r) {
    if (pivots[r] == m.cols()) return std::nullopt;
    x[pivots[r]] = reduced(r, m.cols());
  }
  return x;
}

// ---------------------------------------------------------------------------
// Subspace

Subspace::Subspace(Matrix reduced) : basis_(std::move(reduced)), pivots_(pivot_columns(basis_)) {}

Subspace Subspace::zero(PrimeField field, std::size_t ambient_dim) {
  return Subspace(Matrix(field, 0, ambient_dim));
}

Subspace Subspace::full(PrimeField field, std::size_t ambient_dim) {
  return Subspace(Matrix::identity(field, ambient_dim));
}

Subspace Subspace::span(PrimeField field, std::size_t ambient_dim, const std::vector<Vector>& generators) {
  return Subspace(rref(Matrix::from_row_vectors(field, ambient_dim, generators)));
}

Subspace Subspace::row_space(const Matrix& generators) { return Subspace(rref(generators)); }

Vector Subspace::reduce(const Vector& v) const {
  if (v.size() != ambient_dim())
    throw Error(ErrorKind::DimensionMismatch, "vector outside ambient space", {ambient_dim(), v.size()});
  const PrimeField& f = field();
  Vector w(v);
  for (std::size_t r = 0; r < basis_.rows(); ++r) {
    const Scalar c = w[pivots_[r]];
    if (c != 0) f.axpy(w, f.neg(c), basis_.row(r));
  }
  return w;
}

bool Subspace::contains(const Vector& v) const { return is_zero(reduce(v)); }

std::optional<Vector> Subspace::coordinates(const Vector& v) const {
  if (!contains(v)) return std::nullopt;
  Vector coords(dim());
  for (std::size_t r = 0; r < dim(); ++r) coords[r] = v[pivots_[r]];
  return coords;
}

Subspace kernel(const Matrix& m) {
  const Matrix reduced = rref(m);
  const auto pivots = pivot_columns(reduced);
  const PrimeField& f = m.field();
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<Vector> gens;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vector x(m.cols(), 0);
    x[free] = 1;
    for (std::size_t r = 0; r < reduced.rows(); ++r) x[pivots[r]] = f.neg(reduced(r, free));
    gens.push_back(std::move(x));
  }
  return Subspace::span(f, m.cols(), gens);
}

Subspace column_space(const Matrix& m) { return Subspace::row_space(m.transpose()); }

Subspace sum(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim())
    throw Error(ErrorKind::DimensionMismatch, "subspace sum", {a.ambient_dim(), b.ambient_dim()});
  return Subspace::row_space(vstack(a.basis(), b.basis()));
}

Subspace intersect(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim())
    throw Error(ErrorKind::DimensionMismatch, "subspace intersection", {a.ambient_dim(), b.ambient_dim()});
  // The standard dot product is nondegenerate on F_p^n, so V = (V^perp)^perp
  // and (A n B)^perp = A^perp + B^perp.
  const Subspace perp_sum = sum(kernel(a.basis()), kernel(b.basis()));
  return kernel(perp_sum.basis());
}

// ---------------------------------------------------------------------------
// QuotientSpace

QuotientSpace::QuotientSpace(Subspace relations) : relations_(std::move(relations)) {
  std::vector<bool> is_pivot(relations_.ambient_dim(), false);
  for (auto p : relations_.pivots()) is_pivot[p] = true;
  for (std::size_t c = 0; c < relations_.ambient_dim(); ++c)
    if (!is_pivot[c]) section_.push_back(c);
}

Vector QuotientSpace::project(const Vector& v) const {
  const Vector w = relations_.reduce(v);
  Vector coords(section_.size());
  for (std::size_t i = 0; i < section_.size(); ++i) coords[i] = w[section_[i]];
  return coords;
}

Vector QuotientSpace::lift(const Vector& coords) const {
  if (coords.size() != section_.size())
    throw Error(ErrorKind::DimensionMismatch, "quotient coordinates", {section_.size(), coords.size()});
  Vector v(ambient_dim(), 0);
  for (std::size_t i = 0; i < section_.size(); ++i) v[section_[i]] = coords[i];
  return v;
}

Matrix QuotientSpace::projection_matrix() const {
  std::vector<Vector> cols;
  cols.reserve(ambient_dim());
  for (std::size_t c = 0; c < ambient_dim(); ++c) cols.push_back(project(field().unit_vector(ambient_dim(), c)));
  return Matrix::from_columns(field(), dim(), cols);
}

Matrix QuotientSpace::lift_matrix() const {
  Matrix m(field(), ambient_dim(), dim());
  for (std::size_t i = 0; i < section_.size(); ++i) m.set(section_[i], i, 1);
  return m;
}

QuotientSpace quotient(std::size_t ambient_dim, const Subspace& relations) {
  if (relations.ambient_dim() != ambient_dim)
    throw Error(ErrorKind::DimensionMismatch, "quotient: relations ambient", {ambient_dim, relations.ambient_dim()});
  return QuotientSpace(relations);
}

std::uint64_t saturating_power(std::uint64_t p, std::size_t n) noexcept {
  std::uint64_t result = 1;
  for (std::size_t i = 0; i < n; ++i) {
    if (result > std::numeric_limits<std::uint64_t>::max() / p) return std::numeric_limits<std::uint64_t>::max();
    result *= p;
  }
  return result;
}

}  // namespace xalg

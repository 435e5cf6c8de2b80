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

#include "xalg/algebra.hpp"

#include <algorithm>
#include <sstream>

#include "xalg/error.hpp"

namespace xalg {

namespace {

std::vector<Vector> zero_products(const PrimeField& field, std::size_t dim) {
  return std::vector<Vector>(dim * dim, field.zero(dim));
}

// Index of v in the lexicographic enumeration of F_p^n.
std::size_t encode(const Vector& v, std::uint32_t p) {
  std::size_t code = 0;
  for (Scalar s : v) code = code * p + s;
  return code;
}

Vector decode(std::size_t code, std::size_t n, std::uint32_t p) {
  Vector v(n, 0);
  for (std::size_t i = n; i > 0; --i) {
    v[i - 1] = static_cast<Scalar>(code % p);
    code /= p;
  }
  return v;
}

}  // namespace

// ---------------------------------------------------------------------------
// Algebra

Vector Algebra::multiply(const Vector& x, const Vector& y) const {
  const std::size_t n = dim();
  if (x.size() != n || y.size() != n)
    throw Error(ErrorKind::DimensionMismatch, "multiply: element outside " + label(), {n, x.size(), y.size()});
  const PrimeField& f = field();
  Vector out(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (y[j] == 0) continue;
      f.axpy(out, f.mul(x[i], y[j]), product(i, j));
    }
  }
  return out;
}

Matrix Algebra::multiplication_matrix(const Vector& x) const {
  std::vector<Vector> cols;
  cols.reserve(dim());
  for (std::size_t j = 0; j < dim(); ++j) cols.push_back(multiply(x, basis_element(j)));
  return Matrix::from_columns(field(), dim(), cols);
}

bool Algebra::has_zero_multiplication() const noexcept {
  return std::all_of(data_->products.begin(), data_->products.end(), [](const Vector& v) { return is_zero(v); });
}

Algebra Algebra::relabeled(std::string label) const {
  auto data = std::make_shared<Data>(*data_);
  data->label = std::move(label);
  return Algebra(std::move(data));
}

bool Algebra::operator==(const Algebra& o) const {
  if (data_ == o.data_) return true;
  return field() == o.field() && dim() == o.dim() && data_->products == o.data_->products &&
         data_->unit == o.data_->unit;
}

Algebra validate_algebra(PrimeField field, std::size_t dim, std::vector<Vector> products,
                         std::optional<Vector> unit, std::string label) {
  if (products.size() != dim * dim)
    throw Error(ErrorKind::DimensionMismatch, "structure constant table of " + label, {products.size(), dim * dim});
  for (std::size_t k = 0; k < products.size(); ++k) {
    if (products[k].size() != dim)
      throw Error(ErrorKind::DimensionMismatch, "structure constant vector of " + label, {k / dim, k % dim});
    for (auto& s : products[k]) s %= field.modulus();
  }
  if (unit) {
    if (unit->size() != dim) throw Error(ErrorKind::DimensionMismatch, "unit of " + label, {unit->size(), dim});
    for (auto& s : *unit) s %= field.modulus();
  }
  auto at = [&](std::size_t i, std::size_t j) -> const Vector& { return products[i * dim + j]; };

  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = i + 1; j < dim; ++j)
      if (at(i, j) != at(j, i)) throw Error(ErrorKind::NotCommutative, label, {i, j});

  // (e_i e_j) e_l == e_i (e_j e_l)
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j)
      for (std::size_t l = 0; l < dim; ++l) {
        Vector left(dim, 0), right(dim, 0);
        for (std::size_t k = 0; k < dim; ++k) {
          field.axpy(left, at(i, j)[k], at(k, l));
          field.axpy(right, at(j, l)[k], at(i, k));
        }
        if (left != right) throw Error(ErrorKind::NotAssociative, label, {i, j, l});
      }

  if (unit) {
    for (std::size_t i = 0; i < dim; ++i) {
      Vector ue(dim, 0);
      for (std::size_t k = 0; k < dim; ++k) field.axpy(ue, (*unit)[k], at(k, i));
      if (ue != field.unit_vector(dim, i)) throw Error(ErrorKind::BadUnit, label, {i});
    }
  }

  auto data = std::make_shared<Algebra::Data>(
      Algebra::Data{field, dim, std::move(products), std::move(unit), std::move(label)});
  return Algebra(std::move(data));
}

std::optional<Vector> find_unit(const PrimeField& field, std::size_t dim, const std::vector<Vector>& products) {
  // sum_k u_k (e_k e_i)[t] = delta_{it}
  Matrix system(field, dim * dim, dim);
  Vector rhs(dim * dim, 0);
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t t = 0; t < dim; ++t) {
      for (std::size_t k = 0; k < dim; ++k) system.set(i * dim + t, k, products[k * dim + i][t]);
      rhs[i * dim + t] = (i == t) ? 1 : 0;
    }
  return solve(system, rhs);
}

Algebra make_algebra_detect_unit(PrimeField field, std::size_t dim, std::vector<Vector> products,
                                 std::string label) {
  auto unit = products.size() == dim * dim ? find_unit(field, dim, products) : std::nullopt;
  return validate_algebra(field, dim, std::move(products), std::move(unit), std::move(label));
}

Algebra zero_multiplication_algebra(PrimeField field, std::size_t dim, std::string label) {
  std::optional<Vector> unit;
  if (dim == 0) unit = Vector{};
  return validate_algebra(field, dim, zero_products(field, dim), std::move(unit), std::move(label));
}

Algebra zero_algebra(PrimeField field) { return zero_multiplication_algebra(field, 0, "0"); }

std::optional<bool> check_algebra_exhaustive(const Algebra& a, std::uint64_t max_order) {
  const std::uint64_t order = a.order();
  if (order > max_order) return std::nullopt;
  const auto p = a.field().modulus();
  const std::size_t n = a.dim();
  std::vector<std::size_t> table(order * order);
  for (std::size_t x = 0; x < order; ++x)
    for (std::size_t y = 0; y < order; ++y)
      table[x * order + y] = encode(a.multiply(decode(x, n, p), decode(y, n, p)), p);
  const std::size_t unit = a.unit() ? encode(*a.unit(), p) : order;  // order means no unit
  for (std::size_t x = 0; x < order; ++x) {
    if (unit < order && table[unit * order + x] != x) return false;
    for (std::size_t y = 0; y < order; ++y) {
      const std::size_t xy = table[x * order + y];
      if (xy != table[y * order + x]) return false;
      for (std::size_t z = 0; z < order; ++z)
        if (table[xy * order + z] != table[x * order + table[y * order + z]]) return false;
    }
  }
  return true;
}

// ---------------------------------------------------------------------------
// Morphisms

AlgebraMorphism make_morphism(const Algebra& source, const Algebra& target, Matrix matrix) {
  if (matrix.rows() != target.dim() || matrix.cols() != source.dim())
    throw Error(ErrorKind::DimensionMismatch, source.label() + " -> " + target.label(),
                {matrix.rows(), matrix.cols(), target.dim(), source.dim()});
  if (!(matrix.field() == source.field()) || !(source.field() == target.field()))
    throw Error(ErrorKind::DimensionMismatch, "morphism over mixed moduli");
  for (std::size_t i = 0; i < source.dim(); ++i)
    for (std::size_t j = i; j < source.dim(); ++j) {
      const Vector lhs = matrix.apply(source.product(i, j));
      const Vector rhs = target.multiply(matrix.column(i), matrix.column(j));
      if (lhs != rhs) throw Error(ErrorKind::NotMorphism, source.label() + " -> " + target.label(), {i, j});
    }
  return AlgebraMorphism(source, target, std::move(matrix));
}

AlgebraMorphism identity_morphism(const Algebra& a) {
  return make_morphism(a, a, Matrix::identity(a.field(), a.dim()));
}

AlgebraMorphism zero_morphism(const Algebra& source, const Algebra& target) {
  return make_morphism(source, target, Matrix(source.field(), target.dim(), source.dim()));
}

AlgebraMorphism compose(const AlgebraMorphism& g, const AlgebraMorphism& f) {
  if (!(f.target() == g.source()))
    throw Error(ErrorKind::DimensionMismatch, "compose: " + f.target().label() + " vs " + g.source().label());
  return make_morphism(f.source(), g.target(), g.matrix() * f.matrix());
}

AlgebraMorphism inverse(const AlgebraMorphism& f) {
  if (!f.is_bijective()) throw Error(ErrorKind::NotMorphism, "inverse of a non-bijective map");
  const std::size_t n = f.source().dim();
  std::vector<Vector> cols;
  for (std::size_t i = 0; i < n; ++i) cols.push_back(*solve(f.matrix(), f.target().basis_element(i)));
  return make_morphism(f.target(), f.source(), Matrix::from_columns(f.source().field(), n, cols));
}

// ---------------------------------------------------------------------------
// Ideals and subalgebras

Ideal make_ideal(const Algebra& parent, Subspace space) {
  if (space.ambient_dim() != parent.dim())
    throw Error(ErrorKind::DimensionMismatch, "ideal of " + parent.label(), {space.ambient_dim(), parent.dim()});
  for (std::size_t k = 0; k < space.dim(); ++k) {
    const Vector b = space.basis_vector(k);
    for (std::size_t i = 0; i < parent.dim(); ++i)
      if (!space.contains(parent.multiply(parent.basis_element(i), b)))
        throw Error(ErrorKind::NotIdeal, "in " + parent.label(), {k, i});
  }
  return Ideal(parent, std::move(space));
}

Ideal zero_ideal(const Algebra& parent) { return make_ideal(parent, Subspace::zero(parent.field(), parent.dim())); }

Ideal whole_ideal(const Algebra& parent) { return make_ideal(parent, Subspace::full(parent.field(), parent.dim())); }

Ideal ideal_closure(const Algebra& parent, const std::vector<Vector>& generators) {
  Subspace current = Subspace::span(parent.field(), parent.dim(), generators);
  while (true) {
    std::vector<Vector> gens = current.basis_vectors();
    const std::size_t before = gens.size();
    for (std::size_t k = 0; k < before; ++k)
      for (std::size_t i = 0; i < parent.dim(); ++i) gens.push_back(parent.multiply(parent.basis_element(i), gens[k]));
    Subspace next = Subspace::span(parent.field(), parent.dim(), gens);
    if (next.dim() == current.dim()) break;
    current = std::move(next);
  }
  return make_ideal(parent, std::move(current));
}

Ideal square_ideal(const Algebra& a) {
  return make_ideal(a, Subspace::span(a.field(), a.dim(), a.structure_constants()));
}

Ideal product_ideal(const Ideal& i, const Ideal& j) {
  if (!(i.parent() == j.parent())) throw Error(ErrorKind::DimensionMismatch, "product of ideals of different algebras");
  const Algebra& a = i.parent();
  std::vector<Vector> gens;
  for (const auto& x : i.space().basis_vectors())
    for (const auto& y : j.space().basis_vectors()) gens.push_back(a.multiply(x, y));
  return make_ideal(a, Subspace::span(a.field(), a.dim(), gens));
}

Subalgebra subalgebra(const Algebra& ambient, const Subspace& space, std::string label) {
  if (space.ambient_dim() != ambient.dim())
    throw Error(ErrorKind::DimensionMismatch, "subalgebra of " + ambient.label(), {space.ambient_dim(), ambient.dim()});
  const std::size_t m = space.dim();
  const auto basis = space.basis_vectors();
  std::vector<Vector> products(m * m);
  for (std::size_t k = 0; k < m; ++k)
    for (std::size_t l = 0; l < m; ++l) {
      auto coords = space.coordinates(ambient.multiply(basis[k], basis[l]));
      if (!coords) throw Error(ErrorKind::NotSubalgebra, label + " in " + ambient.label(), {k, l});
      products[k * m + l] = std::move(*coords);
    }
  Algebra alg = make_algebra_detect_unit(ambient.field(), m, std::move(products), std::move(label));
  Matrix inclusion = Matrix::from_columns(ambient.field(), ambient.dim(), basis);
  return Subalgebra{std::move(alg), space, std::move(inclusion)};
}

QuotientAlgebra quotient_algebra(const Algebra& parent, const Ideal& ideal) {
  if (!(ideal.parent() == parent))
    throw Error(ErrorKind::DimensionMismatch, "quotient: ideal of another algebra than " + parent.label());
  QuotientSpace q(ideal.space());
  const auto& section = q.section();
  const std::size_t m = q.dim();
  std::vector<Vector> products(m * m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) products[i * m + j] = q.project(parent.product(section[i], section[j]));
  // Representative independence: the ideal property makes x*y mod I depend only
  // on classes; recheck on the ideal basis against the whole basis.
  for (const auto& v : ideal.space().basis_vectors())
    for (std::size_t i = 0; i < parent.dim(); ++i)
      if (!is_zero(q.project(parent.multiply(v, parent.basis_element(i)))))
        throw Error(ErrorKind::NotIdeal, "quotient of " + parent.label(), {i});
  Algebra alg = make_algebra_detect_unit(parent.field(), m, std::move(products), parent.label() + "/I");
  AlgebraMorphism proj = make_morphism(parent, alg, q.projection_matrix());
  return QuotientAlgebra{std::move(alg), std::move(proj), std::move(q)};
}

ProductAlgebra product_algebra(const Algebra& a, const Algebra& b) {
  if (!(a.field() == b.field())) throw Error(ErrorKind::DimensionMismatch, "product over mixed moduli");
  const std::size_t n = a.dim(), m = b.dim(), d = n + m;
  const PrimeField& f = a.field();
  std::vector<Vector> products(d * d, f.zero(d));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      std::copy(a.product(i, j).begin(), a.product(i, j).end(), products[i * d + j].begin());
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      std::copy(b.product(i, j).begin(), b.product(i, j).end(),
                products[(n + i) * d + n + j].begin() + static_cast<std::ptrdiff_t>(n));
  std::optional<Vector> unit;
  if (a.unit() && b.unit()) {
    Vector u(*a.unit());
    u.insert(u.end(), b.unit()->begin(), b.unit()->end());
    unit = std::move(u);
  }
  Algebra prod = validate_algebra(f, d, std::move(products), std::move(unit), a.label() + " x " + b.label());
  Matrix p1(f, n, d), p2(f, m, d), i1(f, d, n), i2(f, d, m);
  for (std::size_t i = 0; i < n; ++i) {
    p1.set(i, i, 1);
    i1.set(i, i, 1);
  }
  for (std::size_t i = 0; i < m; ++i) {
    p2.set(i, n + i, 1);
    i2.set(n + i, i, 1);
  }
  return ProductAlgebra{prod, make_morphism(prod, a, std::move(p1)), make_morphism(prod, b, std::move(p2)),
                        make_morphism(a, prod, std::move(i1)), make_morphism(b, prod, std::move(i2))};
}

Ideal kernel_ideal(const AlgebraMorphism& f) { return make_ideal(f.source(), kernel(f.matrix())); }

Subspace image_space(const AlgebraMorphism& f) { return column_space(f.matrix()); }

Ideal annihilator(const Algebra& a) {
  const std::size_t n = a.dim();
  Matrix stacked(a.field(), n * n, n);
  for (std::size_t i = 0; i < n; ++i) {
    const Matrix l = a.multiplication_matrix(a.basis_element(i));
    for (std::size_t t = 0; t < n; ++t)
      for (std::size_t c = 0; c < n; ++c) stacked.set(i * n + t, c, l(t, c));
  }
  return make_ideal(a, kernel(stacked));
}

Ideal nilradical(const Algebra& a) {
  const std::size_t n = a.dim();
  const PrimeField& f = a.field();
  // Frobenius matrix: column i holds e_i^p.
  std::vector<Vector> cols;
  for (std::size_t i = 0; i < n; ++i) {
    Vector power = a.basis_element(i);
    for (std::uint32_t k = 1; k < f.modulus(); ++k) power = a.multiply(power, a.basis_element(i));
    cols.push_back(std::move(power));
  }
  const Matrix frobenius = Matrix::from_columns(f, n, cols);
  Matrix iterate = Matrix::identity(f, n);
  // Nilpotency index is at most n + 1.
  for (std::uint64_t reach = 1; reach <= n; reach *= f.modulus()) iterate = frobenius * iterate;
  return make_ideal(a, kernel(iterate));
}

Matrix MultiplierAlgebra::to_matrix(const Vector& coords) const {
  const std::size_t n = mu.source().dim();
  Matrix out(algebra.field(), n, n);
  for (std::size_t k = 0; k < multipliers.size(); ++k) {
    if (coords.at(k) == 0) continue;
    Matrix scaled(algebra.field(), n, n);
    for (std::size_t t = 0; t < n; ++t)
      for (std::size_t s = 0; s < n; ++s) scaled.set(t, s, algebra.field().mul(coords[k], multipliers[k](t, s)));
    out = out + scaled;
  }
  return out;
}

MultiplierAlgebra multiplier_algebra(const Algebra& r) {
  const std::size_t n = r.dim();
  const PrimeField& f = r.field();
  if (annihilator(r).dim() != 0 && square_ideal(r).dim() != n)
    throw Error(ErrorKind::HypothesisViolated, "neither Ann(" + r.label() + ") = 0 nor " + r.label() + "^2 = " +
                                                   r.label());
  auto flat = [n](std::size_t t, std::size_t s) { return t * n + s; };
  std::vector<Matrix> mult;
  mult.reserve(n);
  for (std::size_t j = 0; j < n; ++j) mult.push_back(r.multiplication_matrix(r.basis_element(j)));

  // delta(e_i e_j) - e_j delta(e_i) = 0, one equation per (i, j, row t).
  std::vector<Vector> equations;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t t = 0; t < n; ++t) {
        Vector eq(n * n, 0);
        for (std::size_t s = 0; s < n; ++s) eq[flat(t, s)] = f.add(eq[flat(t, s)], r.product(i, j)[s]);
        for (std::size_t u = 0; u < n; ++u) eq[flat(u, i)] = f.sub(eq[flat(u, i)], mult[j](t, u));
        equations.push_back(std::move(eq));
      }
  const Subspace solutions = kernel(Matrix::from_row_vectors(f, n * n, equations));
  const std::size_t d = solutions.dim();

  auto as_matrix = [&](const Vector& v) {
    Matrix m(f, n, n);
    for (std::size_t t = 0; t < n; ++t)
      for (std::size_t s = 0; s < n; ++s) m.set(t, s, v[flat(t, s)]);
    return m;
  };
  auto flatten = [&](const Matrix& m) {
    Vector v(n * n);
    for (std::size_t t = 0; t < n; ++t)
      for (std::size_t s = 0; s < n; ++s) v[flat(t, s)] = m(t, s);
    return v;
  };

  std::vector<Matrix> basis;
  for (std::size_t k = 0; k < d; ++k) basis.push_back(as_matrix(solutions.basis_vector(k)));

  std::vector<Vector> products(d * d);
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = 0; b < d; ++b) {
      const Matrix ab = basis[a] * basis[b];
      if (ab != basis[b] * basis[a]) throw Error(ErrorKind::NotCommutativeMultipliers, "M(" + r.label() + ")", {a, b});
      auto coords = solutions.coordinates(flatten(ab));
      if (!coords) throw Error(ErrorKind::NotSubalgebra, "multipliers not closed under composition", {a, b});
      products[a * d + b] = std::move(*coords);
    }
  Algebra m_r = make_algebra_detect_unit(f, d, std::move(products), "M(" + r.label() + ")");

  std::vector<Vector> mu_cols;
  for (std::size_t p = 0; p < n; ++p) mu_cols.push_back(*solutions.coordinates(flatten(mult[p])));
  AlgebraMorphism mu = make_morphism(r, m_r, Matrix::from_columns(f, d, mu_cols));
  return MultiplierAlgebra{std::move(m_r), std::move(mu), std::move(basis)};
}

// ---------------------------------------------------------------------------
// Search

MapConstraints::MapConstraints(PrimeField field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols) {}

void MapConstraints::add_equation(Vector coefficients, Scalar rhs) {
  if (coefficients.size() != rows_ * cols_)
    throw Error(ErrorKind::DimensionMismatch, "constraint length", {coefficients.size(), rows_ * cols_});
  equations_.push_back(std::move(coefficients));
  rhs_.push_back(rhs % field_.modulus());
}

void MapConstraints::add_point(const Vector& x, const Vector& y) {
  if (x.size() != cols_ || y.size() != rows_)
    throw Error(ErrorKind::DimensionMismatch, "point constraint", {x.size(), cols_, y.size(), rows_});
  for (std::size_t r = 0; r < rows_; ++r) {
    Vector eq(rows_ * cols_, 0);
    for (std::size_t c = 0; c < cols_; ++c) eq[variable(r, c)] = x[c];
    add_equation(std::move(eq), y[r]);
  }
}

void MapConstraints::add_left_product(const Matrix& g, const Matrix& h) {
  if (g.cols() != rows_ || h.rows() != g.rows() || h.cols() != cols_)
    throw Error(ErrorKind::DimensionMismatch, "left product constraint", {g.rows(), g.cols(), h.rows(), h.cols()});
  for (std::size_t a = 0; a < g.rows(); ++a)
    for (std::size_t c = 0; c < cols_; ++c) {
      Vector eq(rows_ * cols_, 0);
      for (std::size_t t = 0; t < rows_; ++t) eq[variable(t, c)] = g(a, t);
      add_equation(std::move(eq), h(a, c));
    }
}

void MapConstraints::add_right_product(const Matrix& g, const Matrix& h) {
  if (g.rows() != cols_ || h.rows() != rows_ || h.cols() != g.cols())
    throw Error(ErrorKind::DimensionMismatch, "right product constraint", {g.rows(), g.cols(), h.rows(), h.cols()});
  for (std::size_t t = 0; t < rows_; ++t)
    for (std::size_t b = 0; b < g.cols(); ++b) {
      Vector eq(rows_ * cols_, 0);
      for (std::size_t s = 0; s < cols_; ++s) eq[variable(t, s)] = g(s, b);
      add_equation(std::move(eq), h(t, b));
    }
}

void MapConstraints::add_intertwining(const Matrix& a, const Matrix& b) {
  if (a.rows() != cols_ || a.cols() != cols_ || b.rows() != rows_ || b.cols() != rows_)
    throw Error(ErrorKind::DimensionMismatch, "intertwining constraint", {a.rows(), b.rows()});
  for (std::size_t t = 0; t < rows_; ++t)
    for (std::size_t c = 0; c < cols_; ++c) {
      Vector eq(rows_ * cols_, 0);
      for (std::size_t s = 0; s < cols_; ++s) eq[variable(t, s)] = field_.add(eq[variable(t, s)], a(s, c));
      for (std::size_t u = 0; u < rows_; ++u) eq[variable(u, c)] = field_.sub(eq[variable(u, c)], b(t, u));
      add_equation(std::move(eq), 0);
    }
}

void MapConstraints::fix(const Matrix& f) {
  if (f.rows() != rows_ || f.cols() != cols_)
    throw Error(ErrorKind::DimensionMismatch, "fixed map", {f.rows(), f.cols(), rows_, cols_});
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) {
      Vector eq(rows_ * cols_, 0);
      eq[variable(r, c)] = 1;
      add_equation(std::move(eq), f(r, c));
    }
}

namespace {

// Variables are reordered so that the entries of column 0 come last; the
// search assigns from the last variable down, which completes source columns
// in order 0, 1, 2, ...
struct ReducedSystem {
  Matrix reduced;
  std::vector<long> pivot_row;  // by search index, -1 for free variables
  std::size_t free_count = 0;
  bool consistent = true;
};

ReducedSystem reduce_system(const MapConstraints& constraints) {
  const std::size_t m = constraints.rows(), n = constraints.cols(), total = m * n;
  const PrimeField& f = constraints.field();
  const auto& eqs = constraints.equations();
  Matrix system(f, eqs.size(), total + 1);
  for (std::size_t e = 0; e < eqs.size(); ++e) {
    for (std::size_t r = 0; r < m; ++r)
      for (std::size_t c = 0; c < n; ++c) system.set(e, (n - 1 - c) * m + r, eqs[e][constraints.variable(r, c)]);
    system.set(e, total, constraints.rhs()[e]);
  }
  ReducedSystem out{rref(system), std::vector<long>(total, -1)};
  const auto pivots = pivot_columns(out.reduced);
  for (std::size_t row = 0; row < pivots.size(); ++row) {
    if (pivots[row] == total) {
      out.consistent = false;
      return out;
    }
    out.pivot_row[pivots[row]] = static_cast<long>(row);
  }
  out.free_count = total - pivots.size();
  return out;
}

}  // namespace

std::uint64_t search_space_size(const MapConstraints& constraints) {
  const ReducedSystem sys = reduce_system(constraints);
  if (!sys.consistent) return 0;
  return saturating_power(constraints.field().modulus(), sys.free_count);
}

void search_multiplicative_maps(const Algebra& source, const Algebra& target, const MapConstraints& constraints,
                                const SearchOptions& options, const std::function<bool(const Matrix&)>& visit) {
  const std::size_t m = target.dim(), n = source.dim(), total = m * n;
  if (constraints.rows() != m || constraints.cols() != n)
    throw Error(ErrorKind::DimensionMismatch, "search constraints shape", {constraints.rows(), constraints.cols(), m, n});
  const PrimeField& f = source.field();
  const ReducedSystem sys = reduce_system(constraints);
  if (!sys.consistent) return;
  const std::uint64_t space = saturating_power(f.modulus(), sys.free_count);
  if (space > options.max_search) {
    std::ostringstream msg;
    msg << "morphism search " << source.label() << " -> " << target.label() << " needs " << f.modulus() << "^"
        << sys.free_count << " candidates, budget is " << options.max_search;
    throw Error(ErrorKind::SearchTooLarge, msg.str(), {sys.free_count});
  }

  auto index = [m, n](std::size_t r, std::size_t c) { return (n - 1 - c) * m + r; };

  // Pair (i, j) becomes checkable once every column it touches is assigned.
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> checks(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      std::size_t need = j;
      const Vector& c = source.product(i, j);
      for (std::size_t k = 0; k < n; ++k)
        if (c[k] != 0) need = std::max(need, k);
      checks[need].emplace_back(i, j);
    }

  Vector values(total, 0);
  auto column = [&](std::size_t s) {
    Vector v(m);
    for (std::size_t r = 0; r < m; ++r) v[r] = values[index(r, s)];
    return v;
  };
  auto column_ok = [&](std::size_t s) {
    for (auto [i, j] : checks[s]) {
      Vector image(m, 0);
      const Vector& c = source.product(i, j);
      for (std::size_t k = 0; k < n; ++k)
        if (c[k] != 0) f.axpy(image, c[k], column(k));
      if (image != target.multiply(column(i), column(j))) return false;
    }
    return true;
  };
  auto emit = [&]() {
    Matrix out(f, m, n);
    for (std::size_t r = 0; r < m; ++r)
      for (std::size_t c = 0; c < n; ++c) out.set(r, c, values[index(r, c)]);
    return visit(out);
  };

  if (total == 0) {
    emit();
    return;
  }

  // Returns false once the visitor asked to stop.
  std::function<bool(std::size_t)> step = [&](std::size_t remaining) -> bool {
    if (remaining == 0) return emit();
    const std::size_t idx = remaining - 1;
    auto advance = [&]() -> bool {
      if (idx % m == 0 && !column_ok(n - 1 - idx / m)) return true;
      return step(idx);
    };
    const long row = sys.pivot_row[idx];
    if (row >= 0) {
      Scalar v = sys.reduced(static_cast<std::size_t>(row), total);
      for (std::size_t j = idx + 1; j < total; ++j) {
        const Scalar a = sys.reduced(static_cast<std::size_t>(row), j);
        if (a != 0) v = f.sub(v, f.mul(a, values[j]));
      }
      values[idx] = v;
      return advance();
    }
    for (Scalar v = 0; v < f.modulus(); ++v) {
      values[idx] = v;
      if (!advance()) return false;
    }
    return true;
  };
  step(total);
}

std::vector<AlgebraMorphism> enumerate_morphisms(const Algebra& source, const Algebra& target,
                                                 const std::vector<std::pair<Vector, Vector>>& constraints,
                                                 const SearchOptions& options) {
  MapConstraints system(source.field(), target.dim(), source.dim());
  for (const auto& [x, y] : constraints) system.add_point(x, y);
  std::vector<AlgebraMorphism> out;
  search_multiplicative_maps(source, target, system, options, [&](const Matrix& m) {
    out.push_back(make_morphism(source, target, m));
    return true;
  });
  return out;
}

}  // namespace xalg

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

// Small algebras and brute-force helpers shared by the unit tests.

#ifndef XALG_TESTS_FIXTURES_HPP
#define XALG_TESTS_FIXTURES_HPP

#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "xalg/algebra.hpp"
#include "xalg/linalg.hpp"
#include "xalg/xmod.hpp"

namespace xalg::testing {

/// F_p[x]/(x^n) on the basis 1, x, ..., x^{n-1}.
inline Algebra truncated(std::uint32_t p, std::size_t n, std::string label = "T") {
  PrimeField f(p);
  std::vector<Vector> products(n * n, Vector(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i + j < n) products[i * n + j][i + j] = 1;
  return validate_algebra(f, n, std::move(products), f.unit_vector(n, 0), std::move(label));
}

/// (x)/(x^{n+1}): basis x, ..., x^n, no unit.
inline Algebra nil_truncated(std::uint32_t p, std::size_t n, std::string label = "N") {
  PrimeField f(p);
  std::vector<Vector> products(n * n, Vector(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i + j + 1 < n) products[i * n + j][i + j + 1] = 1;
  return validate_algebra(f, n, std::move(products), std::nullopt, std::move(label));
}

/// Ideal (x^k) of truncated(p, n).
inline Ideal power_ideal(const Algebra& t, std::size_t k) {
  return ideal_closure(t, {t.field().unit_vector(t.dim(), k)});
}

/// F_p[x]/(x^n) -> F_p[x]/(x^m), x |-> x, for m <= n.
inline AlgebraMorphism truncation(const Algebra& big, const Algebra& small) {
  Matrix m(big.field(), small.dim(), big.dim());
  for (std::size_t i = 0; i < small.dim(); ++i) m.set(i, i, 1);
  return make_morphism(big, small, m);
}

inline Vector random_vector(const PrimeField& f, std::size_t n, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::uint32_t> d(0, f.modulus() - 1);
  Vector v(n);
  for (auto& x : v) x = d(rng);
  return v;
}

inline Matrix random_matrix(const PrimeField& f, std::size_t rows, std::size_t cols, std::mt19937_64& rng) {
  Matrix m(f, rows, cols);
  std::uniform_int_distribution<std::uint32_t> d(0, f.modulus() - 1);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m.set(r, c, d(rng));
  return m;
}

/// All vectors of F_p^n, materialized.
inline std::vector<Vector> all_vectors(const PrimeField& f, std::size_t n) {
  std::vector<Vector> out;
  for_each_vector(f, n, [&](const Vector& v) {
    out.push_back(v);
    return true;
  });
  return out;
}

/// log_p of a count that must be an exact power of p.
inline std::size_t log_p(std::uint64_t count, std::uint32_t p) {
  std::size_t k = 0;
  while (count > 1) {
    count /= p;
    ++k;
  }
  return k;
}

/// Counts the elements of F_p^n satisfying pred.
inline std::uint64_t count_vectors(const PrimeField& f, std::size_t n, const std::function<bool(const Vector&)>& pred) {
  std::uint64_t c = 0;
  for_each_vector(f, n, [&](const Vector& v) {
    if (pred(v)) ++c;
    return true;
  });
  return c;
}

/// Brute-force dimension of the span of `gens`: closes the generated set
/// under addition and scalar multiples, then counts.
inline std::size_t brute_span_dim(const PrimeField& f, std::size_t n, const std::vector<Vector>& gens) {
  std::vector<Vector> reached{Vector(n, 0)};
  std::vector<bool> seen(static_cast<std::size_t>(saturating_power(f.modulus(), n)), false);
  auto code = [&](const Vector& v) {
    std::uint64_t c = 0;
    for (std::size_t i = n; i-- > 0;) c = c * f.modulus() + v[i];
    return static_cast<std::size_t>(c);
  };
  seen[0] = true;
  for (const auto& g : gens) {
    const std::size_t before = reached.size();
    for (std::size_t i = 0; i < before; ++i)
      for (std::uint32_t a = 1; a < f.modulus(); ++a) {
        Vector v = reached[i];
        f.axpy(v, a, g);
        if (!seen[code(v)]) {
          seen[code(v)] = true;
          reached.push_back(v);
        }
      }
  }
  return log_p(reached.size(), f.modulus());
}

/// Every linear map F_p^cols -> F_p^rows, as matrices.
inline std::vector<Matrix> all_matrices(const PrimeField& f, std::size_t rows, std::size_t cols) {
  std::vector<Matrix> out;
  for_each_vector(f, rows * cols, [&](const Vector& v) {
    Matrix m(f, rows, cols);
    for (std::size_t k = 0; k < v.size(); ++k) m.set(k / cols, k % cols, v[k]);
    out.push_back(m);
    return true;
  });
  return out;
}

/// Brute-force count of crossed module morphisms with base map `phi`: every
/// matrix is tried against the defining laws on basis elements.
inline std::size_t brute_xmod_morphisms(const CrossedModule& s, const CrossedModule& t, const Matrix& phi) {
  const PrimeField& f = s.top().field();
  std::size_t count = 0;
  for (const Matrix& m : all_matrices(f, t.top().dim(), s.top().dim())) {
    bool ok = true;
    for (std::size_t p = 0; ok && p < s.top().dim(); ++p) {
      const Vector ep = s.top().basis_element(p);
      ok = t.boundary().apply(m.apply(ep)) == phi.apply(s.boundary().apply(ep));
      for (std::size_t q = 0; ok && q < s.top().dim(); ++q)
        ok = m.apply(s.top().product(p, q)) == t.top().multiply(m.column(p), m.column(q));
      for (std::size_t i = 0; ok && i < s.base().dim(); ++i)
        ok = m.apply(s.action().act_basis(i, p)) == t.action().act(phi.column(i), m.column(p));
    }
    if (ok) ++count;
  }
  return count;
}

}  // namespace xalg::testing

#endif  // XALG_TESTS_FIXTURES_HPP

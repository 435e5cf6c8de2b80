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

#include "doctest.h"
#include "fixtures.hpp"
#include "xalg/algebra.hpp"
#include "xalg/error.hpp"

using namespace xalg;
using namespace xalg::testing;

namespace {

ErrorKind kind_of(const std::function<void()>& f, std::vector<std::size_t>* witness = nullptr) {
  try {
    f();
  } catch (const Error& e) {
    if (witness) *witness = e.witness();
    return e.kind();
  }
  FAIL("no error thrown");
  return ErrorKind::ValidationError;
}

/// Multiplies two polynomials mod x^n with coefficients mod p, the hand oracle
/// for truncated algebras.
Vector poly_mul(const Vector& a, const Vector& b, std::uint32_t p) {
  Vector c(a.size(), 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; i + j < a.size(); ++j) c[i + j] = (c[i + j] + a[i] * b[j]) % p;
  return c;
}

bool is_multiplicative(const Algebra& s, const Algebra& t, const Matrix& m) {
  for (std::size_t i = 0; i < s.dim(); ++i)
    for (std::size_t j = 0; j < s.dim(); ++j)
      if (m.apply(s.product(i, j)) != t.multiply(m.column(i), m.column(j))) return false;
  return true;
}

}  // namespace

TEST_CASE("validation accepts F_2 and truncated polynomial algebras") {
  PrimeField f(2);
  const Algebra f2 = validate_algebra(f, 1, {{1}}, Vector{1}, "F2");
  CHECK(f2.is_unital());
  for (std::uint32_t p : {2u, 3u, 5u})
    for (std::size_t n = 1; n <= 4; ++n) {
      const Algebra t = truncated(p, n);
      CHECK(check_algebra_exhaustive(t, 1u << 12) != std::optional<bool>(false));
      std::mt19937_64 rng(p * 10 + n);
      for (int k = 0; k < 10; ++k) {
        const Vector a = random_vector(t.field(), n, rng), b = random_vector(t.field(), n, rng);
        CHECK(t.multiply(a, b) == poly_mul(a, b, p));
      }
    }
}

TEST_CASE("validation names the witnessing basis indices") {
  PrimeField f(2);
  std::vector<Vector> pr(9, Vector(3, 0));
  pr[1 * 3 + 2] = {1, 0, 0};  // e_1 e_2 = e_0 but e_2 e_1 = 0
  std::vector<std::size_t> w;
  CHECK(kind_of([&] { validate_algebra(f, 3, pr, std::nullopt, "bad"); }, &w) == ErrorKind::NotCommutative);
  CHECK(w == std::vector<std::size_t>{1, 2});

  // Commutative but not associative: e0 e0 = e1, e1 e0 = e0 e1 = e1.
  std::vector<Vector> na(4, Vector(2, 0));
  na[0] = {0, 1};
  na[1] = na[2] = {0, 1};
  CHECK(kind_of([&] { validate_algebra(f, 2, na, std::nullopt, "na"); }) == ErrorKind::NotAssociative);

  const Algebra t = truncated(2, 3);
  CHECK(kind_of([&] { validate_algebra(f, 3, t.structure_constants(), Vector{0, 1, 0}, "T3"); }) ==
        ErrorKind::BadUnit);
  CHECK(kind_of([&] { validate_algebra(f, 2, {{0, 0}}, std::nullopt, "short"); }) == ErrorKind::DimensionMismatch);
}

TEST_CASE("unit detection") {
  for (std::uint32_t p : {2u, 3u}) {
    const Algebra t = truncated(p, 3);
    const auto u = find_unit(t.field(), 3, t.structure_constants());
    REQUIRE(u.has_value());
    CHECK(*u == Vector{1, 0, 0});
    CHECK_FALSE(find_unit(t.field(), 2, nil_truncated(p, 2).structure_constants()).has_value());
  }
}

TEST_CASE("ideal closure") {
  const Algebra t3 = truncated(2, 3);
  const Ideal x = ideal_closure(t3, {{0, 1, 0}});
  CHECK(x.space() == Subspace::span(t3.field(), 3, {{0, 1, 0}, {0, 0, 1}}));
  CHECK(ideal_closure(t3, {}).dim() == 0);
  CHECK(ideal_closure(t3, {{1, 0, 0}}).dim() == 3);
  CHECK(kind_of([&] { make_ideal(t3, Subspace::span(t3.field(), 3, {{0, 1, 0}})); }) == ErrorKind::NotIdeal);
}

TEST_CASE("ideal closure is minimal") {
  std::mt19937_64 rng(5);
  for (std::uint32_t p : {2u, 3u})
    for (std::size_t n = 2; n <= 5; ++n) {
      const Algebra t = truncated(p, n);
      for (int trial = 0; trial < 5; ++trial) {
        const std::vector<Vector> gens{random_vector(t.field(), n, rng)};
        const Ideal i = ideal_closure(t, gens);
        for (const auto& g : gens) CHECK(i.contains(g));
        const auto rows = i.space().basis_vectors();
        for (std::size_t drop = 0; drop < rows.size(); ++drop) {
          std::vector<Vector> rest;
          for (std::size_t k = 0; k < rows.size(); ++k)
            if (k != drop) rest.push_back(rows[k]);
          const Subspace smaller = Subspace::span(t.field(), n, rest);
          bool closed = true;
          try {
            make_ideal(t, smaller);
          } catch (const Error&) {
            closed = false;
          }
          CHECK((!closed || !smaller.contains(gens[0])));
        }
      }
    }
}

TEST_CASE("quotients and kernels round-trip") {
  const Algebra t3 = truncated(2, 3);
  const QuotientAlgebra by_x = quotient_algebra(t3, power_ideal(t3, 1));
  CHECK(by_x.algebra.dim() == 1);
  CHECK(by_x.algebra.is_unital());
  CHECK(by_x.projection.apply({0, 1, 0}) == Vector{0});
  const QuotientAlgebra by_x2 = quotient_algebra(t3, power_ideal(t3, 2));
  CHECK(by_x2.algebra.dim() == 2);
  CHECK(by_x2.algebra == truncated(2, 2));
  const QuotientAlgebra by_0 = quotient_algebra(t3, zero_ideal(t3));
  CHECK(by_0.projection.matrix() == Matrix::identity(t3.field(), 3));

  for (std::uint32_t p : {2u, 3u})
    for (std::size_t n = 1; n <= 5; ++n) {
      const Algebra t = truncated(p, n);
      for (std::size_t k = 0; k <= n; ++k) {
        const Ideal i = k < n ? power_ideal(t, k) : zero_ideal(t);
        const QuotientAlgebra q = quotient_algebra(t, i);
        CHECK(kernel_ideal(q.projection) == i);
        CHECK(q.projection.is_surjective());
      }
    }
}

TEST_CASE("products of algebras") {
  PrimeField f(2);
  const Algebra f2 = validate_algebra(f, 1, {{1}}, Vector{1}, "F2");
  const ProductAlgebra ff = product_algebra(f2, f2);
  CHECK(ff.algebra.dim() == 2);
  CHECK(is_zero(ff.algebra.multiply({1, 0}, {0, 1})));
  const ProductAlgebra tf = product_algebra(truncated(2, 3), f2);
  REQUIRE(tf.algebra.unit().has_value());
  CHECK(*tf.algebra.unit() == Vector{1, 0, 0, 1});
  CHECK(product_algebra(f2, zero_algebra(f)).algebra == f2);
  CHECK_FALSE(product_algebra(f2, nil_truncated(2, 2)).algebra.is_unital());
}

TEST_CASE("kernel and image of basic morphisms") {
  const Algebra t3 = truncated(2, 3), f2 = truncated(2, 1);
  const AlgebraMorphism proj = truncation(t3, f2);
  CHECK(kernel_ideal(proj) == power_ideal(t3, 1));
  CHECK(kernel_ideal(identity_morphism(t3)).dim() == 0);
  CHECK(image_space(identity_morphism(t3)).dim() == 3);
  CHECK(kernel_ideal(zero_morphism(t3, f2)).dim() == 3);
  CHECK(image_space(zero_morphism(t3, f2)).dim() == 0);
  CHECK(kind_of([&] { make_morphism(t3, t3, Matrix::from_rows(t3.field(), 3, {{0, 0, 0}, {1, 0, 0}, {0, 1, 0}})); }) ==
        ErrorKind::NotMorphism);
}

TEST_CASE("annihilators and nilradicals") {
  const Algebra t3 = truncated(2, 3);
  const Algebra n = nil_truncated(2, 2);
  CHECK(annihilator(t3).dim() == 0);
  CHECK(annihilator(n).space() == Subspace::span(n.field(), 2, {{0, 1}}));
  CHECK(annihilator(zero_multiplication_algebra(PrimeField(3), 3, "Z")).dim() == 3);
  for (std::uint32_t p : {2u, 3u, 5u})
    for (std::size_t k = 1; k <= 5; ++k) {
      const Algebra t = truncated(p, k);
      CHECK(nilradical(t) == (k > 1 ? power_ideal(t, 1) : zero_ideal(t)));
    }
}

TEST_CASE("multiplier algebras") {
  PrimeField f(2);
  const Algebra f2 = validate_algebra(f, 1, {{1}}, Vector{1}, "F2");
  const MultiplierAlgebra mf = multiplier_algebra(f2);
  CHECK(mf.algebra.dim() == 1);
  CHECK(mf.mu.is_bijective());

  for (std::uint32_t p : {2u, 3u})
    for (std::size_t n = 1; n <= 4; ++n) {
      const Algebra t = truncated(p, n);
      const MultiplierAlgebra m = multiplier_algebra(t);
      CHECK(m.algebra.dim() == n);
      CHECK(m.mu.is_bijective());
      const AlgebraMorphism back = inverse(m.mu);
      CHECK(compose(back, m.mu) == identity_morphism(t));
      if (saturating_power(p, n * n) > (std::uint64_t{1} << 24)) continue;
      bool bijective_found = false;
      for (const auto& g : enumerate_morphisms(t, m.algebra)) bijective_found = bijective_found || g.is_bijective();
      CHECK(bijective_found);
    }
  CHECK(kind_of([&] { multiplier_algebra(nil_truncated(2, 2)); }) == ErrorKind::HypothesisViolated);
}

TEST_CASE("morphism enumeration agrees with brute force") {
  PrimeField f(2);
  const Algebra f2 = truncated(2, 1);
  const auto ff = enumerate_morphisms(f2, f2);
  REQUIRE(ff.size() == 2);
  CHECK(ff[0].matrix().is_zero());
  CHECK(ff[1].matrix() == Matrix::identity(f, 1));

  for (std::uint32_t p : {2u, 3u}) {
    const Algebra a = truncated(p, 2), b = truncated(p, 3);
    for (const auto& [s, t] : {std::pair{a, b}, std::pair{b, a}, std::pair{b, b}}) {
      std::uint64_t brute = 0;
      for_each_vector(s.field(), s.dim() * t.dim(), [&](const Vector& v) {
        Matrix m(s.field(), t.dim(), s.dim());
        for (std::size_t k = 0; k < v.size(); ++k) m.set(k / s.dim(), k % s.dim(), v[k]);
        if (is_multiplicative(s, t, m)) ++brute;
        return true;
      });
      CHECK(enumerate_morphisms(s, t).size() == brute);
    }
  }

  const Algebra t3 = truncated(2, 3);
  const auto pinned = enumerate_morphisms(t3, t3, {{{1, 0, 0}, {1, 0, 0}}, {{0, 1, 0}, {0, 1, 0}}});
  REQUIRE(pinned.size() == 1);
  CHECK(pinned[0] == identity_morphism(t3));
}

TEST_CASE("search budget") {
  const Algebra z = zero_multiplication_algebra(PrimeField(2), 6, "Z6");
  CHECK(kind_of([&] { enumerate_morphisms(z, z); }) == ErrorKind::SearchTooLarge);
  const Algebra t3 = truncated(2, 3);
  CHECK(kind_of([&] { enumerate_morphisms(t3, t3, {}, SearchOptions{4}); }) == ErrorKind::SearchTooLarge);
  CHECK(search_space_size(MapConstraints(PrimeField(2), 6, 6)) == std::uint64_t{1} << 36);
}

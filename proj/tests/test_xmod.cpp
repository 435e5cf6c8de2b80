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
#include "xalg/error.hpp"
#include "xalg/xmod.hpp"

using namespace xalg;
using namespace xalg::testing;

namespace {

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no error thrown");
  return ErrorKind::ValidationError;
}

/// R acting on a 1-dimensional module through the augmentation x |-> 0.
std::vector<Vector> residue_table(const Algebra& r) {
  std::vector<Vector> t(r.dim(), Vector{0});
  t[0] = {1};
  return t;
}

std::vector<CrossedModule> small_xmods(std::uint32_t p) {
  const Algebra t3 = truncated(p, 3), t2 = truncated(p, 2);
  return {
      inclusion_xmod(t3, power_ideal(t3, 1), "(x)"),
      inclusion_xmod(t3, power_ideal(t3, 2), "(x^2)"),
      inclusion_xmod(t2, power_ideal(t2, 1), "(y)"),
      identity_xmod(t3),
      identity_xmod(t2),
      zero_xmod(t3),
      zero_module_xmod(t3, 1, residue_table(t3)),
      zero_module_xmod(t2, 1, residue_table(t2)),
      multiplication_xmod(t2),
  };
}

}  // namespace

TEST_CASE("canonical constructors validate") {
  for (std::uint32_t p : {2u, 3u})
    for (const auto& xm : small_xmods(p)) {
      CAPTURE(xm.label());
      const ExhaustiveCheck ex = check_xmod_exhaustive(xm);
      CHECK(ex.passed);
      CHECK(validate_xmod(xm.top(), xm.base(), xm.boundary(), xm.action(), "again").label() == "again");
    }
}

TEST_CASE("inclusion crossed modules") {
  const Algebra t3 = truncated(2, 3);
  const CrossedModule ix = inclusion_xmod(t3, power_ideal(t3, 1));
  CHECK(ix.top().dim() == 2);
  CHECK(boundary_image_is_ideal(ix) == power_ideal(t3, 1));
  CHECK(inclusion_xmod(t3, zero_ideal(t3)).top().dim() == 0);
  const CrossedModule whole = inclusion_xmod(t3, whole_ideal(t3));
  CHECK(whole.boundary().is_bijective());
}

TEST_CASE("Peiffer and equivariance failures carry witnesses") {
  const Algebra t3 = truncated(2, 3);
  // Identity boundary with the zero action: d(c).c' = 0 but c c' != 0.
  const AlgebraAction zero_action = make_action(t3, t3, std::vector<Vector>(9, Vector(3, 0)));
  CHECK(kind_of([&] { validate_xmod(t3, t3, identity_morphism(t3), zero_action, "bad"); }) ==
        ErrorKind::NotEquivariant);
  // Zero boundary with the multiplication action: equivariant but not Peiffer.
  CHECK(kind_of([&] {
          validate_xmod(t3, t3, zero_morphism(t3, t3), multiplication_action(t3), "bad");
        }) == ErrorKind::PeifferFails);
  // Broken module law.
  std::vector<Vector> broken(3, Vector{1});
  CHECK(kind_of([&] { zero_module_xmod(t3, 1, broken); }) == ErrorKind::BadAction);
}

TEST_CASE("zero-boundary modules") {
  const Algebra t3 = truncated(2, 3);
  const Algebra f2 = truncated(2, 1);
  const CrossedModule m = zero_module_xmod(t3, 1, residue_table(t3));
  CHECK(m.top().has_zero_multiplication());
  CHECK(boundary_image_is_ideal(m).dim() == 0);
  const KernelModule k = kernel_module(m);
  CHECK(k.kernel.dim() == 1);
  CHECK(k.base_quotient.algebra.dim() == 3);

  // I/I^2 for I = (x) with the induced T3/(x) action.
  const CrossedModule ii = zero_module_xmod(f2, 1, {{1}});
  CHECK(check_xmod_exhaustive(ii).passed);
}

TEST_CASE("multiplication crossed modules") {
  const Algebra f2 = truncated(2, 1);
  const CrossedModule mf = multiplication_xmod(f2);
  CHECK(mf.base().dim() == 1);
  CHECK(mf.boundary().is_bijective());
  const CrossedModule mt = multiplication_xmod(truncated(2, 3));
  CHECK(mt.base().dim() == 3);
  CHECK(mt.boundary().is_bijective());
  CHECK(boundary_image_is_ideal(mt).dim() == 3);
  CHECK(kind_of([&] { multiplication_xmod(nil_truncated(2, 2)); }) == ErrorKind::HypothesisViolated);
}

TEST_CASE("kernel module of a boundary into a quotient") {
  for (std::uint32_t p : {2u, 3u}) {
    // (x) = span{x, x^2} mapped onto T3/(x^2) = span{1, x}, with T3/(x^2)
    // acting through representatives; x^2 (x) = 0 makes this well defined.
    const Algebra n = nil_truncated(p, 2), t2 = truncated(p, 2);
    const AlgebraMorphism d = make_morphism(n, t2, Matrix::from_rows(n.field(), 2, {{0, 0}, {1, 0}}));
    const AlgebraAction act = make_action(t2, n, {{1, 0}, {0, 1}, {0, 1}, {0, 0}});
    const CrossedModule xm = validate_xmod(n, t2, d, act, "(x) -> T3/(x^2)");
    CHECK(check_xmod_exhaustive(xm).passed);
    const KernelModule k = kernel_module(xm);
    CHECK(k.kernel.space() == Subspace::span(n.field(), 2, {{0, 1}}));
    CHECK(k.kernel_algebra.algebra.has_zero_multiplication());
    CHECK(boundary_image_is_ideal(xm).dim() == 1);
  }
}

TEST_CASE("crossed module morphisms agree with brute force") {
  for (std::uint32_t p : {2u, 3u}) {
    const auto xs = small_xmods(p);
    for (const auto& a : xs)
      for (const auto& b : xs) {
        if (!(a.base() == b.base())) continue;
        if (a.top().dim() * b.top().dim() > 6) continue;
        CAPTURE(a.label());
        CAPTURE(b.label());
        const auto found = enumerate_xmod_morphisms(a, b, identity_morphism(a.base()));
        CHECK(found.size() == brute_xmod_morphisms(a, b, Matrix::identity(a.base().field(), a.base().dim())));
      }
  }
  const Algebra t3 = truncated(2, 3);
  const CrossedModule x = inclusion_xmod(t3, power_ideal(t3, 1)), x2 = inclusion_xmod(t3, power_ideal(t3, 2));
  CHECK(enumerate_xmod_morphisms(x, x2, identity_morphism(t3)).empty());
  CHECK(enumerate_xmod_morphisms(x2, x, identity_morphism(t3)).size() == 1);
  const CrossedModule z = zero_xmod(zero_algebra(PrimeField(2)));
  CHECK(enumerate_xmod_morphisms(z, z).size() == 1);
  bool has_identity = false;
  const CrossedModule id2 = identity_xmod(truncated(2, 2));
  for (const auto& m : enumerate_xmod_morphisms(id2, id2)) has_identity = has_identity || m.is_isomorphism();
  CHECK(has_identity);
}

TEST_CASE("morphisms compose") {
  for (std::uint32_t p : {2u, 3u}) {
    const auto xs = small_xmods(p);
    for (const auto& a : xs)
      for (const auto& b : xs)
        for (const auto& c : xs) {
          if (!(a.base() == b.base()) || !(b.base() == c.base())) continue;
          if (a.top().dim() + b.top().dim() + c.top().dim() > 6) continue;
          const auto id = identity_morphism(a.base());
          for (const auto& f : enumerate_xmod_morphisms(a, b, id))
            for (const auto& g : enumerate_xmod_morphisms(b, c, id)) {
              const XModMorphism h = compose(g, f);
              CHECK(make_xmod_morphism(a, c, h.top_map(), h.base_map()).top_map() == h.top_map());
            }
        }
  }
}

TEST_CASE("a non-morphism pair is rejected") {
  const Algebra t3 = truncated(2, 3);
  const CrossedModule x = inclusion_xmod(t3, power_ideal(t3, 1));
  CHECK(kind_of([&] { make_xmod_morphism(x, x, zero_morphism(x.top(), x.top()), identity_morphism(t3)); }) ==
        ErrorKind::NotXModMorphism);
}

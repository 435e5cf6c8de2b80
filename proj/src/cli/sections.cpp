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

#include "sections.hpp"

#include "xalg/error.hpp"

namespace xalg::cli {
namespace {

constexpr std::uint64_t kExhaustiveLimit = 4096;

std::string count_text(std::size_t n) { return "count " + std::to_string(n); }

/// Runs `body` and records a failed check carrying the error if it throws.
template <class Body>
void attempt(Section& s, const std::string& name, Body&& body) {
  try {
    body();
    s.check(name, true);
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::SearchTooLarge || e.kind() == ErrorKind::BudgetExceeded) throw;
    s.check(name, false, e.what(), e.witness());
  }
}

bool small_enough(std::uint64_t a, std::uint64_t b) {
  return a != UINT64_MAX && b != UINT64_MAX && a <= kExhaustiveLimit && a * b <= kExhaustiveLimit;
}

}  // namespace

void iso_check(Section& s, const std::string& name, const CrossedModule& a, const CrossedModule& b,
               const SearchOptions& options) {
  auto iso = iso_search(a, b, options);
  if (iso)
    s.check(name, true, "witness " + to_json(iso->top_map().matrix()).dump());
  else
    s.check(name, false,
            a.top().dim() != b.top().dim()
                ? "dimensions differ: " + std::to_string(a.top().dim()) + " vs " + std::to_string(b.top().dim())
                : "no isomorphism over the identity");
}

void verify_section(Section& s, const CrossedModule& xm) {
  s.object("xmod", summarize(xm));
  attempt(s, "Peiffer and equivariance on basis pairs",
          [&] { validate_xmod(xm.top(), xm.base(), xm.boundary(), xm.action(), xm.label()); });
  const ExhaustiveCheck ex = check_xmod_exhaustive(xm, kExhaustiveLimit);
  if (ex.performed)
    s.check("Peiffer and equivariance on all element pairs", ex.passed, std::to_string(ex.pairs_checked) + " pairs");
  else
    s.object("exhaustive", "skipped: |C| |R| > 4096");

  attempt(s, "d(C) is an ideal of R", [&] { boundary_image_is_ideal(xm); });
  attempt(s, "ker d is an R-submodule on which d(C) acts trivially", [&] { kernel_module(xm); });

  const Algebra& c = xm.top();
  const Algebra& r = xm.base();
  const PrimeField& f = c.field();
  if (small_enough(c.order(), r.order())) {
    const Subspace image = image_space(xm.boundary());
    bool ideal = true;
    for_each_vector(f, r.dim(), [&](const Vector& rv) {
      for_each_vector(f, c.dim(), [&](const Vector& cv) {
        ideal = image.contains(r.multiply(rv, xm.boundary().apply(cv)));
        return ideal;
      });
      return ideal;
    });
    s.check("d(C) is an ideal of R (all elements)", ideal);
    const Subspace ker = kernel(xm.boundary().matrix());
    bool trivial = true;
    for_each_vector(f, c.dim(), [&](const Vector& cv) {
      const Vector dc = xm.boundary().apply(cv);
      for_each_vector(f, ker.dim(), [&](const Vector& coords) {
        Vector k(c.dim(), 0);
        for (std::size_t i = 0; i < coords.size(); ++i) f.axpy(k, coords[i], ker.basis_vector(i));
        trivial = is_zero(xm.action().act(dc, k));
        return trivial;
      });
      return trivial;
    });
    s.check("d(C) acts trivially on ker d (all elements)", trivial);
  }
}

PullbackResult pullback_section(Section& s, const CrossedModule& xm, const AlgebraMorphism& phi,
                                const SearchOptions& options) {
  PullbackResult res = pullback(xm, phi);
  s.object("pullback", summarize(res.xm));
  s.object("embedding_into_C_x_S", to_json(res.witness));
  attempt(s, "pullback is a crossed S-module",
          [&] { validate_xmod(res.xm.top(), res.xm.base(), res.xm.boundary(), res.xm.action(), res.xm.label()); });
  attempt(s, "(phi', phi) is a morphism of crossed modules",
          [&] { make_xmod_morphism(res.xm, xm, res.phi_prime, phi); });

  const MediatorReport u = pullback_universal_check(res, res.square, options);
  s.check("the pullback square has a unique mediator to itself", u.exists && u.count == 1, count_text(u.count));

  if (xm.top().dim() == 0) {
    iso_check(s, "isomorphic to (Ker phi -> S)", res.xm, kernel_closed_form(phi), options);
  } else if (xm.boundary().is_injective()) {
    iso_check(s, "isomorphic to (phi^-1(d(C)) -> S)", res.xm,
              preimage_closed_form(boundary_image_is_ideal(xm), phi), options);
  }
  if (xm.top().dim() > 0 && xm.boundary().matrix().is_zero())
    iso_check(s, "isomorphic to (M x Ker phi -> S)", res.xm, zero_module_closed_form(xm, phi), options);
  return res;
}

InducedResult induce_section(Section& s, const CrossedModule& xm, const AlgebraMorphism& phi,
                             const SearchOptions& options) {
  InducedResult res = induce_tensor(xm, phi);
  s.object("induced", summarize(res.xm));
  s.object("ambient_dim", res.relation_span.ambient_dim());
  s.object("relation_dim", res.relation_span.dim());
  const RelationCheck rel = check_induced_relations(res);
  s.check("balancing relation (s.d) (x) r = d (x) phi(s) r", rel.balancing);
  s.check("product relation (d1 (x) r1)(d2 (x) r2) = d2 (x) r1 phi(d d1) r2", rel.product_relation);
  s.check("Peiffer identity on basis pairs", rel.peiffer);
  attempt(s, "(phi', phi) is a morphism of crossed modules",
          [&] { make_xmod_morphism(xm, res.xm, res.phi_prime, phi); });
  const MediatorReport u = induced_universal_check(res, res.square, options);
  s.check("the induced square has a unique mediator to itself", u.exists && u.count == 1, count_text(u.count));
  if (xm.boundary().matrix().is_zero()) s.check("zero boundary stays zero", res.xm.boundary().matrix().is_zero());
  return res;
}

EpiResult epi_section(Section& s, const CrossedModule& xm, const AlgebraMorphism& phi, const SearchOptions& options) {
  EpiResult epi = induce_epi(xm, phi);
  s.object("KD_dim", epi.kd.dim());
  s.object("D_mod_KD", summarize(epi.xm));
  const InducedResult tensor = induce_tensor(xm, phi);
  s.object("tensor_dim", tensor.xm.top().dim());
  iso_check(s, "D/KD is isomorphic to the tensor construction", epi.xm, tensor.xm, options);
  return epi;
}

IdealInclusionResult ideal_section(Section& s, const Algebra& r, const Ideal& big, const Ideal& small,
                                   const std::optional<Ideal>& q_preimage, const SearchOptions& options) {
  IdealInclusionResult res = induce_ideal_inclusion(r, big, small, q_preimage, options);
  Json dims = Json::object();
  dims["D"] = small.dim();
  dims["S"] = big.dim();
  dims["R/S"] = res.r_mod_s.algebra.dim();
  dims["Q"] = res.q.dim();
  dims["D/D^2"] = res.d_mod_d2_dim;
  dims["T"] = res.comparison.t_dim;
  dims["tensor"] = res.comparison.tensor_dim;
  s.object("Q", res.q_choice);
  s.object("dims", dims);
  if (res.t) s.object("T", summarize(*res.t));
  for (const auto& c : res.checks) s.check(c.name, c.passed, c.detail);
  const auto& cmp = res.comparison;
  if (cmp.witness)
    s.object("comparison_witness", to_json(cmp.witness->top_map().matrix()));
  else
    s.object("comparison_obstruction", cmp.obstruction);
  s.check("T is isomorphic to the induced crossed module (tensor construction)", cmp.isomorphic,
          cmp.isomorphic ? "witness found" : cmp.obstruction);
  return res;
}

AdjunctionReport adjunction_section(Section& s, const AlgebraMorphism& phi, const CrossedModule& d,
                                    const CrossedModule& c, const SearchOptions& options) {
  const AdjunctionReport rep = adjunction_check(phi, d, c, options);
  s.object("hom_induced_to_C", rep.induced_side);
  s.object("hom_D_to_pullback", rep.pullback_side);
  s.check("|Hom(phi_* D, C)| = |Hom(D, phi^* C)|", rep.induced_side == rep.pullback_side,
          std::to_string(rep.induced_side) + " vs " + std::to_string(rep.pullback_side));
  s.check("transposition g |-> (g phi', d) is a bijection", rep.transposition_bijective);
  s.check("inverse transposition round-trips", rep.inverse_round_trip);
  return rep;
}

FreeXModPresentation free_section(Section& s, const Algebra& r, const std::vector<Vector>& f,
                                  const std::vector<std::string>& names, const SearchOptions& options) {
  FreeXModPresentation pres = free_xmod(r, f, names);
  s.object("generators", pres.generators);
  s.object("rank", f.size());
  s.object("dim_R^n", f.size() * r.dim());
  s.object("dim_im_d", pres.quotient.relations().dim());
  s.object("free", summarize(pres.xm));
  s.check("dim C = dim R^n - dim im d",
          pres.xm.top().dim() + pres.quotient.relations().dim() == f.size() * r.dim());
  std::vector<Vector> classes;
  for (std::size_t i = 0; i < f.size(); ++i) classes.push_back(pres.generator_class(i));
  const MediatorReport u = free_universal_check(pres, pres.xm, classes, options);
  s.check("y_i |-> [e_i] into itself has a unique mediator", u.exists && u.count == 1, count_text(u.count));
  return pres;
}

void free_target_section(Section& s, const FreeXModPresentation& pres, const CrossedModule& target,
                         const std::optional<std::vector<Vector>>& w, const SearchOptions& options) {
  s.object("target", summarize(target));
  if (w) {
    const MediatorReport u = free_universal_check(pres, target, *w, options);
    s.check("unique mediator for the given w", u.exists && u.count == 1, count_text(u.count));
    return;
  }
  const PrimeField& field = pres.base.field();
  const Subspace ker = kernel(target.boundary().matrix());
  const std::size_t n = pres.f.size();
  std::vector<Vector> particular;
  for (std::size_t i = 0; i < n; ++i) {
    auto p = solve(target.boundary().matrix(), pres.f[i]);
    if (!p) {
      s.object("admissible_w", 0);
      s.check("every admissible w has a unique mediator", true, "no admissible w: f(" + pres.generators[i] +
                                                                    ") is not a boundary");
      return;
    }
    particular.push_back(std::move(*p));
  }
  const std::uint64_t total = saturating_power(field.modulus(), ker.dim() * n);
  if (total > options.max_search)
    throw Error(ErrorKind::SearchTooLarge, "too many admissible w", {static_cast<std::size_t>(ker.dim() * n)});
  std::size_t maps = 0, good = 0;
  for_each_vector(field, ker.dim() * n, [&](const Vector& coeffs) {
    std::vector<Vector> wv = particular;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t k = 0; k < ker.dim(); ++k) field.axpy(wv[i], coeffs[i * ker.dim() + k], ker.basis_vector(k));
    const MediatorReport u = free_universal_check(pres, target, wv, options);
    ++maps;
    if (u.exists && u.count == 1) ++good;
    return true;
  });
  s.object("admissible_w", maps);
  s.check("every admissible w has a unique mediator", good == maps,
          std::to_string(good) + "/" + std::to_string(maps));
}

IsoReport koszul_section(Section& s, const Algebra& r, const std::vector<Vector>& f) {
  const Matrix d = koszul_differential(r, f);
  const ExteriorSquare ext = exterior_square(r, f.size());
  s.object("exterior_rank", ext.rank());
  s.object("dim_Lambda2", ext.dim());
  s.object("dim_im_d", rank(d));
  const IsoReport rep = koszul_free_induced_iso(r, f);
  s.object("dim_C", rep.free_dim);
  Json skipped = Json::array();
  for (const auto& leg : rep.legs) {
    if (leg.skipped) {
      skipped.push_back(leg.name + ": " + leg.detail);
      continue;
    }
    s.check(leg.name, leg.verified, leg.detail);
  }
  if (!skipped.empty()) s.object("skipped", skipped);
  return rep;
}

void multiplier_section(Section& s, const Algebra& r) {
  const MultiplierAlgebra m = multiplier_algebra(r);
  s.object("M(R)", summarize(m.algebra));
  s.object("mu_bijective", m.mu.is_bijective());
  attempt(s, "(R, M(R), mu) is a crossed module", [&] { multiplication_xmod(r); });
}

}  // namespace xalg::cli

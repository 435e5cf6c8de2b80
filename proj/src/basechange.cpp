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

#include "xalg/basechange.hpp"

#include <algorithm>
#include <map>

#include "xalg/error.hpp"

namespace xalg {
namespace {

Vector coords_in(const Subspace& space, const Vector& v, const std::string& what) {
  auto c = space.coordinates(v);
  if (!c) throw Error(ErrorKind::ValidationError, what + ": vector outside the expected subspace");
  return std::move(*c);
}

/// u (x) v with index a * |v| + b.
Vector tensor(const PrimeField& f, const Vector& u, const Vector& v) {
  Vector out(u.size() * v.size(), 0);
  for (std::size_t a = 0; a < u.size(); ++a)
    if (u[a] != 0)
      for (std::size_t b = 0; b < v.size(); ++b) out[a * v.size() + b] = f.mul(u[a], v[b]);
  return out;
}

Matrix matrix_of(const PrimeField& f, std::size_t rows, const std::vector<Vector>& columns) {
  return Matrix::from_columns(f, rows, columns);
}

void require_base(const AlgebraMorphism& phi, const Algebra& expected, bool as_source, const std::string& what) {
  const Algebra& side = as_source ? phi.source() : phi.target();
  if (!(side == expected)) throw Error(ErrorKind::DimensionMismatch, what + ": base map does not match the base");
}

}  // namespace

// ---------------------------------------------------------------------------
// Pullback

PullbackResult pullback(const CrossedModule& xm, const AlgebraMorphism& phi) {
  require_base(phi, xm.base(), false, "pullback");
  const Algebra& c = xm.top();
  const Algebra& s = phi.source();
  const PrimeField& f = c.field();
  const std::string label = "pb(" + xm.label() + ")";

  ProductAlgebra cs = product_algebra(c, s);
  Matrix lhs = hstack(xm.boundary().matrix(), Matrix(f, xm.base().dim(), s.dim()) - phi.matrix());
  Subspace fiber = kernel(lhs);
  Subalgebra top = subalgebra(cs.algebra, fiber, label + ".top");

  AlgebraMorphism boundary = make_morphism(top.algebra, s, cs.second_projection.matrix() * top.inclusion);
  AlgebraMorphism phi_prime = make_morphism(top.algebra, c, cs.first_projection.matrix() * top.inclusion);

  std::vector<Vector> table;
  table.reserve(s.dim() * fiber.dim());
  for (std::size_t i = 0; i < s.dim(); ++i) {
    const Vector phi_s = phi.matrix().column(i);
    for (std::size_t k = 0; k < fiber.dim(); ++k) {
      const Vector v = fiber.basis_vector(k);
      Vector cv(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(c.dim()));
      Vector sv(v.begin() + static_cast<std::ptrdiff_t>(c.dim()), v.end());
      Vector w = xm.action().act(phi_s, cv);
      const Vector ss = s.multiply(s.basis_element(i), sv);
      w.insert(w.end(), ss.begin(), ss.end());
      table.push_back(coords_in(fiber, w, label + " action"));
    }
  }
  AlgebraAction action = make_action(s, top.algebra, std::move(table));
  CrossedModule result = validate_xmod(top.algebra, s, boundary, action, label);
  XModMorphism square = make_xmod_morphism(result, xm, phi_prime, phi);
  return PullbackResult{xm, phi, result, phi_prime, fiber, top.inclusion, square};
}

MediatorReport pullback_universal_check(const PullbackResult& res, const XModMorphism& cone,
                                        const SearchOptions& options) {
  if (!(cone.base_map() == res.phi) || !(cone.target().top() == res.original.top()))
    throw Error(ErrorKind::DimensionMismatch, "cone does not end at the pulled back square");
  MediatorReport report;
  const CrossedModule& b = cone.source();
  const PrimeField& f = b.top().field();
  const AlgebraMorphism& fmap = cone.top_map();
  const AlgebraMorphism id_s = identity_morphism(res.xm.base());

  std::vector<Vector> columns;
  bool in_fiber = true;
  for (std::size_t x = 0; x < b.top().dim(); ++x) {
    Vector v = fmap.matrix().column(x);
    const Vector mu = b.boundary().matrix().column(x);
    v.insert(v.end(), mu.begin(), mu.end());
    auto coords = res.fiber.coordinates(v);
    if (!coords) {
      in_fiber = false;
      report.failures.push_back("(f(x), mu(x)) leaves the fiber at basis element " + std::to_string(x));
      break;
    }
    columns.push_back(std::move(*coords));
  }
  if (in_fiber) {
    try {
      AlgebraMorphism fstar = make_morphism(b.top(), res.xm.top(), matrix_of(f, res.xm.top().dim(), columns));
      XModMorphism m = make_xmod_morphism(b, res.xm, fstar, id_s);
      if (!(compose(res.phi_prime, fstar).matrix() == fmap.matrix()))
        report.failures.push_back("phi' f* != f");
      else
        report.mediator = m;
    } catch (const Error& e) {
      report.failures.push_back(std::string("candidate rejected: ") + e.what());
    }
  }
  report.exists = report.failures.empty() && report.mediator.has_value();

  MapConstraints extra(f, res.xm.top().dim(), b.top().dim());
  extra.add_left_product(res.phi_prime.matrix(), fmap.matrix());
  search_xmod_morphisms(b, res.xm, id_s, extra, options, [&](const XModMorphism&) {
    ++report.count;
    return true;
  });
  return report;
}

CrossedModule kernel_closed_form(const AlgebraMorphism& phi) {
  return inclusion_xmod(phi.source(), kernel_ideal(phi), "Ker -> " + phi.source().label());
}

CrossedModule preimage_closed_form(const Ideal& ideal, const AlgebraMorphism& phi) {
  require_base(phi, ideal.parent(), false, "preimage");
  QuotientAlgebra q = quotient_algebra(ideal.parent(), ideal);
  return inclusion_xmod(phi.source(), kernel_ideal(compose(q.projection, phi)), "preimage -> " + phi.source().label());
}

CrossedModule zero_module_closed_form(const CrossedModule& module_xm, const AlgebraMorphism& phi) {
  require_base(phi, module_xm.base(), false, "zero-module closed form");
  if (!module_xm.boundary().matrix().is_zero())
    throw Error(ErrorKind::ValidationError, module_xm.label() + ": boundary is not zero");
  const Algebra& m = module_xm.top();
  const Algebra& s = phi.source();
  Ideal ker = kernel_ideal(phi);
  Subalgebra k = subalgebra(s, ker.space(), "Ker");
  ProductAlgebra top = product_algebra(m, k.algebra);
  const std::string label = "M x Ker -> " + s.label();

  AlgebraMorphism boundary = make_morphism(top.algebra, s, k.inclusion * top.second_projection.matrix());
  std::vector<Vector> table;
  for (std::size_t i = 0; i < s.dim(); ++i) {
    const Vector phi_s = phi.matrix().column(i);
    for (std::size_t p = 0; p < m.dim(); ++p) {
      Vector v = module_xm.action().act(phi_s, m.basis_element(p));
      v.resize(top.algebra.dim(), 0);
      table.push_back(std::move(v));
    }
    for (std::size_t q = 0; q < k.algebra.dim(); ++q) {
      Vector v(m.dim(), 0);
      const Vector sk = coords_in(ker.space(), s.multiply(s.basis_element(i), ker.space().basis_vector(q)), label);
      v.insert(v.end(), sk.begin(), sk.end());
      table.push_back(std::move(v));
    }
  }
  AlgebraAction action = make_action(s, top.algebra, std::move(table));
  return validate_xmod(top.algebra, s, boundary, action, label);
}

// ---------------------------------------------------------------------------
// Induced

InducedResult induce_tensor(const CrossedModule& xm, const AlgebraMorphism& phi) {
  require_base(phi, xm.base(), true, "induce");
  const Algebra& d = xm.top();
  const Algebra& s = xm.base();
  const Algebra& r = phi.target();
  if (!r.is_unital()) throw Error(ErrorKind::RNotUnital, r.label() + " has no unit; d |-> d (x) 1 is undefined");
  const PrimeField& f = r.field();
  const std::size_t n = d.dim(), m = r.dim(), amb = n * m;
  const std::string label = "ind(" + xm.label() + ")";

  std::vector<Vector> relations;
  relations.reserve(s.dim() * n * m);
  for (std::size_t i = 0; i < s.dim(); ++i) {
    const Vector phi_s = phi.matrix().column(i);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < m; ++b)
        relations.push_back(f.sub(tensor(f, xm.action().act_basis(i, a), r.basis_element(b)),
                                  tensor(f, d.basis_element(a), r.multiply(phi_s, r.basis_element(b)))));
  }
  Subspace span = Subspace::span(f, amb, relations);
  QuotientSpace q(span);

  auto ambient_product = [&](std::size_t x, std::size_t y) {
    return tensor(f, d.product(x / m, y / m), r.product(x % m, y % m));
  };
  auto ambient_multiply = [&](const Vector& u, const Vector& v) {
    Vector out(amb, 0);
    for (std::size_t x = 0; x < amb; ++x)
      if (u[x] != 0)
        for (std::size_t y = 0; y < amb; ++y)
          if (v[y] != 0) f.axpy(out, f.mul(u[x], v[y]), ambient_product(x, y));
    return out;
  };
  auto ambient_boundary = [&](std::size_t x) {
    return r.multiply(phi.apply(xm.boundary().matrix().column(x / m)), r.basis_element(x % m));
  };
  auto ambient_act = [&](std::size_t j, std::size_t x) {
    return tensor(f, d.basis_element(x / m), r.product(j, x % m));
  };

  // The relation span must be an ideal, stable under R and killed by d_*.
  for (const auto& v : span.basis_vectors()) {
    for (std::size_t y = 0; y < amb; ++y)
      if (!span.contains(ambient_multiply(v, f.unit_vector(amb, y))))
        throw Error(ErrorKind::ValidationError, label + ": relations do not form an ideal", {y});
    Vector dv(m, 0);
    for (std::size_t x = 0; x < amb; ++x)
      if (v[x] != 0) f.axpy(dv, v[x], ambient_boundary(x));
    if (!is_zero(dv)) throw Error(ErrorKind::ValidationError, label + ": boundary does not vanish on relations");
    for (std::size_t j = 0; j < m; ++j) {
      Vector w(amb, 0);
      for (std::size_t x = 0; x < amb; ++x)
        if (v[x] != 0) f.axpy(w, v[x], ambient_act(j, x));
      if (!span.contains(w)) throw Error(ErrorKind::ValidationError, label + ": relations not R-stable", {j});
    }
  }

  const auto& section = q.section();
  const std::size_t k = q.dim();
  std::vector<Vector> products(k * k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) products[i * k + j] = q.project(ambient_product(section[i], section[j]));
  Algebra top = make_algebra_detect_unit(f, k, std::move(products), label + ".top");

  std::vector<Vector> bcols;
  for (std::size_t i = 0; i < k; ++i) bcols.push_back(ambient_boundary(section[i]));
  AlgebraMorphism boundary = make_morphism(top, r, matrix_of(f, m, bcols));

  std::vector<Vector> table;
  table.reserve(m * k);
  for (std::size_t j = 0; j < m; ++j)
    for (std::size_t i = 0; i < k; ++i) table.push_back(q.project(ambient_act(j, section[i])));
  AlgebraAction action = make_action(r, top, std::move(table));
  CrossedModule result = validate_xmod(top, r, boundary, action, label);

  std::vector<Vector> pcols;
  for (std::size_t a = 0; a < n; ++a) pcols.push_back(q.project(tensor(f, d.basis_element(a), *r.unit())));
  AlgebraMorphism phi_prime = make_morphism(d, top, matrix_of(f, k, pcols));
  XModMorphism square = make_xmod_morphism(xm, result, phi_prime, phi);
  return InducedResult{xm, phi, result, phi_prime, span, q, square};
}

RelationCheck check_induced_relations(const InducedResult& res) {
  RelationCheck check;
  const Algebra& d = res.original.top();
  const Algebra& s = res.original.base();
  const Algebra& r = res.phi.target();
  const Algebra& top = res.xm.top();
  const PrimeField& f = r.field();
  const QuotientSpace& q = res.quotient;
  auto cls = [&](const Vector& dv, const Vector& rv) { return q.project(tensor(f, dv, rv)); };

  check.balancing = true;
  for (std::size_t i = 0; i < s.dim() && check.balancing; ++i)
    for (std::size_t a = 0; a < d.dim(); ++a)
      for (std::size_t b = 0; b < r.dim(); ++b)
        if (cls(res.original.action().act_basis(i, a), r.basis_element(b)) !=
            cls(d.basis_element(a), r.multiply(res.phi.matrix().column(i), r.basis_element(b))))
          check.balancing = false;

  check.product_relation = true;
  for (std::size_t a1 = 0; a1 < d.dim() && check.product_relation; ++a1) {
    const Vector pd = res.phi.apply(res.original.boundary().matrix().column(a1));
    for (std::size_t b1 = 0; b1 < r.dim(); ++b1)
      for (std::size_t a2 = 0; a2 < d.dim(); ++a2)
        for (std::size_t b2 = 0; b2 < r.dim(); ++b2) {
          const Vector lhs = top.multiply(cls(d.basis_element(a1), r.basis_element(b1)),
                                          cls(d.basis_element(a2), r.basis_element(b2)));
          const Vector rhs = cls(d.basis_element(a2), r.multiply(r.multiply(r.basis_element(b1), pd), r.basis_element(b2)));
          if (lhs != rhs) check.product_relation = false;
        }
  }

  check.peiffer = true;
  for (std::size_t x = 0; x < top.dim() && check.peiffer; ++x)
    for (std::size_t y = 0; y < top.dim(); ++y)
      if (res.xm.action().act(res.xm.boundary().matrix().column(x), top.basis_element(y)) != top.product(x, y))
        check.peiffer = false;
  return check;
}

MediatorReport induced_universal_check(const InducedResult& res, const XModMorphism& cocone,
                                       const SearchOptions& options) {
  if (!(cocone.base_map() == res.phi) || !(cocone.source().top() == res.original.top()))
    throw Error(ErrorKind::DimensionMismatch, "cocone does not start at the induced square");
  MediatorReport report;
  const CrossedModule& b = cocone.target();
  const Algebra& r = res.phi.target();
  const PrimeField& f = r.field();
  const std::size_t m = r.dim();
  const AlgebraMorphism& fmap = cocone.top_map();
  const AlgebraMorphism id_r = identity_morphism(r);

  // d (x) r |-> r . f(d) on the ambient tensor product.
  auto ambient = [&](std::size_t x) { return b.action().act(r.basis_element(x % m), fmap.matrix().column(x / m)); };
  bool well_defined = true;
  for (const auto& v : res.relation_span.basis_vectors()) {
    Vector w(b.top().dim(), 0);
    for (std::size_t x = 0; x < v.size(); ++x)
      if (v[x] != 0) f.axpy(w, v[x], ambient(x));
    if (!is_zero(w)) well_defined = false;
  }
  if (!well_defined) report.failures.push_back("r.f(d) does not vanish on the balancing relations");

  if (well_defined) {
    std::vector<Vector> cols;
    for (std::size_t i : res.quotient.section()) cols.push_back(ambient(i));
    try {
      AlgebraMorphism fstar = make_morphism(res.xm.top(), b.top(), matrix_of(f, b.top().dim(), cols));
      XModMorphism med = make_xmod_morphism(res.xm, b, fstar, id_r);
      if (!(compose(fstar, res.phi_prime).matrix() == fmap.matrix()))
        report.failures.push_back("f_* phi' != f");
      else
        report.mediator = med;
    } catch (const Error& e) {
      report.failures.push_back(std::string("candidate rejected: ") + e.what());
    }
  }
  report.exists = report.failures.empty() && report.mediator.has_value();

  MapConstraints extra(f, b.top().dim(), res.xm.top().dim());
  extra.add_right_product(res.phi_prime.matrix(), fmap.matrix());
  search_xmod_morphisms(res.xm, b, id_r, extra, options, [&](const XModMorphism&) {
    ++report.count;
    return true;
  });
  return report;
}

EpiResult induce_epi(const CrossedModule& xm, const AlgebraMorphism& phi) {
  require_base(phi, xm.base(), true, "induce_epi");
  if (!phi.is_surjective()) throw Error(ErrorKind::NotSurjective, "induce_epi: base map is not onto");
  const Algebra& d = xm.top();
  const Algebra& r = phi.target();
  const PrimeField& f = d.field();
  const std::string label = "D/KD(" + xm.label() + ")";

  Ideal k = kernel_ideal(phi);
  std::vector<Vector> gens;
  for (const auto& kv : k.space().basis_vectors())
    for (std::size_t a = 0; a < d.dim(); ++a) gens.push_back(xm.action().act(kv, d.basis_element(a)));
  Ideal kd = ideal_closure(d, gens);
  QuotientAlgebra quot = quotient_algebra(d, kd);
  const auto& section = quot.space.section();

  for (const auto& v : kd.space().basis_vectors())
    if (!is_zero(phi.apply(xm.boundary().apply(v))))
      throw Error(ErrorKind::ValidationError, label + ": phi d does not vanish on KD");

  std::vector<Vector> bcols;
  for (std::size_t i : section) bcols.push_back(phi.apply(xm.boundary().matrix().column(i)));
  AlgebraMorphism beta = make_morphism(quot.algebra, r, matrix_of(f, r.dim(), bcols));

  std::vector<Vector> table;
  for (std::size_t j = 0; j < r.dim(); ++j) {
    auto pre = solve(phi.matrix(), r.basis_element(j));
    if (!pre) throw Error(ErrorKind::NotSurjective, "induce_epi: no preimage", {j});
    for (std::size_t i : section) table.push_back(quot.space.project(xm.action().act(*pre, d.basis_element(i))));
  }
  AlgebraAction action = make_action(r, quot.algebra, std::move(table));
  CrossedModule result = validate_xmod(quot.algebra, r, beta, action, label);
  XModMorphism rho = make_xmod_morphism(xm, result, quot.projection, phi);
  return EpiResult{result, kd, quot, rho};
}

std::optional<XModMorphism> iso_search(const CrossedModule& a, const CrossedModule& b, const SearchOptions& options) {
  if (!(a.base() == b.base()))
    throw Error(ErrorKind::DimensionMismatch, "iso_search: " + a.label() + " and " + b.label() + " have different bases");
  if (a.top().dim() != b.top().dim()) return std::nullopt;
  std::optional<XModMorphism> found;
  search_xmod_morphisms(a, b, identity_morphism(a.base()), std::nullopt, options, [&](const XModMorphism& m) {
    if (!m.top_map().is_bijective()) return true;
    found = m;
    return false;
  });
  return found;
}

// ---------------------------------------------------------------------------
// Ideal inclusions

bool IdealInclusionResult::all_checks_pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const SubCheck& c) { return c.passed; });
}

namespace {

/// Everything the T construction and the gamma checks need, in R coordinates.
struct InclusionContext {
  const Algebra& r;
  const Ideal& d;
  const Ideal& s;
  const QuotientAlgebra& rs;
  const Ideal& q;
  QuotientSpace d_mod_d2;  // in D coordinates
  std::optional<AlgebraMorphism> augmentation;  // R/S -> F_p with kernel Q

  /// Class of an element of D (R coordinates) in D/D^2.
  Vector d_class(const Vector& v) const { return d_mod_d2.project(coords_in(d.space(), v, "D")); }
  /// pi(r bar) in Q coordinates: r bar - eps(r bar) 1 along an augmentation,
  /// the coordinate projection onto Q otherwise.
  Vector pi(const Vector& rv) const {
    const Vector bar = rs.projection.apply(rv);
    const PrimeField& f = r.field();
    if (augmentation) {
      const Scalar e = augmentation->apply(bar)[0];
      return coords_in(q.space(), f.sub(bar, f.scale(e, *rs.algebra.unit())), "Q");
    }
    return coords_in(q.space(), f.sub(bar, q.space().reduce(bar)), "Q");
  }
  /// A representative in R of the b-th basis vector of Q.
  Vector lift_q(std::size_t b) const { return rs.space.lift(q.space().basis_vector(b)); }
  /// Representative in R of the a-th basis class of D/D^2.
  Vector lift_t(std::size_t a) const { return d.space().basis_vector(d_mod_d2.section()[a]); }
};

struct Candidate {
  std::string name;
  const CrossedModule* c;
  const AlgebraMorphism* beta;  // D -> C
};

void gamma_checks(const InclusionContext& ctx, const Candidate& cand,
                  const std::optional<CrossedModule>& t, std::vector<SubCheck>& out) {
  const Algebra& r = ctx.r;
  const Algebra& c = cand.c->top();
  const PrimeField& f = r.field();
  const std::size_t nd = ctx.d.dim();
  auto beta_r = [&](const Vector& v) { return cand.beta->apply(coords_in(ctx.d.space(), v, "D")); };
  auto gamma = [&](const Vector& rv, const Vector& dv) {
    return f.sub(cand.c->action().act(rv, beta_r(dv)), beta_r(r.multiply(rv, dv)));
  };
  const auto dbasis = ctx.d.space().basis_vectors();

  SubCheck ann{"gamma_r(D) in Ann(C) and ker alpha [" + cand.name + "]", true, {}};
  SubCheck mult{"gamma_r kills D^2 and gamma_r(d) gamma_r(d') = 0 [" + cand.name + "]", true, {}};
  SubCheck dep{"gamma_s = 0 for s in S [" + cand.name + "]", true, {}};
  for (std::size_t i = 0; i < r.dim(); ++i) {
    const Vector ri = r.basis_element(i);
    for (std::size_t a = 0; a < nd; ++a) {
      const Vector g = gamma(ri, dbasis[a]);
      if (!is_zero(cand.c->boundary().apply(g)) && ann.passed) {
        ann.passed = false;
        ann.detail = "alpha(gamma) != 0 at r=e" + std::to_string(i) + ", d=" + std::to_string(a);
      }
      for (std::size_t p = 0; p < c.dim() && ann.passed; ++p)
        if (!is_zero(c.multiply(g, c.basis_element(p)))) {
          ann.passed = false;
          ann.detail = "gamma not annihilating at r=e" + std::to_string(i) + ", d=" + std::to_string(a);
        }
      for (std::size_t b = 0; b < nd && mult.passed; ++b) {
        if (!is_zero(gamma(ri, r.multiply(dbasis[a], dbasis[b]))) || !is_zero(c.multiply(g, gamma(ri, dbasis[b])))) {
          mult.passed = false;
          mult.detail = "at r=e" + std::to_string(i) + ", d=" + std::to_string(a) + ", d'=" + std::to_string(b);
        }
      }
    }
  }
  for (const auto& sv : ctx.s.space().basis_vectors())
    for (std::size_t a = 0; a < nd && dep.passed; ++a)
      if (!is_zero(gamma(sv, dbasis[a]))) {
        dep.passed = false;
        dep.detail = "gamma_s(d) != 0 at d=" + std::to_string(a);
      }
  out.push_back(ann);
  out.push_back(mult);
  out.push_back(dep);

  SubCheck mediator{"phi~(d, [t] (x) q) = beta(d) + gamma_q(t) is a morphism of crossed R-modules [" + cand.name + "]",
                    false, {}};
  if (!t) {
    mediator.detail = "T did not validate";
    out.push_back(mediator);
    return;
  }
  const std::size_t n2 = ctx.d_mod_d2.dim(), nq = ctx.q.dim();
  std::vector<Vector> cols;
  for (std::size_t a = 0; a < nd; ++a) cols.push_back(cand.beta->matrix().column(a));
  for (std::size_t a = 0; a < n2; ++a)
    for (std::size_t b = 0; b < nq; ++b) cols.push_back(gamma(ctx.lift_q(b), ctx.lift_t(a)));
  try {
    AlgebraMorphism phit = make_morphism(t->top(), c, matrix_of(f, c.dim(), cols));
    make_xmod_morphism(*t, *cand.c, phit, identity_morphism(r));
    Matrix incl(f, t->top().dim(), nd);
    for (std::size_t a = 0; a < nd; ++a) incl.set(a, a, 1);
    const bool restricts = phit.matrix() * incl == cand.beta->matrix();
    const bool over = cand.c->boundary().matrix() * phit.matrix() == t->boundary().matrix();
    mediator.passed = restricts && over;
    if (!restricts) mediator.detail = "phi~ i != beta";
    else if (!over) mediator.detail = "alpha phi~ != zeta";
  } catch (const Error& e) {
    mediator.detail = e.what();
  }
  out.push_back(mediator);
}

}  // namespace

IdealInclusionResult induce_ideal_inclusion(const Algebra& r, const Ideal& s, const Ideal& d,
                                            const std::optional<Ideal>& q_preimage, const SearchOptions& options) {
  if (!(s.parent() == r) || !(d.parent() == r))
    throw Error(ErrorKind::DimensionMismatch, "induce_ideal_inclusion: ideals of another algebra");
  if (!r.is_unital()) throw Error(ErrorKind::RNotUnital, r.label() + " has no unit");
  for (const auto& v : d.space().basis_vectors())
    if (!s.contains(v)) throw Error(ErrorKind::ValidationError, "induce_ideal_inclusion: D is not inside S");
  const PrimeField& f = r.field();

  Subalgebra s_alg = subalgebra(r, s.space(), "S");
  Subalgebra d_alg = subalgebra(r, d.space(), "D");
  std::vector<Vector> bcols, table;
  for (const auto& v : d.space().basis_vectors()) bcols.push_back(coords_in(s.space(), v, "D in S"));
  for (const auto& sv : s.space().basis_vectors())
    for (const auto& dv : d.space().basis_vectors()) table.push_back(coords_in(d.space(), r.multiply(sv, dv), "S.D"));
  AlgebraMorphism boundary = make_morphism(d_alg.algebra, s_alg.algebra, matrix_of(f, s.dim(), bcols));
  AlgebraAction s_on_d = make_action(s_alg.algebra, d_alg.algebra, std::move(table));
  CrossedModule d_xm = validate_xmod(d_alg.algebra, s_alg.algebra, boundary, s_on_d, "(D, S, incl)");
  AlgebraMorphism phi = make_morphism(s_alg.algebra, r, s_alg.inclusion);

  QuotientAlgebra rs = quotient_algebra(r, s);
  std::string q_choice;
  std::optional<Ideal> q;
  std::optional<AlgebraMorphism> augmentation;
  if (q_preimage) {
    if (!(q_preimage->parent() == r)) throw Error(ErrorKind::DimensionMismatch, "Q preimage of another algebra");
    for (const auto& v : s.space().basis_vectors())
      if (!q_preimage->contains(v)) throw Error(ErrorKind::ValidationError, "Q preimage does not contain S");
    std::vector<Vector> gens;
    for (const auto& v : q_preimage->space().basis_vectors()) gens.push_back(rs.projection.apply(v));
    q = make_ideal(rs.algebra, Subspace::span(f, rs.algebra.dim(), gens));
    q_choice = "caller-designated ideal of R/S";
  } else if (!rs.algebra.is_unital()) {
    q = whole_ideal(rs.algebra);
    q_choice = "R/S (no unit)";
  } else {
    Algebra fp = validate_algebra(f, 1, {Vector{1}}, Vector{1}, "F_p");
    auto eps = enumerate_morphisms(rs.algebra, fp, {{*rs.algebra.unit(), Vector{1}}}, options);
    if (!eps.empty()) {
      augmentation = eps.front();
      q = kernel_ideal(*augmentation);
      q_choice = "kernel of the first augmentation R/S -> F_p";
    } else {
      q = nilradical(rs.algebra);
      q_choice = "nilradical of R/S (no augmentation exists)";
    }
  }

  Ideal d2 = product_ideal(d, d);
  std::vector<Vector> d2_coords;
  for (const auto& v : d2.space().basis_vectors()) d2_coords.push_back(coords_in(d.space(), v, "D^2"));
  InclusionContext ctx{r, d, s, rs, *q, QuotientSpace(Subspace::span(f, d.dim(), d2_coords)), augmentation};

  const std::size_t nd = d.dim(), n2 = ctx.d_mod_d2.dim(), nq = q->dim(), nt = nd + n2 * nq;
  std::vector<SubCheck> checks;

  // [s.t] = 0 in D/D^2 makes [x.t] independent of the lift x. With Q = 0
  // no lift is ever taken.
  SubCheck rep{"[s t] = 0 in D/D^2 for s in S", true, nq == 0 ? "vacuous: Q = 0" : ""};
  for (const auto& sv : s.space().basis_vectors())
    if (nq != 0)
    for (std::size_t a = 0; a < n2 && rep.passed; ++a)
      if (!is_zero(ctx.d_class(r.multiply(sv, ctx.lift_t(a))))) {
        rep.passed = false;
        rep.detail = "S D is not inside D^2";
      }
  checks.push_back(rep);

  // T = D x (D/D^2 (x) Q): coordinates d first, then a * nq + b.
  std::vector<Vector> products(nt * nt, Vector(nt, 0));
  for (std::size_t a = 0; a < nd; ++a)
    for (std::size_t b = 0; b < nd; ++b) {
      Vector v = d_alg.algebra.product(a, b);
      v.resize(nt, 0);
      products[a * nt + b] = std::move(v);
    }
  std::vector<Vector> ttable;
  ttable.reserve(r.dim() * nt);
  for (std::size_t i = 0; i < r.dim(); ++i) {
    const Vector ri = r.basis_element(i);
    const Vector pir = ctx.pi(ri);
    for (std::size_t a = 0; a < nd; ++a) {
      const Vector dv = d.space().basis_vector(a);
      Vector v = coords_in(d.space(), r.multiply(ri, dv), "r.d");
      const Vector u = tensor(f, ctx.d_class(dv), pir);
      v.insert(v.end(), u.begin(), u.end());
      ttable.push_back(std::move(v));
    }
    const Vector rbar = rs.projection.apply(ri);
    for (std::size_t a = 0; a < n2; ++a)
      for (std::size_t b = 0; b < nq; ++b) {
        const Vector rq = coords_in(q->space(), rs.algebra.multiply(rbar, q->space().basis_vector(b)), "r q");
        Vector u = tensor(f, f.unit_vector(n2, a), rq);
        const Vector xt = ctx.d_class(r.multiply(ctx.lift_q(b), ctx.lift_t(a)));
        u = f.sub(u, tensor(f, xt, pir));
        Vector v(nd, 0);
        v.insert(v.end(), u.begin(), u.end());
        ttable.push_back(std::move(v));
      }
  }

  std::optional<CrossedModule> t;
  std::optional<XModMorphism> incl;
  SubCheck t_valid{"T is a crossed R-module", false, {}};
  SubCheck i_valid{"(i, phi): d |-> (d, 0) is a morphism of crossed modules", false, {}};
  try {
    Algebra t_alg = validate_algebra(f, nt, std::move(products), std::nullopt, "T.top");
    Matrix zeta(f, r.dim(), nt);
    for (std::size_t a = 0; a < nd; ++a) {
      const Vector dv = d.space().basis_vector(a);
      for (std::size_t x = 0; x < r.dim(); ++x) zeta.set(x, a, dv[x]);
    }
    AlgebraMorphism zmap = make_morphism(t_alg, r, zeta);
    AlgebraAction act = make_action(r, t_alg, std::move(ttable));
    t = validate_xmod(t_alg, r, zmap, act, "T");
    t_valid.passed = true;
  } catch (const Error& e) {
    t_valid.detail = e.what();
  }
  checks.push_back(t_valid);
  if (t) {
    try {
      Matrix im(f, nt, nd);
      for (std::size_t a = 0; a < nd; ++a) im.set(a, a, 1);
      incl = make_xmod_morphism(d_xm, *t, make_morphism(d_xm.top(), t->top(), im), phi);
      i_valid.passed = true;
    } catch (const Error& e) {
      i_valid.detail = e.what();
    }
  } else {
    i_valid.detail = "T did not validate";
  }
  checks.push_back(i_valid);

  InducedResult tensor_res = induce_tensor(d_xm, phi);
  gamma_checks(ctx, Candidate{"tensor", &tensor_res.xm, &tensor_res.phi_prime}, t, checks);
  if (t && incl) gamma_checks(ctx, Candidate{"T", &*t, &incl->top_map()}, t, checks);

  ComparisonReport cmp;
  cmp.t_dim = nt;
  cmp.tensor_dim = tensor_res.xm.top().dim();
  if (!t) {
    cmp.obstruction = "T is not a crossed module";
  } else if (cmp.t_dim != cmp.tensor_dim) {
    cmp.obstruction = "dimension mismatch: T has dim " + std::to_string(cmp.t_dim) + ", tensor has dim " +
                      std::to_string(cmp.tensor_dim);
  } else {
    try {
      cmp.witness = iso_search(*t, tensor_res.xm, options);
    } catch (const Error& e) {
      if (e.kind() == ErrorKind::SearchTooLarge) throw Error(ErrorKind::BudgetExceeded, e.what());
      throw;
    }
    cmp.isomorphic = cmp.witness.has_value();
    if (!cmp.isomorphic) cmp.obstruction = "no isomorphism over id_R exists";
  }

  return IdealInclusionResult{d_xm, phi, rs, *q, q_choice, n2, t, incl, std::move(tensor_res), std::move(checks),
                              std::move(cmp)};
}

// ---------------------------------------------------------------------------
// Adjunction

AdjunctionReport adjunction_check(const AlgebraMorphism& phi, const CrossedModule& d, const CrossedModule& c,
                                  const SearchOptions& options) {
  require_base(phi, d.base(), true, "adjunction");
  require_base(phi, c.base(), false, "adjunction");
  const PrimeField& f = phi.source().field();
  InducedResult ind = induce_tensor(d, phi);
  PullbackResult pb = pullback(c, phi);
  const auto left = enumerate_xmod_morphisms(ind.xm, c, identity_morphism(c.base()), options);
  const auto right = enumerate_xmod_morphisms(d, pb.xm, identity_morphism(d.base()), options);
  AdjunctionReport report;
  report.induced_side = left.size();
  report.pullback_side = right.size();

  std::map<std::vector<Scalar>, std::size_t> left_index, right_index;
  auto key = [](const Matrix& m) {
    std::vector<Scalar> k;
    for (std::size_t r = 0; r < m.rows(); ++r)
      for (std::size_t col = 0; col < m.cols(); ++col) k.push_back(m(r, col));
    return k;
  };
  for (std::size_t i = 0; i < left.size(); ++i) left_index.emplace(key(left[i].top_map().matrix()), i);
  for (std::size_t i = 0; i < right.size(); ++i) right_index.emplace(key(right[i].top_map().matrix()), i);

  // g |-> (g phi'(x), d(x)) in fiber coordinates
  auto transpose = [&](const Matrix& g) -> std::optional<Matrix> {
    const Matrix gp = g * ind.phi_prime.matrix();
    std::vector<Vector> cols;
    for (std::size_t x = 0; x < d.top().dim(); ++x) {
      Vector v = gp.column(x);
      const Vector dx = d.boundary().matrix().column(x);
      v.insert(v.end(), dx.begin(), dx.end());
      auto coords = pb.fiber.coordinates(v);
      if (!coords) return std::nullopt;
      cols.push_back(std::move(*coords));
    }
    return matrix_of(f, pb.xm.top().dim(), cols);
  };
  // h |-> (d (x) r |-> r . phi'_C(h(d)))
  const std::size_t m = c.base().dim();
  auto flatten = [&](const Matrix& h) {
    const Matrix hc = pb.phi_prime.matrix() * h;
    std::vector<Vector> cols;
    for (std::size_t x : ind.quotient.section())
      cols.push_back(c.action().act(c.base().basis_element(x % m), hc.column(x / m)));
    return matrix_of(f, c.top().dim(), cols);
  };

  std::vector<std::size_t> to_right(left.size());
  bool total = true;
  for (std::size_t i = 0; i < left.size() && total; ++i) {
    auto t = transpose(left[i].top_map().matrix());
    auto it = t ? right_index.find(key(*t)) : right_index.end();
    if (it == right_index.end()) total = false;
    else to_right[i] = it->second;
  }
  if (total) {
    std::vector<bool> hit(right.size(), false);
    for (std::size_t j : to_right) hit[j] = true;
    report.transposition_bijective = left.size() == right.size() && std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
  }

  bool round_trip = total;
  for (std::size_t j = 0; j < right.size() && round_trip; ++j) {
    auto it = left_index.find(key(flatten(right[j].top_map().matrix())));
    if (it == left_index.end() || to_right[it->second] != j) round_trip = false;
  }
  report.inverse_round_trip = round_trip;
  return report;
}

}  // namespace xalg

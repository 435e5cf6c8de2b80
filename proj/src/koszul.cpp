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

#include "xalg/koszul.hpp"

#include <algorithm>

#include "xalg/error.hpp"

namespace xalg {

ExteriorSquare exterior_square(const Algebra& r, std::size_t n) {
  ExteriorSquare ext{r, n, {}};
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) ext.pairs.emplace_back(i, j);
  return ext;
}

Vector act_on_free_module(const Algebra& r, const Vector& rv, const Vector& v) {
  const std::size_t m = r.dim();
  Vector out(v.size(), 0);
  for (std::size_t slot = 0; slot * m < v.size(); ++slot) {
    const Vector part(v.begin() + static_cast<std::ptrdiff_t>(slot * m),
                      v.begin() + static_cast<std::ptrdiff_t>((slot + 1) * m));
    const Vector prod = r.multiply(rv, part);
    std::copy(prod.begin(), prod.end(), out.begin() + static_cast<std::ptrdiff_t>(slot * m));
  }
  return out;
}

namespace {

void check_values(const Algebra& r, const std::vector<Vector>& f) {
  for (std::size_t i = 0; i < f.size(); ++i)
    if (f[i].size() != r.dim()) throw Error(ErrorKind::DimensionMismatch, "f value has the wrong length", {i});
}

Vector slot_vector(const PrimeField& field, std::size_t n, std::size_t m, std::size_t slot, const Vector& x) {
  Vector v(n * m, 0);
  for (std::size_t b = 0; b < m; ++b) v[slot * m + b] = field.reduce(x[b]);
  return v;
}

}  // namespace

Matrix koszul_differential(const Algebra& r, const std::vector<Vector>& f) {
  check_values(r, f);
  const PrimeField& field = r.field();
  const std::size_t n = f.size(), m = r.dim();
  ExteriorSquare ext = exterior_square(r, n);
  std::vector<Vector> cols;
  cols.reserve(ext.dim());
  for (const auto& [i, j] : ext.pairs)
    for (std::size_t b = 0; b < m; ++b) {
      const Vector eb = r.basis_element(b);
      cols.push_back(field.sub(slot_vector(field, n, m, j, r.multiply(eb, f[i])),
                               slot_vector(field, n, m, i, r.multiply(eb, f[j]))));
    }
  return Matrix::from_columns(field, n * m, cols);
}

Vector FreeXModPresentation::generator_class(std::size_t i) const {
  return quotient.project(slot_vector(base.field(), generators.size(), base.dim(), i, *base.unit()));
}

FreeXModPresentation free_xmod(const Algebra& r, const std::vector<Vector>& f, std::vector<std::string> generators) {
  check_values(r, f);
  if (!r.is_unital()) throw Error(ErrorKind::RNotUnital, r.label() + " has no unit");
  const PrimeField& field = r.field();
  const std::size_t n = f.size(), m = r.dim(), amb = n * m;
  if (generators.empty())
    for (std::size_t i = 0; i < n; ++i) generators.push_back("y" + std::to_string(i + 1));
  if (generators.size() != n) throw Error(ErrorKind::DimensionMismatch, "generator names", {generators.size(), n});
  const std::string label = "free(" + r.label() + ")";

  Matrix d = koszul_differential(r, f);
  QuotientSpace q(column_space(d));

  std::vector<Vector> bcols;
  for (std::size_t x = 0; x < amb; ++x) bcols.push_back(r.multiply(r.basis_element(x % m), f[x / m]));
  const Matrix theta_hat = Matrix::from_columns(field, m, bcols);
  for (const auto& z : q.relations().basis_vectors()) {
    if (!is_zero(theta_hat.apply(z))) throw Error(ErrorKind::ValidationError, label + ": boundary does not kill im d");
    for (std::size_t j = 0; j < m; ++j)
      if (!q.relations().contains(act_on_free_module(r, r.basis_element(j), z)))
        throw Error(ErrorKind::ValidationError, label + ": im d is not an R-submodule", {j});
  }

  const auto& section = q.section();
  const std::size_t k = q.dim();
  std::vector<Vector> products(k * k);
  for (std::size_t a = 0; a < k; ++a) {
    const Vector da = bcols[section[a]];
    for (std::size_t b = 0; b < k; ++b)
      products[a * k + b] = q.project(act_on_free_module(r, da, field.unit_vector(amb, section[b])));
  }
  Algebra top = make_algebra_detect_unit(field, k, std::move(products), label + ".top");

  std::vector<Vector> cols;
  for (std::size_t s : section) cols.push_back(bcols[s]);
  AlgebraMorphism boundary = make_morphism(top, r, Matrix::from_columns(field, m, cols));
  std::vector<Vector> table;
  for (std::size_t j = 0; j < m; ++j)
    for (std::size_t s : section) table.push_back(q.project(act_on_free_module(r, r.basis_element(j), field.unit_vector(amb, s))));
  AlgebraAction action = make_action(r, top, std::move(table));
  CrossedModule xm = validate_xmod(top, r, boundary, action, label);
  return FreeXModPresentation{r, std::move(generators), f, std::move(d), std::move(q), std::move(xm)};
}

MediatorReport free_universal_check(const FreeXModPresentation& pres, const CrossedModule& target,
                                    const std::vector<Vector>& w, const SearchOptions& options) {
  const Algebra& r = pres.base;
  if (!(target.base() == r)) throw Error(ErrorKind::DimensionMismatch, "target is over another base");
  const std::size_t n = pres.f.size(), m = r.dim();
  if (w.size() != n) throw Error(ErrorKind::DimensionMismatch, "one value of w per generator", {w.size(), n});
  const PrimeField& field = r.field();
  for (std::size_t i = 0; i < n; ++i) {
    if (w[i].size() != target.top().dim()) throw Error(ErrorKind::DimensionMismatch, "w value length", {i});
    if (target.boundary().apply(w[i]) != pres.f[i])
      throw Error(ErrorKind::WNotCompatible, "delta(w(" + pres.generators[i] + ")) != f(" + pres.generators[i] + ")", {i});
  }

  MediatorReport report;
  // e_b e_i |-> e_b . w_i
  auto ambient = [&](std::size_t x) { return target.action().act(r.basis_element(x % m), w[x / m]); };
  for (const auto& z : pres.quotient.relations().basis_vectors()) {
    Vector img(target.top().dim(), 0);
    for (std::size_t x = 0; x < z.size(); ++x)
      if (z[x] != 0) field.axpy(img, z[x], ambient(x));
    if (!is_zero(img)) {
      report.failures.push_back("e_i |-> w_i does not vanish on the Koszul relations");
      break;
    }
  }
  if (report.failures.empty()) {
    std::vector<Vector> cols;
    for (std::size_t s : pres.quotient.section()) cols.push_back(ambient(s));
    try {
      AlgebraMorphism top = make_morphism(pres.xm.top(), target.top(),
                                          Matrix::from_columns(field, target.top().dim(), cols));
      XModMorphism med = make_xmod_morphism(pres.xm, target, top, identity_morphism(r));
      bool triangle = true;
      for (std::size_t i = 0; i < n; ++i) triangle = triangle && top.apply(pres.generator_class(i)) == w[i];
      if (triangle)
        report.mediator = med;
      else
        report.failures.push_back("mediator does not send y_i to w_i");
    } catch (const Error& e) {
      report.failures.push_back(std::string("candidate rejected: ") + e.what());
    }
  }
  report.exists = report.failures.empty() && report.mediator.has_value();

  MapConstraints extra(field, target.top().dim(), pres.xm.top().dim());
  for (std::size_t i = 0; i < n; ++i) extra.add_point(pres.generator_class(i), w[i]);
  search_xmod_morphisms(pres.xm, target, identity_morphism(r), extra, options, [&](const XModMorphism&) {
    ++report.count;
    return true;
  });
  return report;
}

bool IsoReport::all_verified() const {
  return std::all_of(legs.begin(), legs.end(), [](const IsoLeg& l) { return l.skipped || l.verified; });
}

IsoReport koszul_free_induced_iso(const Algebra& r, const std::vector<Vector>& f) {
  check_values(r, f);
  const PrimeField& field = r.field();
  const std::size_t n = f.size(), m = r.dim(), amb = n * m;
  IsoReport report;

  FreeXModPresentation pres = free_xmod(r, f);
  report.free_dim = pres.xm.top().dim();
  report.legs.push_back({"free crossed module on f validates", true,
                         "dim C = " + std::to_string(amb) + " - " + std::to_string(pres.quotient.relations().dim())});

  // R-submodule generated by f_i e_j - f_j e_i, grown by multiplication until stable.
  std::vector<Vector> gens;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      gens.push_back(field.sub(slot_vector(field, n, m, j, f[i]), slot_vector(field, n, m, i, f[j])));
  Subspace closure = Subspace::span(field, amb, gens);
  while (true) {
    std::vector<Vector> more = closure.basis_vectors();
    for (const auto& v : closure.basis_vectors())
      for (std::size_t b = 0; b < m; ++b) more.push_back(act_on_free_module(r, r.basis_element(b), v));
    Subspace next = Subspace::span(field, amb, more);
    if (next == closure) break;
    closure = std::move(next);
  }
  report.image_dim = closure.dim();
  const bool same = closure == pres.quotient.relations();
  report.legs.push_back({"R^n / d(Lambda^2 R^n) matches the free presentation", same,
                         same ? "relation spaces coincide" : "relation spaces differ"});

  // theta(p, r) = f(p) r on generators and their pairwise products.
  std::vector<Vector> values = f;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) values.push_back(r.multiply(f[i], f[j]));
  bool additive = true, balanced = true, product = true;
  for (const auto& p1 : values)
    for (const auto& p2 : values)
      for (std::size_t b = 0; b < m; ++b) {
        const Vector rb = r.basis_element(b);
        additive = additive && field.add(r.multiply(p1, rb), r.multiply(p2, rb)) == r.multiply(field.add(p1, p2), rb);
        balanced = balanced && r.multiply(r.multiply(p1, p2), rb) == r.multiply(p2, r.multiply(p1, rb));
        for (std::size_t b2 = 0; b2 < m; ++b2) {
          const Vector rb2 = r.basis_element(b2);
          const Vector lhs = r.multiply(r.multiply(p1, rb), r.multiply(p2, rb2));
          const Vector rhs = r.multiply(p2, r.multiply(r.multiply(rb, p1), rb2));
          product = product && lhs == rhs;
        }
      }
  report.legs.push_back({"theta vanishes on the additivity relations", additive, {}});
  report.legs.push_back({"theta vanishes on the balancing relations", balanced, {}});
  report.legs.push_back({"theta vanishes on the product relations", product, {}});

  std::vector<Vector> tcols;
  for (std::size_t x = 0; x < amb; ++x) tcols.push_back(r.multiply(r.basis_element(x % m), f[x / m]));
  const Matrix theta_hat = Matrix::from_columns(field, m, tcols);
  const bool kills = (theta_hat * pres.differential).is_zero();
  report.legs.push_back({"theta-hat d = 0", kills, {}});

  const Subspace image = image_space(pres.xm.boundary());
  const bool generated = image == ideal_closure(r, f).space();
  report.legs.push_back({"d(C) is the ideal generated by f", generated, {}});

  const std::uint64_t order = pres.xm.top().order();
  IsoLeg forced{"forced product independent of representatives", false, {}};
  if (order <= 4096) {
    const QuotientSpace& q = pres.quotient;
    const auto rels = q.relations().basis_vectors();
    auto prod = [&](const Vector& u, const Vector& v) { return q.project(act_on_free_module(r, theta_hat.apply(u), v)); };
    bool ok = true;
    for_each_vector(field, q.dim(), [&](const Vector& c1) {
      const Vector u = q.lift(c1);
      for_each_vector(field, q.dim(), [&](const Vector& c2) {
        const Vector v = q.lift(c2);
        const Vector base = prod(u, v);
        for (const auto& z : rels) ok = ok && prod(field.add(u, z), v) == base && prod(u, field.add(v, z)) == base;
        return ok;
      });
      return ok;
    });
    forced.verified = ok;
    forced.detail = "exhaustive over " + std::to_string(order) + " classes";
  } else {
    forced.detail = "|C| > 4096";
    forced.skipped = true;
  }
  report.legs.push_back(forced);
  report.legs.push_back({"k+[X] (x) R over k+[X]", false, "not constructed; the polynomial algebra is infinite", true});
  return report;
}

}  // namespace xalg

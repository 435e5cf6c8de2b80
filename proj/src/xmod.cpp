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

#include "xalg/xmod.hpp"

#include "xalg/error.hpp"

namespace xalg {

Vector AlgebraAction::act(const Vector& r, const Vector& c) const {
  if (r.size() != base_.dim() || c.size() != top_.dim())
    throw Error(ErrorKind::DimensionMismatch, "action argument", {r.size(), base_.dim(), c.size(), top_.dim()});
  const PrimeField& f = top_.field();
  Vector out(top_.dim(), 0);
  for (std::size_t i = 0; i < base_.dim(); ++i) {
    if (r[i] == 0) continue;
    for (std::size_t p = 0; p < top_.dim(); ++p)
      if (c[p] != 0) f.axpy(out, f.mul(r[i], c[p]), act_basis(i, p));
  }
  return out;
}

Matrix AlgebraAction::action_matrix(const Vector& r) const {
  std::vector<Vector> cols;
  cols.reserve(top_.dim());
  for (std::size_t p = 0; p < top_.dim(); ++p) cols.push_back(act(r, top_.basis_element(p)));
  return Matrix::from_columns(top_.field(), top_.dim(), cols);
}

AlgebraAction make_action(const Algebra& base, const Algebra& top, std::vector<Vector> table) {
  const std::size_t nr = base.dim(), nc = top.dim();
  if (table.size() != nr * nc)
    throw Error(ErrorKind::DimensionMismatch, "action table of " + base.label() + " on " + top.label(),
                {table.size(), nr * nc});
  for (auto& v : table) {
    if (v.size() != nc) throw Error(ErrorKind::DimensionMismatch, "action vector", {v.size(), nc});
    for (auto& s : v) s %= top.field().modulus();
  }
  AlgebraAction action(base, top, std::move(table), false);

  for (std::size_t i = 0; i < nr; ++i)
    for (std::size_t j = 0; j < nr; ++j)
      for (std::size_t p = 0; p < nc; ++p) {
        const Vector lhs = action.act(base.product(i, j), top.basis_element(p));
        const Vector rhs = action.act(base.basis_element(i), action.act_basis(j, p));
        if (lhs != rhs) throw Error(ErrorKind::BadAction, "(r r').c != r.(r'.c)", {i, j, p});
      }
  for (std::size_t i = 0; i < nr; ++i)
    for (std::size_t p = 0; p < nc; ++p)
      for (std::size_t q = 0; q < nc; ++q) {
        const Vector lhs = action.act(base.basis_element(i), top.product(p, q));
        const Vector rhs = top.multiply(action.act_basis(i, p), top.basis_element(q));
        if (lhs != rhs) throw Error(ErrorKind::BadAction, "r.(c c') != (r.c) c'", {i, p, q});
      }

  if (base.unit()) {
    action.unital_ = true;
    for (std::size_t p = 0; p < nc && action.unital_; ++p)
      action.unital_ = action.act(*base.unit(), top.basis_element(p)) == top.basis_element(p);
  }
  return action;
}

AlgebraAction multiplication_action(const Algebra& r) {
  return make_action(r, r, r.structure_constants());
}

// ---------------------------------------------------------------------------

CrossedModule CrossedModule::relabeled(std::string label) const {
  auto data = std::make_shared<Data>(*data_);
  data->label = std::move(label);
  return CrossedModule(std::move(data));
}

CrossedModule validate_xmod(const Algebra& top, const Algebra& base, const AlgebraMorphism& boundary,
                            const AlgebraAction& action, std::string label) {
  if (!(boundary.source() == top) || !(boundary.target() == base))
    throw Error(ErrorKind::DimensionMismatch, label + ": boundary does not map top to base",
                {boundary.source().dim(), top.dim(), boundary.target().dim(), base.dim()});
  if (!(action.base() == base) || !(action.top() == top))
    throw Error(ErrorKind::DimensionMismatch, label + ": action does not match (top, base)",
                {action.top().dim(), top.dim(), action.base().dim(), base.dim()});

  for (std::size_t i = 0; i < base.dim(); ++i)
    for (std::size_t p = 0; p < top.dim(); ++p) {
      const Vector lhs = boundary.apply(action.act_basis(i, p));
      const Vector rhs = base.multiply(base.basis_element(i), boundary.matrix().column(p));
      if (lhs != rhs) throw Error(ErrorKind::NotEquivariant, label, {i, p});
    }
  for (std::size_t p = 0; p < top.dim(); ++p)
    for (std::size_t q = 0; q < top.dim(); ++q) {
      const Vector lhs = action.act(boundary.matrix().column(p), top.basis_element(q));
      if (lhs != top.product(p, q)) throw Error(ErrorKind::PeifferFails, label, {p, q});
    }
  return CrossedModule(std::make_shared<const CrossedModule::Data>(CrossedModule::Data{boundary, action, std::move(label)}));
}

ExhaustiveCheck check_xmod_exhaustive(const CrossedModule& xm, std::uint64_t limit) {
  ExhaustiveCheck check;
  const std::uint64_t c_order = xm.top().order(), r_order = xm.base().order();
  if (c_order == UINT64_MAX || r_order == UINT64_MAX || c_order > limit || c_order * r_order > limit) return check;
  check.performed = true;
  const PrimeField& f = xm.top().field();
  const Algebra& top = xm.top();
  const Algebra& base = xm.base();
  for_each_vector(f, top.dim(), [&](const Vector& c) {
    const Vector dc = xm.boundary().apply(c);
    for_each_vector(f, top.dim(), [&](const Vector& c2) {
      ++check.pairs_checked;
      if (xm.action().act(dc, c2) != top.multiply(c, c2)) check.passed = false;
      return check.passed;
    });
    if (!check.passed) return false;
    for_each_vector(f, base.dim(), [&](const Vector& r) {
      ++check.pairs_checked;
      if (xm.boundary().apply(xm.action().act(r, c)) != base.multiply(r, dc)) check.passed = false;
      return check.passed;
    });
    return check.passed;
  });
  return check;
}

CrossedModule inclusion_xmod(const Algebra& r, const Ideal& ideal, std::string label) {
  if (!(ideal.parent() == r)) throw Error(ErrorKind::DimensionMismatch, "inclusion_xmod: ideal of another algebra");
  if (label.empty()) label = "I -> " + r.label();
  Subalgebra sub = subalgebra(r, ideal.space(), label + ".top");
  const std::size_t m = sub.algebra.dim();
  std::vector<Vector> table;
  table.reserve(r.dim() * m);
  for (std::size_t i = 0; i < r.dim(); ++i)
    for (std::size_t k = 0; k < m; ++k)
      table.push_back(*ideal.space().coordinates(r.multiply(r.basis_element(i), ideal.space().basis_vector(k))));
  AlgebraAction action = make_action(r, sub.algebra, std::move(table));
  AlgebraMorphism boundary = make_morphism(sub.algebra, r, sub.inclusion);
  return validate_xmod(sub.algebra, r, boundary, action, std::move(label));
}

CrossedModule identity_xmod(const Algebra& r, std::string label) {
  if (label.empty()) label = "id(" + r.label() + ")";
  return validate_xmod(r, r, identity_morphism(r), multiplication_action(r), std::move(label));
}

CrossedModule zero_module_xmod(const Algebra& r, std::size_t module_dim, std::vector<Vector> action_table,
                               std::string label) {
  if (label.empty()) label = "M -0-> " + r.label();
  Algebra m = zero_multiplication_algebra(r.field(), module_dim, label + ".top");
  AlgebraAction action = make_action(r, m, std::move(action_table));
  return validate_xmod(m, r, zero_morphism(m, r), action, std::move(label));
}

CrossedModule zero_xmod(const Algebra& base, std::string label) {
  if (label.empty()) label = "0 -> " + base.label();
  Algebra z = zero_algebra(base.field());
  return validate_xmod(z, base, zero_morphism(z, base), make_action(base, z, {}), std::move(label));
}

CrossedModule multiplication_xmod(const Algebra& r, std::string label) {
  if (label.empty()) label = "(" + r.label() + ", M(" + r.label() + "), mu)";
  MultiplierAlgebra m = multiplier_algebra(r);
  std::vector<Vector> table;
  for (std::size_t k = 0; k < m.multipliers.size(); ++k)
    for (std::size_t p = 0; p < r.dim(); ++p) table.push_back(m.multipliers[k].column(p));
  AlgebraAction action = make_action(m.algebra, r, std::move(table));
  return validate_xmod(r, m.algebra, m.mu, action, std::move(label));
}

Ideal boundary_image_is_ideal(const CrossedModule& xm) {
  return make_ideal(xm.base(), image_space(xm.boundary()));
}

KernelModule kernel_module(const CrossedModule& xm) {
  const Algebra& top = xm.top();
  const Algebra& base = xm.base();
  Ideal ker = kernel_ideal(xm.boundary());
  for (std::size_t i = 0; i < base.dim(); ++i)
    for (const auto& k : ker.space().basis_vectors())
      if (!ker.contains(xm.action().act(base.basis_element(i), k)))
        throw Error(ErrorKind::ValidationError, xm.label() + ": ker d is not an R-submodule", {i});
  for (std::size_t c = 0; c < top.dim(); ++c)
    for (std::size_t k = 0; k < ker.dim(); ++k)
      if (!is_zero(xm.action().act(xm.boundary().matrix().column(c), ker.space().basis_vector(k))))
        throw Error(ErrorKind::ValidationError, xm.label() + ": d(C) acts nontrivially on ker d", {c, k});

  Ideal image = boundary_image_is_ideal(xm);
  QuotientAlgebra quotient = quotient_algebra(base, image);
  Subalgebra kernel_alg = subalgebra(top, ker.space(), "ker(" + xm.label() + ")");
  std::vector<Vector> table;
  for (std::size_t i = 0; i < quotient.algebra.dim(); ++i) {
    const Vector rep = base.basis_element(quotient.space.section()[i]);
    for (std::size_t k = 0; k < ker.dim(); ++k)
      table.push_back(*ker.space().coordinates(xm.action().act(rep, ker.space().basis_vector(k))));
  }
  AlgebraAction induced = make_action(quotient.algebra, kernel_alg.algebra, std::move(table));
  return KernelModule{std::move(ker), std::move(quotient), std::move(kernel_alg), std::move(induced)};
}

// ---------------------------------------------------------------------------

XModMorphism make_xmod_morphism(const CrossedModule& source, const CrossedModule& target,
                                const AlgebraMorphism& top_map, const AlgebraMorphism& base_map) {
  if (!(top_map.source() == source.top()) || !(top_map.target() == target.top()) ||
      !(base_map.source() == source.base()) || !(base_map.target() == target.base()))
    throw Error(ErrorKind::DimensionMismatch, source.label() + " -> " + target.label() + ": map shapes");
  for (std::size_t p = 0; p < source.top().dim(); ++p) {
    const Vector lhs = target.boundary().apply(top_map.matrix().column(p));
    const Vector rhs = base_map.apply(source.boundary().matrix().column(p));
    if (lhs != rhs) throw Error(ErrorKind::NotXModMorphism, "square fails", {0, p});
  }
  for (std::size_t i = 0; i < source.base().dim(); ++i)
    for (std::size_t p = 0; p < source.top().dim(); ++p) {
      const Vector lhs = top_map.apply(source.action().act_basis(i, p));
      const Vector rhs = target.action().act(base_map.matrix().column(i), top_map.matrix().column(p));
      if (lhs != rhs) throw Error(ErrorKind::NotXModMorphism, "action not preserved", {1, i, p});
    }
  return XModMorphism(std::make_shared<const CrossedModule>(source), std::make_shared<const CrossedModule>(target),
                      top_map, base_map);
}

XModMorphism identity_xmod_morphism(const CrossedModule& xm) {
  return make_xmod_morphism(xm, xm, identity_morphism(xm.top()), identity_morphism(xm.base()));
}

XModMorphism compose(const XModMorphism& g, const XModMorphism& f) {
  return make_xmod_morphism(f.source(), g.target(), compose(g.top_map(), f.top_map()),
                            compose(g.base_map(), f.base_map()));
}

MapConstraints top_map_constraints(const CrossedModule& source, const CrossedModule& target,
                                   const AlgebraMorphism& base_map) {
  if (!(base_map.source() == source.base()) || !(base_map.target() == target.base()))
    throw Error(ErrorKind::DimensionMismatch, "base map does not match " + source.label() + " -> " + target.label());
  MapConstraints constraints(source.top().field(), target.top().dim(), source.top().dim());
  constraints.add_left_product(target.boundary().matrix(), base_map.matrix() * source.boundary().matrix());
  for (std::size_t i = 0; i < source.base().dim(); ++i)
    constraints.add_intertwining(source.action().action_matrix(source.base().basis_element(i)),
                                 target.action().action_matrix(base_map.matrix().column(i)));
  return constraints;
}

bool search_xmod_morphisms(const CrossedModule& source, const CrossedModule& target, const AlgebraMorphism& base_map,
                           const std::optional<MapConstraints>& extra, const SearchOptions& options,
                           const std::function<bool(const XModMorphism&)>& visit) {
  MapConstraints constraints = top_map_constraints(source, target, base_map);
  if (extra) {
    if (extra->rows() != constraints.rows() || extra->cols() != constraints.cols())
      throw Error(ErrorKind::DimensionMismatch, "extra constraints shape");
    for (std::size_t e = 0; e < extra->equations().size(); ++e)
      constraints.add_equation(extra->equations()[e], extra->rhs()[e]);
  }
  bool completed = true;
  search_multiplicative_maps(source.top(), target.top(), constraints, options, [&](const Matrix& m) {
    XModMorphism morphism = make_xmod_morphism(source, target, make_morphism(source.top(), target.top(), m), base_map);
    if (!visit(morphism)) {
      completed = false;
      return false;
    }
    return true;
  });
  return completed;
}

std::vector<XModMorphism> enumerate_xmod_morphisms(const CrossedModule& source, const CrossedModule& target,
                                                   const std::optional<AlgebraMorphism>& fixed_base,
                                                   const SearchOptions& options) {
  std::vector<AlgebraMorphism> bases;
  if (fixed_base)
    bases.push_back(*fixed_base);
  else
    bases = enumerate_morphisms(source.base(), target.base(), {}, options);
  std::vector<XModMorphism> out;
  for (const auto& phi : bases)
    search_xmod_morphisms(source, target, phi, std::nullopt, options, [&](const XModMorphism& m) {
      out.push_back(m);
      return true;
    });
  return out;
}

}  // namespace xalg

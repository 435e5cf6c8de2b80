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

#ifndef XALG_BASECHANGE_HPP
#define XALG_BASECHANGE_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "xalg/xmod.hpp"

namespace xalg {

// ---------------------------------------------------------------------------
// Pullback along phi: S -> R

/// phi^*(C) = {(c, s) : phi(s) = d(c)} inside C x S, with d^*(c, s) = s and
/// s.(c, s') = (phi(s).c, s s').
struct PullbackResult {
  CrossedModule original;     // (C, R, d)
  AlgebraMorphism phi;        // S -> R
  CrossedModule xm;           // (phi^*(C), S, d^*)
  AlgebraMorphism phi_prime;  // phi^*(C) -> C, (c, s) |-> c
  Subspace fiber;             // phi^*(C) inside C x S
  Matrix witness;             // (dim C + dim S) x dim phi^*(C)
  XModMorphism square;        // (phi', phi)
};

PullbackResult pullback(const CrossedModule& xm, const AlgebraMorphism& phi);

struct MediatorReport {
  bool exists = false;  // the canonical candidate passed every check
  std::size_t count = 0;
  std::optional<XModMorphism> mediator;
  std::vector<std::string> failures;

  bool unique() const { return exists && count == 1; }
};

/// For a cone (f, phi): (B, S, mu) -> (C, R, d), builds f^*(x) = (f(x), mu(x))
/// and counts every crossed S-module map B -> phi^*(C) lifting f.
MediatorReport pullback_universal_check(const PullbackResult& result, const XModMorphism& cone,
                                        const SearchOptions& options = {});

/// (Ker phi -> S)
CrossedModule kernel_closed_form(const AlgebraMorphism& phi);
/// (phi^{-1}(I) -> S)
CrossedModule preimage_closed_form(const Ideal& ideal, const AlgebraMorphism& phi);
/// For a zero-boundary (M, R, 0): (M x Ker phi, S, (m, k) |-> k) with
/// s.(m, k) = (phi(s).m, s k).
CrossedModule zero_module_closed_form(const CrossedModule& module_xm, const AlgebraMorphism& phi);

// ---------------------------------------------------------------------------
// Induced crossed module along phi: S -> R

/// D (x)_S R realized as (D (x)_k R) / span{(s.d) (x) r - d (x) phi(s) r} with
/// product (d (x) r)(d' (x) r') = d d' (x) r r'. Ambient index of d_a (x) r_b is
/// a * dim R + b.
struct InducedResult {
  CrossedModule original;     // (D, S, d)
  AlgebraMorphism phi;        // S -> R
  CrossedModule xm;           // (phi_*(D), R, d_*)
  AlgebraMorphism phi_prime;  // d |-> d (x) 1
  Subspace relation_span;
  QuotientSpace quotient;
  XModMorphism square;        // (phi', phi)
};

/// Throws RNotUnital when R has no unit.
InducedResult induce_tensor(const CrossedModule& xm, const AlgebraMorphism& phi);

struct RelationCheck {
  bool additivity = true;        // structural: the ambient space is a tensor product
  bool balancing = false;        // (s.d) (x) r == d (x) phi(s) r
  bool product_relation = false; // (d1 (x) r1)(d2 (x) r2) == d2 (x) r1 phi(d d1) r2
  bool peiffer = false;          // d_*(x) . y == x y
  bool all() const { return additivity && balancing && product_relation && peiffer; }
};

/// Verifies the defining relations in the quotient on all basis triples.
RelationCheck check_induced_relations(const InducedResult& result);

/// For a cocone (f, phi): (D, S, d) -> (B, R, eta), builds
/// f_*(d (x) r) = r.f(d) and counts every crossed R-module map out of
/// phi_*(D) extending f.
MediatorReport induced_universal_check(const InducedResult& result, const XModMorphism& cocone,
                                       const SearchOptions& options = {});

struct EpiResult {
  CrossedModule xm;          // (D/KD, R, beta)
  Ideal kd;                  // KD inside D
  QuotientAlgebra quotient;  // D -> D/KD
  XModMorphism rho;          // (D, S, d) -> (D/KD, R, beta)
};

/// Closed form for surjective phi with kernel K: D/KD with
/// beta(d + KD) = phi(d(d)) and r.(d + KD) = s.d + KD for any s with phi(s) = r.
/// Throws NotSurjective.
EpiResult induce_epi(const CrossedModule& xm, const AlgebraMorphism& phi);

/// First (lexicographic) isomorphism a -> b of crossed modules over the same
/// base with identity base map, or nullopt after exhaustive search.
std::optional<XModMorphism> iso_search(const CrossedModule& a, const CrossedModule& b,
                                       const SearchOptions& options = {});

// ---------------------------------------------------------------------------
// Ideal inclusions D <= S <= R

struct SubCheck {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct ComparisonReport {
  bool isomorphic = false;
  std::optional<XModMorphism> witness;  // T -> phi_*(D)
  std::string obstruction;
  std::size_t t_dim = 0;
  std::size_t tensor_dim = 0;
};

struct IdealInclusionResult {
  CrossedModule d_xm;             // (D, S, inclusion)
  AlgebraMorphism phi;            // S -> R inclusion
  QuotientAlgebra r_mod_s;
  Ideal q;                        // realization of the augmentation ideal inside R/S
  std::string q_choice;
  std::size_t d_mod_d2_dim = 0;
  std::optional<CrossedModule> t; // D x (D/D^2 (x) Q), when it validates
  std::optional<XModMorphism> inclusion;  // (i, phi): d |-> (d, 0)
  InducedResult tensor;
  std::vector<SubCheck> checks;
  ComparisonReport comparison;

  bool all_checks_pass() const;
};

/// Builds T = D x (D/D^2 (x)_k Q) with zeta(d, u) = d and
///   r.(d, [t] (x) x) = (r d, [d] (x) pi(r) + [t] (x) r x - [x t] (x) pi(r)),
/// where pi: R/S -> Q projects onto Q. By default Q is the kernel of the
/// first augmentation eps: R/S -> F_p and pi(v) = v - eps(v) 1; without an
/// augmentation Q is the nilradical, and R/S itself when R/S has no unit.
/// `q_preimage` (an ideal of R containing S) overrides Q with its image; pi
/// is then the coordinate projection onto Q. Runs the gamma_r
/// sub-checks against phi_*(D) and T itself and compares T with phi_*(D).
/// Throws BudgetExceeded when the comparison search exceeds the budget.
IdealInclusionResult induce_ideal_inclusion(const Algebra& r, const Ideal& s, const Ideal& d,
                                            const std::optional<Ideal>& q_preimage = std::nullopt,
                                            const SearchOptions& options = {});

// ---------------------------------------------------------------------------
// Adjunction

struct AdjunctionReport {
  std::size_t induced_side = 0;   // |Hom_R(phi_*(D), C)|
  std::size_t pullback_side = 0;  // |Hom_S(D, phi^*(C))|
  bool transposition_bijective = false;
  bool inverse_round_trip = false;
  bool holds() const {
    return induced_side == pullback_side && transposition_bijective && inverse_round_trip;
  }
};

/// g |-> (d |-> (g(d (x) 1), d(d))) and back h |-> (d (x) r |-> r.h(d)_C),
/// both checked on the enumerated hom-sets.
AdjunctionReport adjunction_check(const AlgebraMorphism& phi, const CrossedModule& d, const CrossedModule& c,
                                  const SearchOptions& options = {});

}  // namespace xalg

#endif  // XALG_BASECHANGE_HPP

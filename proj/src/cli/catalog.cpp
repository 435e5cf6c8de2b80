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

#include "xalg/cli/catalog.hpp"

#include <chrono>

#include "catalog_data.hpp"
#include "sections.hpp"
#include "xalg/error.hpp"

namespace xalg::cli {

std::string_view builtin_definitions_text() { return detail::kBuiltinCatalog; }

DefinitionFile builtin_definitions() {
  return parse_definitions(std::string(builtin_definitions_text()), "catalog/t3.xalg");
}

namespace {

class Runner {
 public:
  Runner(const SearchOptions& options, bool timing, Report& report)
      : defs_(builtin_definitions()), options_(options), timing_(timing), report_(report) {}

  void run() {
    axioms();
    pullbacks();
    pullback_cones();
    induced();
    epimorphisms();
    adjunctions();
    koszul();
    ideal_inclusions();
    multipliers();
  }

 private:
  const CrossedModule& xm(const char* name) const { return defs_.xmod(name); }
  const AlgebraMorphism& mor(const char* name) const { return defs_.morphism(name); }
  const Algebra& alg(const char* name) const { return defs_.algebra(name); }
  const Ideal& ideal(const char* name) const { return defs_.ideal(name); }

  template <class Body>
  void entry(const std::string& id, const std::string& description, Body&& body) {
    Section& s = report_.section(id, description);
    const auto start = std::chrono::steady_clock::now();
    try {
      body(s);
    } catch (const Error& e) {
      if (e.kind() == ErrorKind::SearchTooLarge || e.kind() == ErrorKind::BudgetExceeded) throw;
      s.check("entry completes", false, e.what(), e.witness());
    }
    if (timing_)
      s.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  }

  static void dim_check(Section& s, const std::string& what, std::size_t got, std::size_t want) {
    s.check(what + " has dimension " + std::to_string(want), got == want, "got " + std::to_string(got));
  }

  void axioms() {
    for (const auto& [name, x] : defs_.xmods)
      entry("axioms/" + name, "Peiffer, equivariance, d(C) an ideal, d(C) trivial on ker d",
            [&](Section& s) { verify_section(s, x); });
  }

  void pullbacks() {
    entry("pullback/kernel", "kernels are pullbacks: (0 -> F2) along T3 -> T3/(x)", [&](Section& s) {
      auto res = pullback_section(s, xm("zero-into-F2"), mor("via-projection"), options_);
      dim_check(s, "top", res.xm.top().dim(), 2);
      iso_check(s, "isomorphic to ((x) -> T3)", res.xm, xm("t3-ideal-xmod"), options_);
    });
    entry("pullback/preimage", "preimages of ideals are pullbacks: ((x^2) -> T3) along id", [&](Section& s) {
      auto res = pullback_section(s, xm("t3-square-xmod"), mor("id-T3"), options_);
      dim_check(s, "top", res.xm.top().dim(), 1);
    });
    entry("pullback/preimage-unit", "((x) -> T3) along the unit map F2 -> T3: preimage of (x) is 0", [&](Section& s) {
      auto res = pullback_section(s, xm("t3-ideal-xmod"), mor("unit-inclusion"), options_);
      dim_check(s, "top", res.xm.top().dim(), 0);
    });
    entry("pullback/zero-module", "zero-boundary module F2 over F2 along T3 -> F2 gives M x Ker phi", [&](Section& s) {
      auto res = pullback_section(s, xm("module-F2"), mor("via-projection"), options_);
      dim_check(s, "top", res.xm.top().dim(), 3);
    });
    entry("pullback/zero-module-residue", "residue module of T3 along id gives M x 0", [&](Section& s) {
      auto res = pullback_section(s, xm("module-T3-residue"), mor("id-T3"), options_);
      dim_check(s, "top", res.xm.top().dim(), 1);
    });
    entry("pullback/identity", "pullback along the identity is the input", [&](Section& s) {
      auto res = pullback_section(s, xm("id-T3-xmod"), mor("id-T3"), options_);
      iso_check(s, "isomorphic to the input", res.xm, xm("id-T3-xmod"), options_);
    });
    entry("pullback/onto-whole", "(F2 = F2) along the onto map T3 -> F2: the fiber product", [&](Section& s) {
      auto res = pullback_section(s, xm("id-F2-xmod"), mor("via-projection"), options_);
      s.object("dim_R_x_S", alg("F2").dim() + alg("T3").dim());
      dim_check(s, "top (the fiber product, isomorphic to S)", res.xm.top().dim(), 3);
      iso_check(s, "isomorphic to (T3 = T3)", res.xm, xm("id-T3-xmod"), options_);
    });
  }

  void pullback_cones() {
    const AlgebraMorphism& proj = mor("via-projection");
    struct Cone {
      const char* name;
      const char* target;
      XModMorphism cone;
    };
    auto zero_top = [](const CrossedModule& a, const CrossedModule& b) { return zero_morphism(a.top(), b.top()); };
    const PullbackResult own = pullback(xm("zero-into-F2"), proj);
    std::vector<Cone> cones{
        {"the pullback square itself", "zero-into-F2", own.square},
        {"(0 -> T3) into (0 -> F2)", "zero-into-F2",
         make_xmod_morphism(xm("zero-into-T3"), xm("zero-into-F2"), zero_top(xm("zero-into-T3"), xm("zero-into-F2")),
                            proj)},
        {"((x) -> T3) into (0 -> F2)", "zero-into-F2",
         make_xmod_morphism(xm("t3-ideal-xmod"), xm("zero-into-F2"), zero_top(xm("t3-ideal-xmod"), xm("zero-into-F2")),
                            proj)},
        {"(T3 = T3) into (F2 = F2)", "id-F2-xmod", make_xmod_morphism(xm("id-T3-xmod"), xm("id-F2-xmod"), proj, proj)},
        {"((x) -> T3) into (F2 = F2)", "id-F2-xmod",
         make_xmod_morphism(xm("t3-ideal-xmod"), xm("id-F2-xmod"), zero_top(xm("t3-ideal-xmod"), xm("id-F2-xmod")),
                            proj)},
        {"residue module into F2 module", "module-F2",
         make_xmod_morphism(xm("module-T3-residue"), xm("module-F2"),
                            make_morphism(xm("module-T3-residue").top(), xm("module-F2").top(),
                                          Matrix::identity(proj.source().field(), 1)),
                            proj)},
    };
    for (const auto& c : cones)
      entry(std::string("pullback-universal/") + c.name, "unique mediator f* = (f, mu) into the pullback",
            [&](Section& s) {
              const PullbackResult res = pullback(xm(c.target), proj);
              const MediatorReport rep = pullback_universal_check(res, c.cone, options_);
              for (const auto& f : rep.failures) s.check("candidate f* = (f, mu)", false, f);
              s.check("f* = (f, mu) is a mediator", rep.exists);
              s.check("exactly one mediator", rep.count == 1, "count " + std::to_string(rep.count));
            });
  }

  void induced() {
    entry("induce/identity", "inducing along the identity of a unital algebra returns the input", [&](Section& s) {
      auto res = induce_section(s, xm("id-T3-xmod"), mor("id-T3"), options_);
      iso_check(s, "isomorphic to the input", res.xm, xm("id-T3-xmod"), options_);
    });
    entry("induce/unital-source", "(T3 = T3) along T3 -> F2: S unital gives S (x)_S R = R", [&](Section& s) {
      auto res = induce_section(s, xm("id-T3-xmod"), mor("via-projection"), options_);
      dim_check(s, "top", res.xm.top().dim(), 1);
      iso_check(s, "isomorphic to (F2 = F2)", res.xm, xm("id-F2-xmod"), options_);
    });
    entry("induce/module", "zero-boundary module along the injective unit map F2 -> T3", [&](Section& s) {
      auto res = induce_section(s, xm("module-F2"), mor("unit-inclusion"), options_);
      dim_check(s, "top", res.xm.top().dim(), 3);
    });
    entry("induce/ideal-quotient", "((x) -> T3) along T3 -> T3/(x) gives I/I^2", [&](Section& s) {
      auto res = induce_section(s, xm("t3-ideal-xmod"), mor("via-projection"), options_);
      dim_check(s, "top", res.xm.top().dim(), 1);
      s.check("top has zero multiplication", res.xm.top().has_zero_multiplication());
      const Ideal& i = ideal("x");
      dim_check(s, "I/I^2", i.dim() - product_ideal(i, i).dim(), 1);
    });
    entry("induce/multiplier", "(T3 = T3) along mu: T3 -> M(T3)", [&](Section& s) {
      const MultiplierAlgebra m = multiplier_algebra(alg("T3"));
      auto res = induce_section(s, xm("id-T3-xmod"), m.mu, options_);
      s.object("dim_M(T3)", m.algebra.dim());
      dim_check(s, "top", res.xm.top().dim(), m.algebra.dim());
    });
  }

  void epimorphisms() {
    struct Pair {
      const char* xmod;
      const char* phi;
      std::size_t dim;
      const char* note;
    };
    const std::vector<Pair> pairs{
        {"t3-ideal-xmod", "via-projection", 1, "KD = (x^2)"},
        {"id-T3-xmod", "via-projection", 1, "KD = (x)"},
        {"t3-square-xmod", "via-projection", 1, "K acts trivially, KD = 0"},
        {"module-T3-residue", "via-projection", 1, "K acts trivially, KD = 0"},
        {"t3-ideal-xmod", "id-T3", 2, "identity, KD = 0"},
    };
    for (const auto& p : pairs)
      entry(std::string("induce-epi/") + p.xmod + "/" + p.phi, std::string("D/KD against D (x)_S R; ") + p.note,
            [&](Section& s) {
              auto epi = epi_section(s, xm(p.xmod), mor(p.phi), options_);
              dim_check(s, "D/KD", epi.xm.top().dim(), p.dim);
            });
  }

  void adjunctions() {
    struct Triple {
      const char* phi;
      const char* d;
      const char* c;
      bool trivial;
    };
    const std::vector<Triple> triples{
        {"via-projection", "t3-ideal-xmod", "id-F2-xmod", false},
        {"via-projection", "t3-ideal-xmod", "module-F2", false},
        {"via-projection", "id-T3-xmod", "id-F2-xmod", false},
        {"via-projection", "zero-into-T3", "id-F2-xmod", true},
        {"id-T3", "t3-ideal-xmod", "t3-square-xmod", false},
        {"id-T3", "t3-square-xmod", "t3-ideal-xmod", false},
        {"unit-inclusion", "id-F2-xmod", "t3-ideal-xmod", false},
        {"unit-inclusion", "module-F2", "module-T3-residue", false},
        {"unit-inclusion", "module-F2", "zero-into-T3", true},
    };
    for (const auto& t : triples)
      entry(std::string("adjunction/") + t.phi + "/" + t.d + "/" + t.c, "Hom(phi_* D, C) against Hom(D, phi^* C)",
            [&](Section& s) {
              auto rep = adjunction_section(s, mor(t.phi), xm(t.d), xm(t.c), options_);
              if (t.trivial) s.check("zero top or boundary-free source: exactly one morphism", rep.induced_side == 1);
            });
  }

  void koszul() {
    const Algebra& t3 = alg("T3");
    const FunctionValues& f = defs_.function("koszul-f");
    entry("koszul/T3", "f = (x, x^2) on T3: R^n / d(Lambda^2 R^n)", [&](Section& s) {
      koszul_section(s, t3, f.values);
      dim_check(s, "im d", rank(koszul_differential(t3, f.values)), 2);
      auto pres = free_section(s, t3, f.values, f.generators, options_);
      dim_check(s, "C", pres.xm.top().dim(), 4);
    });
    const FreeXModPresentation pres = free_xmod(t3, f.values, f.generators);
    for (const char* target : {"free", "t3-ideal-xmod", "t3-ideal-general", "id-T3-xmod"})
      entry(std::string("koszul/universal/") + target, "every admissible w: Y -> C' with delta w = f", [&](Section& s) {
        const CrossedModule& c = std::string(target) == "free" ? pres.xm : xm(target);
        free_target_section(s, pres, c, std::nullopt, options_);
      });
    entry("koszul/rank-one", "f = (1): C is R", [&](Section& s) {
      auto p = free_section(s, t3, {*t3.unit()}, {"y"}, options_);
      dim_check(s, "Lambda^2", exterior_square(t3, 1).dim(), 0);
      iso_check(s, "isomorphic to (T3 = T3)", p.xm, xm("id-T3-xmod"), options_);
    });
    entry("koszul/zero", "f = (0, 0): C = R^2 with zero boundary and zero multiplication", [&](Section& s) {
      auto p = free_section(s, t3, {t3.zero(), t3.zero()}, {"y1", "y2"}, options_);
      dim_check(s, "C", p.xm.top().dim(), 6);
      s.check("boundary is zero", p.xm.boundary().matrix().is_zero());
      s.check("multiplication is zero", p.xm.top().has_zero_multiplication());
    });
    entry("koszul/empty", "no generators: the zero crossed module", [&](Section& s) {
      auto p = free_section(s, t3, {}, {}, options_);
      dim_check(s, "C", p.xm.top().dim(), 0);
    });
  }

  void ideal_inclusions() {
    struct Chain {
      const char* r;
      const char* s;
      const char* d;
      std::size_t t_dim;
    };
    const std::vector<Chain> chains{
        {"T3", "x2", "x2", 2}, {"T3", "x", "x2", 1}, {"T3", "x", "x", 2}, {"T3", "T3-all", "T3-all", 3},
        {"P", "P-S", "P-S", 5}, {"P", "P-S", "P-D", 2},
    };
    for (const auto& c : chains)
      entry(std::string("induce-ideal/") + c.r + "/" + c.s + "/" + c.d, "T = D x (D/D^2 (x) Q) against D (x)_S R",
            [&](Section& s) {
              auto res = ideal_section(s, alg(c.r), ideal(c.s), ideal(c.d), std::nullopt, options_);
              dim_check(s, "T", res.comparison.t_dim, c.t_dim);
            });
    entry("induce-ideal/T3/x/0", "D = 0 gives the zero crossed module on both sides", [&](Section& s) {
      auto res = ideal_section(s, alg("T3"), ideal("x"), zero_ideal(alg("T3")), std::nullopt, options_);
      dim_check(s, "T", res.comparison.t_dim, 0);
    });
  }

  void multipliers() {
    entry("multiplier/T3", "unital T3: M(T3) is T3 through mu", [&](Section& s) {
      multiplier_section(s, alg("T3"));
      const MultiplierAlgebra m = multiplier_algebra(alg("T3"));
      s.check("mu is bijective", m.mu.is_bijective());
    });
    entry("multiplier/F2", "M(F2)", [&](Section& s) {
      multiplier_section(s, alg("F2"));
    });
    entry("multiplier/N", "N = (x) has Ann(N) != 0 and N^2 != N: M(N) is rejected", [&](Section& s) {
      try {
        multiplier_algebra(alg("N"));
        s.check("hypothesis violation reported", false, "M(N) was built");
      } catch (const Error& e) {
        s.check("hypothesis violation reported", e.kind() == ErrorKind::HypothesisViolated, e.what());
      }
    });
  }

  DefinitionFile defs_;
  SearchOptions options_;
  bool timing_;
  Report& report_;
};

}  // namespace

void run_catalog(const SearchOptions& options, bool timing, Report& report) { Runner(options, timing, report).run(); }

}  // namespace xalg::cli

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

// Acceptance suite: one PASS/FAIL line per criterion, exit status 0 iff all
// criteria pass within their time limits.

#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "xalg/basechange.hpp"
#include "xalg/cli/catalog.hpp"
#include "xalg/error.hpp"
#include "xalg/koszul.hpp"

using namespace xalg;

namespace {

const cli::DefinitionFile& defs() {
  static const cli::DefinitionFile d = cli::builtin_definitions();
  return d;
}

const SearchOptions kBudget{std::uint64_t{1} << 24};

/// Collects failed expectations for one criterion.
class Criterion {
 public:
  void expect(bool ok, const std::string& what) {
    ++checks_;
    if (!ok) failures_.push_back(what);
  }
  std::size_t checks() const { return checks_; }
  const std::vector<std::string>& failures() const { return failures_; }

 private:
  std::size_t checks_ = 0;
  std::vector<std::string> failures_;
};

int failed = 0;

void run(int number, const std::string& title, double limit_s, const std::function<void(Criterion&)>& body) {
  Criterion c;
  const auto start = std::chrono::steady_clock::now();
  try {
    body(c);
  } catch (const std::exception& e) {
    c.expect(false, std::string("exception: ") + e.what());
  }
  const double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  c.expect(elapsed < limit_s, "time limit");
  const bool ok = c.failures().empty();
  if (!ok) ++failed;
  std::ostringstream line;
  line << "criterion " << number << ": " << (ok ? "PASS" : "FAIL") << "  " << title << "  (" << c.checks()
       << " checks, " << elapsed << " s, limit " << limit_s << " s)";
  std::cout << line.str() << '\n';
  for (const auto& f : c.failures()) std::cout << "    failed: " << f << '\n';
}

const CrossedModule& xm(const char* name) { return defs().xmod(name); }
const AlgebraMorphism& mor(const char* name) { return defs().morphism(name); }

void axiom_suite(Criterion& c) {
  for (const auto& [name, x] : defs().xmods) {
    bool basis_ok = true;
    try {
      validate_xmod(x.top(), x.base(), x.boundary(), x.action(), name);
    } catch (const Error&) {
      basis_ok = false;
    }
    c.expect(basis_ok, name + ": Peiffer and equivariance on basis pairs");
    const ExhaustiveCheck ex = check_xmod_exhaustive(x, 4096);
    const bool small = x.top().order() * x.base().order() <= 4096;
    c.expect(ex.performed == small, name + ": exhaustive check performed iff |C||R| <= 4096");
    c.expect(ex.passed, name + ": exhaustive Peiffer and equivariance");
  }
}

void lemma_suite(Criterion& c) {
  for (const auto& [name, x] : defs().xmods) {
    const Ideal image = boundary_image_is_ideal(x);
    const KernelModule k = kernel_module(x);
    const auto tops = [&] {
      std::vector<Vector> v;
      for_each_vector(x.top().field(), x.top().dim(), [&](const Vector& e) {
        v.push_back(e);
        return true;
      });
      return v;
    }();
    bool ideal_ok = true, trivial_ok = true;
    for (const auto& cc : tops) {
      const Vector dc = x.boundary().apply(cc);
      for_each_vector(x.base().field(), x.base().dim(), [&](const Vector& r) {
        ideal_ok = ideal_ok && image.contains(x.base().multiply(r, dc));
        return true;
      });
      for (const auto& kk : tops)
        if (k.kernel.contains(kk)) trivial_ok = trivial_ok && is_zero(x.action().act(dc, kk));
    }
    c.expect(ideal_ok, name + ": d(C) is an ideal (all elements)");
    c.expect(trivial_ok, name + ": d(C) acts trivially on ker d (all elements)");
  }
}

void pullback_closed_forms(Criterion& c) {
  const PullbackResult k = pullback(xm("zero-into-F2"), mor("via-projection"));
  c.expect(k.xm.top().dim() == 2, "kernel pullback has dimension 2");
  c.expect(iso_search(k.xm, xm("t3-ideal-xmod"), kBudget).has_value(), "kernel pullback isomorphic to ((x) -> T3)");
  c.expect(iso_search(k.xm, kernel_closed_form(mor("via-projection")), kBudget).has_value(),
           "kernel pullback isomorphic to the kernel closed form");
  for (const char* m : {"module-F2"}) {
    const PullbackResult z = pullback(xm(m), mor("via-projection"));
    const std::size_t want = xm(m).top().dim() + kernel_ideal(mor("via-projection")).dim();
    c.expect(z.xm.top().dim() == want, std::string(m) + ": pullback dimension is dim M + dim Ker phi");
    c.expect(iso_search(z.xm, zero_module_closed_form(xm(m), mor("via-projection")), kBudget).has_value(),
             std::string(m) + ": pullback isomorphic to M x Ker phi");
  }
  const PullbackResult zr = pullback(xm("module-T3-residue"), mor("id-T3"));
  c.expect(iso_search(zr.xm, zero_module_closed_form(xm("module-T3-residue"), mor("id-T3")), kBudget).has_value(),
           "residue module along id isomorphic to M x 0");
}

void pullback_universal(Criterion& c) {
  const AlgebraMorphism& proj = mor("via-projection");
  const PullbackResult to_zero = pullback(xm("zero-into-F2"), proj);
  const PullbackResult to_id = pullback(xm("id-F2-xmod"), proj);
  const PullbackResult to_module = pullback(xm("module-F2"), proj);
  auto zero_top = [](const CrossedModule& a, const CrossedModule& b) { return zero_morphism(a.top(), b.top()); };
  struct Cone {
    std::string name;
    const PullbackResult* res;
    XModMorphism cone;
  };
  const std::vector<Cone> cones{
      {"pullback square", &to_zero, to_zero.square},
      {"(0 -> T3)", &to_zero,
       make_xmod_morphism(xm("zero-into-T3"), xm("zero-into-F2"), zero_top(xm("zero-into-T3"), xm("zero-into-F2")),
                          proj)},
      {"((x) -> T3)", &to_zero,
       make_xmod_morphism(xm("t3-ideal-xmod"), xm("zero-into-F2"), zero_top(xm("t3-ideal-xmod"), xm("zero-into-F2")),
                          proj)},
      {"(T3 = T3)", &to_id, make_xmod_morphism(xm("id-T3-xmod"), xm("id-F2-xmod"), proj, proj)},
      {"residue module", &to_module,
       make_xmod_morphism(xm("module-T3-residue"), xm("module-F2"),
                          make_morphism(xm("module-T3-residue").top(), xm("module-F2").top(),
                                        Matrix::identity(proj.source().field(), 1)),
                          proj)},
  };
  c.expect(cones.size() >= 3, "at least three cones");
  for (const auto& cone : cones) {
    const MediatorReport rep = pullback_universal_check(*cone.res, cone.cone, kBudget);
    c.expect(rep.exists, cone.name + ": canonical mediator exists");
    c.expect(rep.count == 1, cone.name + ": mediator count is 1 (got " + std::to_string(rep.count) + ")");
  }
}

void induced_epi(Criterion& c) {
  const std::vector<std::pair<const char*, const char*>> pairs{
      {"t3-ideal-xmod", "via-projection"}, {"id-T3-xmod", "via-projection"}, {"t3-square-xmod", "via-projection"},
      {"module-T3-residue", "via-projection"}, {"t3-ideal-xmod", "id-T3"}};
  for (const auto& [x, phi] : pairs) {
    const InducedResult t = induce_tensor(xm(x), mor(phi));
    const EpiResult e = induce_epi(xm(x), mor(phi));
    c.expect(iso_search(e.xm, t.xm, kBudget).has_value(), std::string(x) + " along " + phi + ": D/KD iso to tensor");
  }
  const InducedResult t = induce_tensor(xm("t3-ideal-xmod"), mor("via-projection"));
  const Ideal& i = defs().ideal("x");
  c.expect(t.xm.top().dim() == 1, "(x) along T3 -> F2 has dimension 1");
  c.expect(t.xm.top().dim() == i.dim() - product_ideal(i, i).dim(), "dimension equals dim I/I^2");
  c.expect(t.xm.top().has_zero_multiplication(), "I/I^2 has zero multiplication");
}

void adjunction(Criterion& c) {
  struct Triple {
    const char* phi;
    const char* d;
    const char* c;
  };
  const std::vector<Triple> triples{{"via-projection", "t3-ideal-xmod", "id-F2-xmod"},
                                    {"via-projection", "t3-ideal-xmod", "module-F2"},
                                    {"via-projection", "id-T3-xmod", "id-F2-xmod"},
                                    {"id-T3", "t3-ideal-xmod", "t3-square-xmod"},
                                    {"unit-inclusion", "id-F2-xmod", "t3-ideal-xmod"},
                                    {"unit-inclusion", "module-F2", "module-T3-residue"}};
  for (const auto& t : triples) {
    const AdjunctionReport r = adjunction_check(mor(t.phi), xm(t.d), xm(t.c), kBudget);
    const std::string name = std::string(t.phi) + "/" + t.d + "/" + t.c;
    c.expect(r.induced_side == r.pullback_side, name + ": equal cardinalities");
    c.expect(r.transposition_bijective && r.inverse_round_trip, name + ": explicit bijection verified");
  }
}

void koszul(Criterion& c) {
  const Algebra& t3 = defs().algebra("T3");
  const std::vector<Vector>& f = defs().function("koszul-f").values;
  const Matrix d = koszul_differential(t3, f);
  c.expect(rank(d) == 2, "dim im d = 2");
  const FreeXModPresentation pres = free_xmod(t3, f);
  c.expect(pres.xm.top().dim() == 4, "dim C = 4");
  bool theta_ok = true;
  for (std::size_t col = 0; col < d.cols(); ++col) {
    Vector total = t3.zero();
    for (std::size_t i = 0; i < f.size(); ++i) {
      Vector slot(t3.dim());
      for (std::size_t b = 0; b < t3.dim(); ++b) slot[b] = d(i * t3.dim() + b, col);
      total = t3.field().add(total, t3.multiply(slot, f[i]));
    }
    theta_ok = theta_ok && is_zero(total);
  }
  c.expect(theta_ok, "theta-hat after d is zero");

  std::size_t admissible = 0;
  std::vector<const CrossedModule*> targets{&pres.xm};
  for (const auto& [name, x] : defs().xmods)
    if (x.base() == t3) targets.push_back(&x);
  for (const CrossedModule* target : targets) {
    // Preimages of each f_i under the target boundary.
    std::vector<std::vector<Vector>> choices(f.size());
    for_each_vector(t3.field(), target->top().dim(), [&](const Vector& v) {
      const Vector dv = target->boundary().apply(v);
      for (std::size_t i = 0; i < f.size(); ++i)
        if (dv == f[i]) choices[i].push_back(v);
      return true;
    });
    std::vector<std::size_t> idx(f.size(), 0);
    bool empty = false;
    for (const auto& ch : choices) empty = empty || ch.empty();
    while (!empty) {
      std::vector<Vector> w;
      for (std::size_t i = 0; i < f.size(); ++i) w.push_back(choices[i][idx[i]]);
      const MediatorReport r = free_universal_check(pres, *target, w, kBudget);
      ++admissible;
      c.expect(r.exists && r.count == 1, target->label() + ": unique mediator for an admissible w");
      std::size_t k = 0;
      while (k < idx.size() && ++idx[k] == choices[k].size()) idx[k++] = 0;
      if (k == idx.size()) break;
    }
  }
  c.expect(admissible >= 3, "at least three admissible w enumerated (got " + std::to_string(admissible) + ")");
}

std::string serialize(const IdealInclusionResult& r) {
  std::ostringstream out;
  out << r.q_choice << '|' << r.q.dim() << '|' << r.comparison.t_dim << '|' << r.comparison.tensor_dim << '|'
      << r.comparison.isomorphic << '|' << r.comparison.obstruction << '|';
  for (const auto& ch : r.checks) out << ch.name << '=' << ch.passed << ':' << ch.detail << ';';
  if (r.comparison.witness) {
    const Matrix& m = r.comparison.witness->top_map().matrix();
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t j = 0; j < m.cols(); ++j) out << m(i, j);
  }
  return out.str();
}

void ideal_inclusion(Criterion& c) {
  struct Chain {
    const char* r;
    const char* s;
    const char* d;
  };
  const std::vector<Chain> chains{{"T3", "x", "x2"}, {"T3", "x", "x"}, {"T3", "x2", "x2"},
                                  {"T3", "T3-all", "T3-all"}, {"P", "P-S", "P-S"}, {"P", "P-S", "P-D"}};
  for (const auto& ch : chains) {
    const std::string name = std::string(ch.r) + "/" + ch.s + "/" + ch.d;
    const auto& r = defs().algebra(ch.r);
    const IdealInclusionResult a = induce_ideal_inclusion(r, defs().ideal(ch.s), defs().ideal(ch.d), std::nullopt,
                                                          kBudget);
    const IdealInclusionResult b = induce_ideal_inclusion(r, defs().ideal(ch.s), defs().ideal(ch.d), std::nullopt,
                                                          kBudget);
    c.expect(a.t.has_value(), name + ": T validates as a crossed module");
    std::size_t gamma = 0;
    for (const auto& sub : a.checks) {
      c.expect(sub.passed, name + ": " + sub.name + " " + sub.detail);
      if (sub.name.find("gamma") != std::string::npos) ++gamma;
    }
    c.expect(gamma >= 4, name + ": gamma checks present");
    c.expect(a.comparison.witness.has_value() || !a.comparison.obstruction.empty(),
             name + ": comparison states a witness or an obstruction");
    c.expect(a.comparison.isomorphic, name + ": T isomorphic to the tensor construction");
    c.expect(serialize(a) == serialize(b), name + ": deterministic output");
  }
}

std::string capture(const std::string& command, int& status) {
  std::string out;
  FILE* pipe = popen(command.c_str(), "r");
  if (!pipe) {
    status = -1;
    return out;
  }
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
  status = pclose(pipe);
  return out;
}

void determinism(Criterion& c) {
  const std::string cmd = std::string("\"") + XALG_BINARY + "\" catalog --format json";
  int s1 = 0, s2 = 0;
  const std::string a = capture(cmd, s1);
  const std::string b = capture(cmd, s2);
  c.expect(s1 == 0 && s2 == 0, "both runs exit 0");
  c.expect(!a.empty(), "report is non-empty");
  c.expect(a == b, "byte-identical reports");
}

}  // namespace

int main() {
  run(1, "axiom suite on every bundled crossed module", 1.0, axiom_suite);
  run(2, "d(C) is an ideal and acts trivially on ker d", 1.0, lemma_suite);
  run(3, "pullback closed forms", 5.0, pullback_closed_forms);
  run(4, "pullback universal property", 60.0, pullback_universal);
  run(5, "induced epimorphism against the tensor construction", 30.0, induced_epi);
  run(6, "adjunction cardinalities with explicit bijection", 120.0, adjunction);
  run(7, "Koszul presentation and free universal property", 30.0, koszul);
  run(8, "ideal-inclusion pipeline", 60.0, ideal_inclusion);
  run(9, "catalog JSON reports are byte-identical", 60.0, determinism);
  std::cout << (failed == 0 ? "acceptance: PASS" : "acceptance: FAIL") << '\n';
  return failed == 0 ? 0 : 1;
}

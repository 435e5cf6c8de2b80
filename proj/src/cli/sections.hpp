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

// Report builders shared by the subcommands and the catalog.

#ifndef XALG_CLI_SECTIONS_HPP
#define XALG_CLI_SECTIONS_HPP

#include <optional>
#include <string>
#include <vector>

#include "xalg/cli/report.hpp"
#include "xalg/koszul.hpp"

namespace xalg::cli {

void iso_check(Section& s, const std::string& name, const CrossedModule& a, const CrossedModule& b,
               const SearchOptions& options);

void verify_section(Section& s, const CrossedModule& xm);
PullbackResult pullback_section(Section& s, const CrossedModule& xm, const AlgebraMorphism& phi,
                                const SearchOptions& options);
InducedResult induce_section(Section& s, const CrossedModule& xm, const AlgebraMorphism& phi,
                             const SearchOptions& options);
EpiResult epi_section(Section& s, const CrossedModule& xm, const AlgebraMorphism& phi, const SearchOptions& options);
IdealInclusionResult ideal_section(Section& s, const Algebra& r, const Ideal& big, const Ideal& small,
                                   const std::optional<Ideal>& q_preimage, const SearchOptions& options);
AdjunctionReport adjunction_section(Section& s, const AlgebraMorphism& phi, const CrossedModule& d,
                                    const CrossedModule& c, const SearchOptions& options);
FreeXModPresentation free_section(Section& s, const Algebra& r, const std::vector<Vector>& f,
                                  const std::vector<std::string>& names, const SearchOptions& options);
/// With `w` the one given map is checked; without it every admissible w
/// (delta w = f) is enumerated and each must have exactly one mediator.
void free_target_section(Section& s, const FreeXModPresentation& pres, const CrossedModule& target,
                         const std::optional<std::vector<Vector>>& w, const SearchOptions& options);
IsoReport koszul_section(Section& s, const Algebra& r, const std::vector<Vector>& f);
void multiplier_section(Section& s, const Algebra& r);

}  // namespace xalg::cli

#endif  // XALG_CLI_SECTIONS_HPP

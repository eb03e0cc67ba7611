// Copyright 2026 The profpres Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef PROFPRES_BRIDGE_HPP
#define PROFPRES_BRIDGE_HPP

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "profpres/presentations.hpp"

namespace profpres {

// Pro symbol standing for generator gen of P(c).
std::string bar_name(const CurriedPresentation& P, const std::string& c,
                     const std::string& gen);
CrossPath overline(const CurriedPresentation& P, const std::string& c,
                   const Term& t);

UncurriedPresentation uncurry(const CurriedPresentation& P);
UncurriedMorphism uncurry_morphism(const CurriedMorphism& F);

// f.p for every left symbol f and pro p it composes with.
std::vector<CrossPath> short_left_cross_paths(const UncurriedPresentation& u);
// Right cross-paths out of c with at most max_len symbols, in shortlex order
// of the collage.
std::vector<CrossPath> right_cross_paths(const UncurriedPresentation& u,
                                         const std::string& c, int max_len);

enum class CheckStatus { Holds, FailsWithWitness, Inconclusive };
const char* to_string(CheckStatus s);

struct CheckOutcome {
  CheckStatus status = CheckStatus::Holds;
  // Holds for every enumerated case with exact provers on both sides.
  bool certified = false;
  std::vector<std::pair<CrossPath, CrossPath>> witnesses;
  std::vector<CrossPath> missing;
  // Non-strict nongenerativity: the right cross-path chosen for each f.p.
  std::vector<std::pair<CrossPath, CrossPath>> chosen;
  std::string note;
  int budget_used = 0;
};

CheckOutcome check_nongenerative(const UncurriedPresentation& q,
                                 const Budget& b, bool strict);
CheckOutcome check_conservative(const UncurriedPresentation& q,
                                const Budget& b);

CurriedPresentation curry(const UncurriedPresentation& q, const Budget& b);

// curry(uncurry(P)) with the renaming isomorphism and its inverse.
struct RoundTrip {
  CurriedPresentation curried;
  CurriedMorphism to;    // P -> curry(uncurry(P))
  CurriedMorphism from;  // curry(uncurry(P)) -> P
};
RoundTrip curry_round_trip(const CurriedPresentation& P, const Budget& b);

}  // namespace profpres

#endif  // PROFPRES_BRIDGE_HPP

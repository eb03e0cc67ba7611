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

#ifndef PROFPRES_COMPOSE_HPP
#define PROFPRES_COMPOSE_HPP

#include <string>
#include <vector>

#include "profpres/presentations.hpp"

namespace profpres {

// Generator name of the pair p (x) q.
std::string tensor_name(const std::string& p, const std::string& q);

// s (x) t as a term (p*q).h of (P*Q)(c). s is a term of P(c), t a term of
// Q(type of s).
Term tensor(const CurriedPresentation& P, const CurriedPresentation& Q,
            const std::string& c, const Term& s, const Term& t);

CurriedPresentation compose_curried(const CurriedPresentation& P,
                                    const CurriedPresentation& Q);

// phi * psi : P*Q -> P'*Q'. Needs phi.f1 == psi.f0.
CurriedMorphism compose_curried_morphisms(const CurriedMorphism& phi,
                                          const CurriedMorphism& psi);

CurriedPresentation unit_presentation(const CatPresentation& c);
std::string unit_generator(const std::string& sort);

struct CoherenceCell {
  CurriedMorphism cell;
  CurriedMorphism inverse;
};

// U(C)*P -> P
CoherenceCell left_unitor(const CurriedPresentation& P);
// P*U(D) -> P
CoherenceCell right_unitor(const CurriedPresentation& P);
// (P*Q)*R -> P*(Q*R)
CoherenceCell associator(const CurriedPresentation& P,
                         const CurriedPresentation& Q,
                         const CurriedPresentation& R);

enum class CellKind { Associator, LeftUnitor, RightUnitor };
CoherenceCell coherence_cell(CellKind kind,
                             const std::vector<CurriedPresentation>& args);

// Both sides of the pentagon for P, Q, R, S and of the triangle for P, Q,
// compared generator-wise.
ValidationReport check_pentagon(const CurriedPresentation& P,
                                const CurriedPresentation& Q,
                                const CurriedPresentation& R,
                                const CurriedPresentation& S, const Budget& b);
ValidationReport check_triangle(const CurriedPresentation& P,
                                const CurriedPresentation& Q, const Budget& b);

}  // namespace profpres

#endif  // PROFPRES_COMPOSE_HPP

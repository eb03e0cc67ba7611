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

#ifndef PROFPRES_SEMANTICS_HPP
#define PROFPRES_SEMANTICS_HPP

#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "profpres/presentations.hpp"

namespace profpres {

// Depth k bounds the number of category symbols in a representative; the
// profunctor symbol of a cross-path is free. -1 in any table slot means
// "not composable" or "outside the bound".

struct Morph {
  std::string src;
  std::string tgt;
  Path rep;
};

struct FiniteCategoryTable {
  std::vector<std::string> objects;
  std::vector<Morph> morphs;
  std::map<std::string, int> identity;
  std::vector<std::vector<int>> compose;  // compose[a][b] is a then b
  bool stabilized = false;
  int depth = 0;
  // Class of any path, -1 when outside the table.
  std::function<int(const Path&)> locate;

  int find(const Path& p) const;
  std::vector<int> hom(const std::string& a, const std::string& b) const;
};

FiniteCategoryTable saturate_theory(const Theory& t, const Budget& b, int depth);

struct Elem {
  std::string c;
  std::string d;
  std::string label;
  CrossPath rep;
  int weight = 0;
  // Coend tables: the pairs in the class, representative first.
  std::vector<std::pair<int, int>> pairs;
};

struct ProfunctorTable {
  FiniteCategoryTable left;
  FiniteCategoryTable right;
  std::vector<Elem> elems;
  std::vector<std::vector<int>> lact;  // lact[m][e] = m . e
  std::vector<std::vector<int>> ract;  // ract[e][m] = e . m
  bool stabilized = false;
  int depth = 0;
  // Element of a cross-path (a term is a cross-path with identity left
  // part), -1 when outside the table. Empty for coend tables.
  std::function<int(const CrossPath&)> locate;

  std::vector<int> at(const std::string& c, const std::string& d) const;
  int find(const CrossPath& c) const { return locate ? locate(c) : -1; }
};

ProfunctorTable profunctor_table(const UncurriedPresentation& p,
                                 const Budget& b, int depth);
ProfunctorTable profunctor_table(const CurriedPresentation& p, const Budget& b,
                                 int depth);
// The hom profunctor of a category table.
ProfunctorTable hom_table(const FiniteCategoryTable& c);

// Pairs over shared middle objects modulo sliding middle morphisms. Unless
// both inputs are stabilized only pairs of total weight <= bound are used;
// bound < 0 means the smaller input depth.
ProfunctorTable coend_compose(const ProfunctorTable& tp,
                              const ProfunctorTable& tq, int bound = -1);

enum class IsoStatus { Iso, NotIso, Inconclusive };
const char* to_string(IsoStatus s);

struct IsoReport {
  IsoStatus status = IsoStatus::Inconclusive;
  // False when Iso only holds on bounded tables.
  bool exact = false;
  std::vector<int> map;
  std::string witness;
  int checked = 0;
};

IsoReport find_table_iso(const ProfunctorTable& a, const ProfunctorTable& b);

// Checks that f (element of a to element of b, -1 unknown) is a bijection
// commuting with both actions. With core >= 0 and unstabilized tables only
// elements of weight <= core are required to be mapped and hit.
IsoReport check_map_iso(const ProfunctorTable& a, const ProfunctorTable& b,
                        const std::vector<int>& f, int core = -1);

// <[s],[t]> |-> [s (x) t] from the coend of the tables of P and Q to the
// table of P*Q.
IsoReport check_mu_iso(const CurriedPresentation& P,
                       const CurriedPresentation& Q, const Budget& b,
                       int depth = 3);

// Naturality of mu along globular phi : P -> P' and psi : Q -> Q': for every
// pair of elements, (phi*psi)(s (x) t) and phi(s) (x) psi(t) land in the same
// element of the table of P'*Q'. Status Iso means every square commutes.
IsoReport check_mu_naturality(const CurriedMorphism& phi,
                              const CurriedMorphism& psi, const Budget& b,
                              int depth = 3);

// x_c.h |-> [h] from the table of U(C) to the hom profunctor of C.
IsoReport check_unit_iso(const CatPresentation& c, const Budget& b,
                         int depth = 3);

// s |-> overline(s) from the table of P to the table of its uncurrying.
IsoReport check_uncurry_iso(const CurriedPresentation& P, const Budget& b,
                            int depth = 3);

// Associativity and unit laws as table lookups; action compatibility.
std::vector<std::string> table_law_violations(const FiniteCategoryTable& t);
std::vector<std::string> table_law_violations(const ProfunctorTable& t);

std::string table_json(const FiniteCategoryTable& t);
std::string table_json(const ProfunctorTable& t);

}  // namespace profpres

#endif  // PROFPRES_SEMANTICS_HPP

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

#ifndef PROFPRES_PRESENTATIONS_HPP
#define PROFPRES_PRESENTATIONS_HPP

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "profpres/core.hpp"
#include "profpres/prover.hpp"

namespace profpres {

// left . pro . right, with left a path of the left category ending at the
// source of pro and right a path of the right category.
struct CrossPath {
  Path left;
  std::string pro;
  Path right;

  const std::string& src() const { return left.src; }
  const std::string& tgt() const { return right.tgt; }
  bool is_right() const { return left.is_identity(); }
  bool operator==(const CrossPath&) const = default;
  auto operator<=>(const CrossPath&) const = default;
};

struct CrossEquation {
  CrossPath lhs;
  CrossPath rhs;
  bool operator==(const CrossEquation&) const = default;
};

struct UncurriedPresentation {
  std::string name;
  CatPresentation left;
  CatPresentation right;
  std::vector<FunSym> pros;
  std::vector<CrossEquation> eqs;

  const FunSym* find_pro(const std::string& p) const;
  bool operator==(const UncurriedPresentation&) const = default;
};

struct Generator {
  std::string name;
  std::string sort;
  bool operator==(const Generator&) const = default;
};

// gen . path; every term splits this way uniquely.
struct Term {
  std::string gen;
  Path path;

  const std::string& type() const { return path.tgt; }
  bool operator==(const Term&) const = default;
  auto operator<=>(const Term&) const = default;
};

struct TermEquation {
  Term lhs;
  Term rhs;
  bool operator==(const TermEquation&) const = default;
};

struct InstancePresentation {
  std::string name;
  CatPresentation base;
  std::vector<Generator> gens;
  std::vector<TermEquation> eqs;

  const Generator* find_gen(const std::string& g) const;
  bool operator==(const InstancePresentation&) const = default;
};

using GenMap = std::map<std::string, Term>;

struct InstanceMorphism {
  std::string name;
  InstancePresentation source;
  InstancePresentation target;
  CatMorphism base;
  GenMap gen_map;
  bool operator==(const InstanceMorphism&) const = default;
};

struct CurriedPresentation {
  std::string name;
  CatPresentation left;
  CatPresentation right;
  std::map<std::string, InstancePresentation> at;
  // f : c -> c' sends generators of at(c') to terms of at(c).
  std::map<std::string, GenMap> act;
  bool operator==(const CurriedPresentation&) const = default;
};

struct CurriedMorphism {
  std::string name;
  CurriedPresentation source;
  CurriedPresentation target;
  CatMorphism f0;
  CatMorphism f1;
  std::map<std::string, GenMap> components;

  bool globular() const;
  bool operator==(const CurriedMorphism&) const = default;
};

struct UncurriedMorphism {
  std::string name;
  UncurriedPresentation source;
  UncurriedPresentation target;
  std::map<std::string, CrossPath> pro_map;
  bool operator==(const UncurriedMorphism&) const = default;
};

std::string to_string(const CrossPath& p);
std::string to_string(const Term& t);

Term extend(const Term& t, const Path& p);
CrossPath extend(const CrossPath& c, const Path& p);
CrossPath prepend(const Path& p, const CrossPath& c);

// Structural checks (typing, names); no prover involved.
std::vector<Diagnostic> validate_structure(const InstancePresentation& i);
std::vector<Diagnostic> validate_structure(const UncurriedPresentation& u);
std::vector<Diagnostic> validate_structure(const CurriedPresentation& p);
bool term_in(const InstancePresentation& i, const Term& t);
bool cross_in(const UncurriedPresentation& u, const CrossPath& c);

// The collage theory with maps between original and collage names.
struct Collage {
  Theory theory;
  std::map<std::string, std::string> left_fun, right_fun, right_sort;
  std::map<std::string, std::string> left_fun_inv, right_fun_inv,
      right_sort_inv;
  std::vector<std::string> left_sorts, right_sorts;  // collage names

  Path from_left(const Path& p) const;
  Path from_right(const Path& p) const;
  Path from_cross(const CrossPath& c) const;
  bool is_cross(const Path& p) const;
  CrossPath to_cross(const Path& p) const;
  Path to_left(const Path& p) const;
  Path to_right(const Path& p) const;
};

Collage build_collage(const UncurriedPresentation& u);

// Instances as uncurried presentations out of the terminal presentation.
CatPresentation terminal_presentation();
UncurriedPresentation as_uncurried(const InstancePresentation& i);
Path term_to_path(const Collage& c, const Term& t);
Term path_to_term(const Collage& c, const Path& p);

InstancePresentation fiber_instance(const UncurriedPresentation& u,
                                    const std::string& c);

// Provability inside one instance presentation.
class InstanceProver {
 public:
  InstanceProver(const InstancePresentation& i, const Budget& b);
  ProofOutcome prove(const Term& s, const Term& t) const;
  std::optional<Term> normal_form(const Term& t) const;
  const Collage& collage() const { return collage_; }
  const Prover& prover() const { return prover_; }
  const InstancePresentation& instance() const { return inst_; }

 private:
  InstancePresentation inst_;
  Collage collage_;
  Prover prover_;
};

Term apply(const GenMap& m, const CatMorphism* base, const Term& t);
CrossPath apply(const UncurriedMorphism& f, const CrossPath& c);
InstanceMorphism action(const CurriedPresentation& p, const std::string& f);
// P(path) applied to a term of P(tgt(path)).
Term act_path(const CurriedPresentation& p, const Path& path, const Term& t);
InstanceMorphism component(const CurriedMorphism& m, const std::string& c);

enum class Validity { Valid, Invalid, Inconclusive };
const char* to_string(Validity v);

struct ReportItem {
  std::string what;
  std::string lhs;
  std::string rhs;
  ProofOutcome outcome;
};

struct ValidationReport {
  Validity status = Validity::Valid;
  std::vector<Diagnostic> structural;
  std::vector<ReportItem> items;

  void add(ReportItem item);
  void merge(const ValidationReport& other, const std::string& prefix);
  void finish();
};

ValidationReport validate_morphism(const CatMorphism& f, const Budget& b);
ValidationReport validate_morphism(const InstanceMorphism& f, const Budget& b);
ValidationReport validate_morphism(const UncurriedMorphism& f, const Budget& b);
ValidationReport validate_curried(const CurriedPresentation& p,
                                  const Budget& b);
ValidationReport validate_curried_morphism(const CurriedMorphism& m,
                                           const Budget& b);

// Names every instance of p as p.name + "@" + sort.
void canonicalize_names(CurriedPresentation& p);

CurriedMorphism identity_curried_morphism(const CurriedPresentation& p);
// m then n.
CurriedMorphism compose_curried_morphism_chain(const CurriedMorphism& m,
                                               const CurriedMorphism& n);
// Generator-wise provable equality of parallel curried morphisms.
ValidationReport curried_morphisms_equal(const CurriedMorphism& a,
                                         const CurriedMorphism& b,
                                         const Budget& budget);

}  // namespace profpres

#endif  // PROFPRES_PRESENTATIONS_HPP

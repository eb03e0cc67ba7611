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

#ifndef PROFPRES_PROVER_HPP
#define PROFPRES_PROVER_HPP

#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "profpres/core.hpp"

namespace profpres {

enum class Part { Left, Pro, Right };

struct Theory {
  CatPresentation pres;
  std::vector<Part> fun_part;   // parallel to pres.funs
  std::vector<Part> sort_part;  // parallel to pres.sorts

  static Theory of(const CatPresentation& c);
  Part part_of(const std::string& fun) const;
  bool operator==(const Theory&) const = default;
};

struct Budget {
  int max_len = 8;
  int rounds = 16;
  int kb_steps = 500;
};

// One rewrite with an equation inside a context:
//   before = u . side_a . v,  after = u . side_b . v
struct RewriteStep {
  Path before;
  Path after;
  size_t eq_index = 0;
  bool forward = true;  // lhs -> rhs
  size_t pos = 0;
};

struct Derivation {
  Path from;
  Path to;
  std::vector<RewriteStep> steps;
};

enum class ProofStatus { Proved, NotProvedWithinBudget, Decided };

struct ProofOutcome {
  ProofStatus status = ProofStatus::NotProvedWithinBudget;
  bool equal = false;  // meaningful for Decided
  std::optional<int> depth;
  int budget_used = 0;
  std::optional<Derivation> witness;

  bool holds() const {
    return status == ProofStatus::Proved ||
           (status == ProofStatus::Decided && equal);
  }
  bool refuted() const { return status == ProofStatus::Decided && !equal; }
};

std::string to_string(const ProofOutcome& o);

struct Rule {
  Path lhs;
  Path rhs;
};

struct RewriteSystem {
  std::vector<Rule> rules;
  std::vector<std::string> order;  // symbol order of the shortlex
  int critical_pairs_joined = 0;
  int steps_used = 0;
};

// Term order: number of left-frame symbols, then shortlex under the
// theory's symbol order; -1, 0, 1.
int shortlex_compare(const Theory& t, const Path& a, const Path& b);

std::optional<RewriteSystem> complete_rewrite_system(const Theory& t,
                                                     const Budget& b);
Path normalize(const RewriteSystem& rs, const Path& p);

// Replays each step of a derivation against the theory's equations.
bool check_derivation(const Theory& t, const Derivation& d);

// Bounded congruence closure over paths of length <= max_len.
class Closure {
 public:
  Closure(const Theory& t, const Budget& b);

  // Class id of p, or -1 if p lies outside the universe.
  int class_of(const Path& p) const;
  std::vector<Path> members(const Path& p) const;
  std::optional<Derivation> derive(const Path& p, const Path& q) const;
  int effective_len() const { return effective_len_; }
  size_t universe_size() const { return words_.size(); }
  int rounds_used() const { return rounds_used_; }

 private:
  struct Edge {
    int to;
    int kind;  // 0 rewrite, 1 post-composition, 2 pre-composition
    size_t eq_index;
    bool forward;
    size_t pos;
    int sub_a, sub_b;  // for congruence edges
    int sym;
  };
  int find(int x) const;
  bool unite(int a, int b, Edge ab, Edge ba);
  int lookup(int sort, const std::vector<int>& w) const;
  std::vector<RewriteStep> expand(int a, int b) const;
  Path to_path(int id) const;

  const Theory* theory_;
  int effective_len_ = 0;
  int rounds_used_ = 0;
  std::vector<int> sym_src_, sym_tgt_;
  std::vector<std::pair<int, std::vector<int>>> words_;
  std::unordered_map<std::string, int> index_;
  mutable std::vector<int> parent_;
  std::vector<std::vector<Edge>> adj_;
};

class Prover {
 public:
  Prover(Theory t, Budget b, bool use_completion = true);

  ProofOutcome prove(const Path& p, const Path& q) const;
  const Theory& theory() const { return theory_; }
  const Budget& budget() const { return budget_; }
  const std::optional<RewriteSystem>& completion() const;
  const Closure& closure() const;
  // Normal form when completion succeeded.
  std::optional<Path> normal_form(const Path& p) const;

 private:
  Theory theory_;
  Budget budget_;
  bool use_completion_;
  mutable bool completion_done_ = false;
  mutable std::optional<RewriteSystem> completion_;
  mutable std::unique_ptr<Closure> closure_;
};

ProofOutcome prove_path_eq(const Theory& t, const Path& p, const Path& q,
                           const Budget& b);

// Checks that the sort maps agree and that every symbol image is provably
// equal in the shared target.
ProofOutcome morphisms_equal(const CatMorphism& f, const CatMorphism& g,
                             const Budget& b);

}  // namespace profpres

#endif  // PROFPRES_PROVER_HPP

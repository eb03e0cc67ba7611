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

#include "profpres/bridge.hpp"

#include <algorithm>
#include <set>

namespace profpres {
namespace {

using Naming = std::map<std::pair<std::string, std::string>, std::string>;

// Generators keep their names unless that clashes with a frame symbol or a
// generator of another sort.
Naming naming(const CurriedPresentation& P) {
  std::set<std::string> taken;
  for (const auto& f : P.left.funs) taken.insert(f.name);
  for (const auto& f : P.right.funs) taken.insert(f.name);
  Naming out;
  for (const auto& c : P.left.sorts) {
    auto it = P.at.find(c);
    if (it == P.at.end()) continue;
    for (const auto& g : it->second.gens) {
      std::string n = g.name;
      if (taken.count(n)) n = g.name + "_" + c;
      while (taken.count(n)) n += "'";
      taken.insert(n);
      out[{c, g.name}] = n;
    }
  }
  return out;
}

CrossPath bar(const Naming& names, const CurriedPresentation& P,
              const std::string& c, const Term& t) {
  auto it = names.find({c, t.gen});
  if (it == names.end())
    throw Error(ErrorKind::UnknownSymbol,
                t.gen + " is not a generator of " + P.name + " at " + c);
  return CrossPath{Path::identity(c), it->second, t.path};
}

}  // namespace

std::string bar_name(const CurriedPresentation& P, const std::string& c,
                     const std::string& gen) {
  auto names = naming(P);
  auto it = names.find({c, gen});
  if (it == names.end())
    throw Error(ErrorKind::UnknownSymbol,
                gen + " is not a generator of " + P.name + " at " + c);
  return it->second;
}

CrossPath overline(const CurriedPresentation& P, const std::string& c,
                   const Term& t) {
  return bar(naming(P), P, c, t);
}

UncurriedPresentation uncurry(const CurriedPresentation& P) {
  auto names = naming(P);
  UncurriedPresentation u;
  u.name = P.name + "_bar";
  u.left = P.left;
  u.right = P.right;
  for (const auto& c : P.left.sorts)
    for (const auto& g : P.at.at(c).gens)
      u.pros.push_back({names.at({c, g.name}), c, g.sort});
  for (const auto& c : P.left.sorts)
    for (const auto& e : P.at.at(c).eqs)
      u.eqs.push_back({bar(names, P, c, e.lhs), bar(names, P, c, e.rhs)});
  for (const auto& f : P.left.funs)
    for (const auto& g : P.at.at(f.tgt).gens)
      u.eqs.push_back(
          {CrossPath{Path{f.src, f.tgt, {f.name}}, names.at({f.tgt, g.name}),
                     Path::identity(g.sort)},
           bar(names, P, f.src, P.act.at(f.name).at(g.name))});
  return u;
}

UncurriedMorphism uncurry_morphism(const CurriedMorphism& F) {
  if (!F.globular())
    throw Error(ErrorKind::NonGlobular, F.name + " is not globular");
  auto src = naming(F.source), tgt = naming(F.target);
  UncurriedMorphism m{F.name + "_bar", uncurry(F.source), uncurry(F.target), {}};
  for (const auto& c : F.source.left.sorts)
    for (const auto& g : F.source.at.at(c).gens)
      m.pro_map[src.at({c, g.name})] =
          bar(tgt, F.target, c, F.components.at(c).at(g.name));
  return m;
}

const char* to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::Holds: return "Holds";
    case CheckStatus::FailsWithWitness: return "FailsWithWitness";
    case CheckStatus::Inconclusive: return "Inconclusive";
  }
  return "?";
}

std::vector<CrossPath> short_left_cross_paths(const UncurriedPresentation& u) {
  std::vector<CrossPath> out;
  for (const auto& f : u.left.funs)
    for (const auto& p : u.pros)
      if (p.src == f.tgt)
        out.push_back({Path{f.src, f.tgt, {f.name}}, p.name,
                       Path::identity(p.tgt)});
  return out;
}

namespace {

void right_paths(const CatPresentation& d, const Path& cur, int room,
                 std::vector<Path>& out) {
  out.push_back(cur);
  if (room == 0) return;
  for (const auto& f : d.funs)
    if (f.src == cur.tgt) {
      Path n = cur;
      n.syms.push_back(f.name);
      n.tgt = f.tgt;
      right_paths(d, n, room - 1, out);
    }
}

}  // namespace

std::vector<CrossPath> right_cross_paths(const UncurriedPresentation& u,
                                         const std::string& c, int max_len) {
  Collage col = build_collage(u);
  std::vector<CrossPath> out;
  for (const auto& p : u.pros) {
    if (p.src != c || max_len < 1) continue;
    std::vector<Path> tails;
    right_paths(u.right, Path::identity(p.tgt), max_len - 1, tails);
    for (auto& t : tails) out.push_back({Path::identity(c), p.name, t});
  }
  std::stable_sort(out.begin(), out.end(),
                   [&](const CrossPath& a, const CrossPath& b) {
                     return shortlex_compare(col.theory, col.from_cross(a),
                                             col.from_cross(b)) < 0;
                   });
  return out;
}

namespace {

bool is_short_left(const CrossPath& c) {
  return c.left.length() == 1 && c.right.is_identity();
}

CheckOutcome strict_nongenerative(const UncurriedPresentation& q) {
  CheckOutcome out;
  std::map<CrossPath, int> uses;
  for (const auto& l : short_left_cross_paths(q)) uses[l] = 0;
  for (const auto& e : q.eqs) {
    ++out.budget_used;
    bool rr = e.lhs.is_right() && e.rhs.is_right();
    bool lr = is_short_left(e.lhs) && e.rhs.is_right();
    bool rl = e.lhs.is_right() && is_short_left(e.rhs);
    if (!rr && !lr && !rl) {
      out.witnesses.push_back({e.lhs, e.rhs});
      continue;
    }
    if (lr) ++uses[e.lhs];
    if (rl) ++uses[e.rhs];
  }
  for (const auto& [l, n] : uses)
    if (n != 1) out.missing.push_back(l);
  out.certified = true;
  if (!out.witnesses.empty() || !out.missing.empty()) {
    out.status = CheckStatus::FailsWithWitness;
    out.note = "equations are not in paired form";
  }
  return out;
}

}  // namespace

CheckOutcome check_nongenerative(const UncurriedPresentation& q,
                                 const Budget& b, bool strict) {
  if (strict) return strict_nongenerative(q);
  CheckOutcome out;
  Collage col = build_collage(q);
  Prover pv(col.theory, b);
  bool exact = pv.completion().has_value();
  for (const auto& l : short_left_cross_paths(q)) {
    Path lp = col.from_cross(l);
    std::optional<CrossPath> found;
    if (exact) {
      Path nf = *pv.normal_form(lp);
      for (const auto& r : right_cross_paths(q, l.src(), b.max_len)) {
        ++out.budget_used;
        if (r.tgt() == l.tgt() && *pv.normal_form(col.from_cross(r)) == nf) {
          found = r;
          break;
        }
      }
    } else {
      std::vector<CrossPath> rights;
      for (const auto& m : pv.closure().members(lp)) {
        ++out.budget_used;
        CrossPath c = col.to_cross(m);
        if (c.is_right()) rights.push_back(c);
      }
      if (!rights.empty())
        found = *std::min_element(
            rights.begin(), rights.end(), [&](const auto& a, const auto& b2) {
              return shortlex_compare(col.theory, col.from_cross(a),
                                      col.from_cross(b2)) < 0;
            });
    }
    if (found)
      out.chosen.push_back({l, *found});
    else
      out.missing.push_back(l);
  }
  if (!out.missing.empty()) {
    out.status = CheckStatus::Inconclusive;
    out.note = "no right cross-path found within budget";
  }
  return out;
}

CheckOutcome check_conservative(const UncurriedPresentation& q,
                                const Budget& b) {
  CheckOutcome out;
  Collage col = build_collage(q);
  Prover pv(col.theory, b);
  bool exact = pv.completion().has_value();
  bool all_exact = exact;
  std::vector<std::pair<CrossPath, CrossPath>> candidates;
  for (const auto& c : q.left.sorts) {
    InstanceProver fiber(fiber_instance(q, c), b);
    all_exact = all_exact && fiber.prover().completion().has_value();
    auto rights = right_cross_paths(q, c, b.max_len);
    // Group by the class in q, in enumeration order.
    std::vector<std::pair<Path, std::vector<CrossPath>>> groups;
    std::map<std::string, size_t> by_key;
    for (const auto& r : rights) {
      Path p = col.from_cross(r);
      std::string key;
      if (exact) {
        key = to_string(*pv.normal_form(p)) + "@" + p.tgt;
      } else {
        int k = pv.closure().class_of(p);
        key = k < 0 ? "#" + to_string(p) + "@" + p.tgt : std::to_string(k);
      }
      auto it = by_key.find(key);
      if (it == by_key.end()) {
        by_key[key] = groups.size();
        groups.push_back({p, {r}});
      } else {
        groups[it->second].second.push_back(r);
      }
    }
    for (const auto& [_, members] : groups) {
      const CrossPath& anchor = members.front();
      for (size_t i = 1; i < members.size(); ++i) {
        ++out.budget_used;
        auto r = fiber.prove(Term{anchor.pro, anchor.right},
                             Term{members[i].pro, members[i].right});
        if (r.refuted())
          out.witnesses.push_back({anchor, members[i]});
        else if (!r.holds())
          candidates.push_back({anchor, members[i]});
      }
    }
  }
  if (!out.witnesses.empty()) {
    out.status = CheckStatus::FailsWithWitness;
    out.certified = true;
    out.note = "provably equal in the presentation but separated in the fiber";
  } else if (!candidates.empty()) {
    out.status = CheckStatus::Inconclusive;
    out.witnesses = candidates;
    out.note = "pairs not proved in the fiber within budget";
  } else {
    out.certified = all_exact;
    out.note = all_exact ? "holds for all right cross-paths up to the length bound"
                         : "holds up to budget";
  }
  return out;
}

CurriedPresentation curry(const UncurriedPresentation& q, const Budget& b) {
  CheckOutcome ng = check_nongenerative(q, b, false);
  if (ng.status != CheckStatus::Holds) {
    std::string list;
    for (const auto& m : ng.missing) list += (list.empty() ? "" : ", ") + to_string(m);
    throw Error(ErrorKind::NongenerativityUnverified,
                "no right cross-path found for " + list);
  }
  CurriedPresentation p;
  p.name = q.name + "_curry";
  p.left = q.left;
  p.right = q.right;
  for (const auto& c : q.left.sorts) {
    auto inst = fiber_instance(q, c);
    p.at[c] = std::move(inst);
  }
  canonicalize_names(p);
  for (const auto& f : q.left.funs) p.act[f.name];
  for (const auto& [l, r] : ng.chosen)
    p.act[l.left.syms[0]][l.pro] = Term{r.pro, r.right};
  auto report = validate_curried(p, b);
  if (report.status != Validity::Valid) {
    std::string what = "curried result is not valid";
    for (const auto& i : report.items)
      if (!i.outcome.holds()) {
        what = i.what + ": " + i.lhs + " vs " + i.rhs;
        break;
      }
    if (!report.structural.empty()) what = report.structural[0].message;
    throw Error(ErrorKind::CurryValidationFailed, what);
  }
  return p;
}

RoundTrip curry_round_trip(const CurriedPresentation& P, const Budget& b) {
  auto names = naming(P);
  RoundTrip out;
  out.curried = curry(uncurry(P), b);
  out.to = CurriedMorphism{"bar_" + P.name, P, out.curried,
                           identity_morphism(P.left), identity_morphism(P.right),
                           {}};
  out.from = CurriedMorphism{"unbar_" + P.name, out.curried, P,
                             identity_morphism(P.left),
                             identity_morphism(P.right), {}};
  for (const auto& c : P.left.sorts) {
    out.to.components[c];
    out.from.components[c];
    for (const auto& g : P.at.at(c).gens) {
      const std::string& n = names.at({c, g.name});
      out.to.components[c][g.name] = Term{n, Path::identity(g.sort)};
      out.from.components[c][n] = Term{g.name, Path::identity(g.sort)};
    }
  }
  return out;
}

}  // namespace profpres

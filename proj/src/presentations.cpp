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

#include "profpres/presentations.hpp"

#include <algorithm>
#include <set>

namespace profpres {

const FunSym* UncurriedPresentation::find_pro(const std::string& p) const {
  for (const auto& f : pros)
    if (f.name == p) return &f;
  return nullptr;
}

const Generator* InstancePresentation::find_gen(const std::string& g) const {
  for (const auto& x : gens)
    if (x.name == g) return &x;
  return nullptr;
}

bool CurriedMorphism::globular() const {
  return is_identity_morphism(f0) && is_identity_morphism(f1);
}

std::string to_string(const CrossPath& p) {
  std::string out;
  for (const auto& s : p.left.syms) out += s + ".";
  out += p.pro;
  for (const auto& s : p.right.syms) out += "." + s;
  return out;
}

std::string to_string(const Term& t) {
  std::string out = t.gen;
  for (const auto& s : t.path.syms) out += "." + s;
  return out;
}

Term extend(const Term& t, const Path& p) {
  return Term{t.gen, compose_paths(t.path, p)};
}

CrossPath extend(const CrossPath& c, const Path& p) {
  return CrossPath{c.left, c.pro, compose_paths(c.right, p)};
}

CrossPath prepend(const Path& p, const CrossPath& c) {
  return CrossPath{compose_paths(p, c.left), c.pro, c.right};
}

// ---------------------------------------------------------------- structure

bool term_in(const InstancePresentation& i, const Term& t) {
  const Generator* g = i.find_gen(t.gen);
  return g && t.path.src == g->sort && path_in(i.base, t.path);
}

bool cross_in(const UncurriedPresentation& u, const CrossPath& c) {
  const FunSym* p = u.find_pro(c.pro);
  return p && c.left.tgt == p->src && c.right.src == p->tgt &&
         path_in(u.left, c.left) && path_in(u.right, c.right);
}

std::vector<Diagnostic> validate_structure(const InstancePresentation& i) {
  auto out = validate_presentation(i.base);
  std::set<std::string> seen;
  for (const auto& g : i.gens) {
    if (!seen.insert(g.name).second)
      out.push_back({ErrorKind::DuplicateName, "duplicate generator " + g.name});
    if (!i.base.has_sort(g.sort))
      out.push_back({ErrorKind::UnknownSort, "generator " + g.name +
                                                 " has unknown sort " + g.sort});
  }
  for (const auto& e : i.eqs) {
    if (!term_in(i, e.lhs) || !term_in(i, e.rhs))
      out.push_back({ErrorKind::TypeMismatch, "ill-typed term in " +
                                                  to_string(e.lhs) + " = " +
                                                  to_string(e.rhs)});
    else if (e.lhs.type() != e.rhs.type())
      out.push_back({ErrorKind::NonParallelEquation,
                     to_string(e.lhs) + " = " + to_string(e.rhs) +
                         " is not parallel"});
  }
  return out;
}

std::vector<Diagnostic> validate_structure(const UncurriedPresentation& u) {
  auto out = validate_presentation(u.left);
  for (auto& d : validate_presentation(u.right)) out.push_back(d);
  std::set<std::string> seen;
  for (const auto& p : u.pros) {
    if (!seen.insert(p.name).second)
      out.push_back({ErrorKind::DuplicateName, "duplicate pro " + p.name});
    if (!u.left.has_sort(p.src) || !u.right.has_sort(p.tgt))
      out.push_back({ErrorKind::UnknownSort, "pro " + p.name +
                                                 " has an unknown endpoint"});
  }
  for (const auto& e : u.eqs) {
    if (!cross_in(u, e.lhs) || !cross_in(u, e.rhs))
      out.push_back({ErrorKind::TypeMismatch, "ill-typed cross-path in " +
                                                  to_string(e.lhs) + " = " +
                                                  to_string(e.rhs)});
    else if (e.lhs.src() != e.rhs.src() || e.lhs.tgt() != e.rhs.tgt())
      out.push_back({ErrorKind::NonParallelEquation,
                     to_string(e.lhs) + " = " + to_string(e.rhs) +
                         " is not parallel"});
  }
  return out;
}

std::vector<Diagnostic> validate_structure(const CurriedPresentation& p) {
  auto out = validate_presentation(p.left);
  for (auto& d : validate_presentation(p.right)) out.push_back(d);
  for (const auto& c : p.left.sorts) {
    auto it = p.at.find(c);
    if (it == p.at.end()) {
      out.push_back({ErrorKind::UnknownSort, "no instance at " + c});
      continue;
    }
    if (!(it->second.base == p.right))
      out.push_back({ErrorKind::BaseMismatch,
                     "instance at " + c + " is not over " + p.right.name});
    for (auto& d : validate_structure(it->second)) out.push_back(d);
  }
  for (const auto& [c, _] : p.at)
    if (!p.left.has_sort(c))
      out.push_back({ErrorKind::UnknownSort, "instance at unknown sort " + c});
  for (const auto& f : p.left.funs) {
    auto it = p.act.find(f.name);
    if (it == p.act.end()) {
      out.push_back({ErrorKind::UnknownSymbol, "no action for " + f.name});
      continue;
    }
    auto src = p.at.find(f.tgt), dst = p.at.find(f.src);
    if (src == p.at.end() || dst == p.at.end()) continue;
    for (const auto& g : src->second.gens) {
      auto img = it->second.find(g.name);
      if (img == it->second.end()) {
        out.push_back({ErrorKind::UnknownSymbol,
                       "action " + f.name + " misses generator " + g.name});
        continue;
      }
      if (!term_in(dst->second, img->second) || img->second.type() != g.sort)
        out.push_back({ErrorKind::TypeMismatch,
                       "action " + f.name + " sends " + g.name +
                           " to ill-typed " + to_string(img->second)});
    }
    for (const auto& [g, _] : it->second)
      if (!src->second.find_gen(g))
        out.push_back({ErrorKind::UnknownSymbol,
                       "action " + f.name + " maps unknown generator " + g});
  }
  for (const auto& [f, _] : p.act)
    if (!p.left.find_fun(f))
      out.push_back({ErrorKind::UnknownSymbol, "action for unknown " + f});
  return out;
}

// ---------------------------------------------------------------- collage

namespace {
std::string fresh(const std::string& name, const std::string& tag,
                  const std::set<std::string>& taken) {
  if (!taken.count(name)) return name;
  std::string n = name + "_" + tag;
  while (taken.count(n)) n += "'";
  return n;
}

std::vector<std::string> ordered_funs(const CatPresentation& c) {
  std::vector<std::string> out;
  for (const auto& o : c.order)
    if (c.find_fun(o)) out.push_back(o);
  for (const auto& f : c.funs)
    if (std::find(out.begin(), out.end(), f.name) == out.end())
      out.push_back(f.name);
  return out;
}
}  // namespace

Collage build_collage(const UncurriedPresentation& u) {
  Collage c;
  CatPresentation& t = c.theory.pres;
  t.name = u.name.empty() ? "collage" : "|" + u.name + "|";
  std::string rtag =
      (!u.right.name.empty() && u.right.name != u.left.name) ? u.right.name : "R";
  std::string ltag =
      (!u.left.name.empty() && u.left.name != rtag) ? u.left.name : "L";

  std::set<std::string> sorts(u.left.sorts.begin(), u.left.sorts.end());
  for (const auto& s : u.left.sorts) {
    t.sorts.push_back(s);
    c.theory.sort_part.push_back(Part::Left);
    c.left_sorts.push_back(s);
  }
  for (const auto& s : u.right.sorts) {
    std::string n = fresh(s, rtag, sorts);
    sorts.insert(n);
    c.right_sort[s] = n;
    c.right_sort_inv[n] = s;
    t.sorts.push_back(n);
    c.theory.sort_part.push_back(Part::Right);
    c.right_sorts.push_back(n);
  }

  // Symbol order: profunctor symbols first, then left, then right. Ties
  // between a left-headed and a pro-headed path thus orient towards the
  // right cross-path.
  std::set<std::string> syms;
  for (const auto& p : u.pros) syms.insert(p.name);
  for (const auto& f : u.left.funs) {
    std::string n = fresh(f.name, ltag, syms);
    syms.insert(n);
    c.left_fun[f.name] = n;
    c.left_fun_inv[n] = f.name;
  }
  for (const auto& f : u.right.funs) {
    std::string n = fresh(f.name, rtag, syms);
    syms.insert(n);
    c.right_fun[f.name] = n;
    c.right_fun_inv[n] = f.name;
  }
  for (const auto& p : u.pros) {
    t.funs.push_back({p.name, p.src, c.right_sort.at(p.tgt)});
    c.theory.fun_part.push_back(Part::Pro);
  }
  for (const auto& f : u.left.funs) {
    t.funs.push_back({c.left_fun[f.name], f.src, f.tgt});
    c.theory.fun_part.push_back(Part::Left);
  }
  for (const auto& f : u.right.funs) {
    t.funs.push_back({c.right_fun[f.name], c.right_sort.at(f.src),
                      c.right_sort.at(f.tgt)});
    c.theory.fun_part.push_back(Part::Right);
  }
  if (!u.left.order.empty() || !u.right.order.empty()) {
    for (const auto& p : u.pros) t.order.push_back(p.name);
    for (const auto& f : ordered_funs(u.left)) t.order.push_back(c.left_fun[f]);
    for (const auto& f : ordered_funs(u.right))
      t.order.push_back(c.right_fun[f]);
  }

  for (const auto& e : u.left.eqs)
    t.eqs.push_back({c.from_left(e.lhs), c.from_left(e.rhs)});
  for (const auto& e : u.eqs)
    t.eqs.push_back({c.from_cross(e.lhs), c.from_cross(e.rhs)});
  for (const auto& e : u.right.eqs)
    t.eqs.push_back({c.from_right(e.lhs), c.from_right(e.rhs)});
  return c;
}

Path Collage::from_left(const Path& p) const {
  Path out{p.src, p.tgt, {}};
  for (const auto& s : p.syms) out.syms.push_back(left_fun.at(s));
  return out;
}

Path Collage::from_right(const Path& p) const {
  Path out{right_sort.at(p.src), right_sort.at(p.tgt), {}};
  for (const auto& s : p.syms) out.syms.push_back(right_fun.at(s));
  return out;
}

Path Collage::from_cross(const CrossPath& c) const {
  Path out = from_left(c.left);
  out.syms.push_back(c.pro);
  for (const auto& s : c.right.syms) out.syms.push_back(right_fun.at(s));
  out.tgt = right_sort.at(c.right.tgt);
  return out;
}

bool Collage::is_cross(const Path& p) const {
  for (const auto& s : p.syms)
    if (theory.part_of(s) == Part::Pro) return true;
  return false;
}

CrossPath Collage::to_cross(const Path& p) const {
  size_t k = 0;
  while (k < p.syms.size() && theory.part_of(p.syms[k]) != Part::Pro) ++k;
  if (k == p.syms.size())
    throw Error(ErrorKind::TypeMismatch, to_string(p) + " is not a cross-path");
  const FunSym* pro = theory.pres.find_fun(p.syms[k]);
  CrossPath c;
  c.pro = pro->name;
  c.left = Path{p.src, pro->src, {}};
  for (size_t i = 0; i < k; ++i) c.left.syms.push_back(left_fun_inv.at(p.syms[i]));
  c.right = Path{right_sort_inv.at(pro->tgt), right_sort_inv.at(p.tgt), {}};
  for (size_t i = k + 1; i < p.syms.size(); ++i)
    c.right.syms.push_back(right_fun_inv.at(p.syms[i]));
  return c;
}

Path Collage::to_left(const Path& p) const {
  Path out{p.src, p.tgt, {}};
  for (const auto& s : p.syms) out.syms.push_back(left_fun_inv.at(s));
  return out;
}

Path Collage::to_right(const Path& p) const {
  Path out{right_sort_inv.at(p.src), right_sort_inv.at(p.tgt), {}};
  for (const auto& s : p.syms) out.syms.push_back(right_fun_inv.at(s));
  return out;
}

CatPresentation terminal_presentation() {
  CatPresentation one;
  one.name = "1";
  one.sorts = {"*"};
  return one;
}

UncurriedPresentation as_uncurried(const InstancePresentation& i) {
  UncurriedPresentation u;
  u.name = i.name;
  u.left = terminal_presentation();
  u.right = i.base;
  for (const auto& g : i.gens) u.pros.push_back({g.name, "*", g.sort});
  for (const auto& e : i.eqs)
    u.eqs.push_back({CrossPath{Path::identity("*"), e.lhs.gen, e.lhs.path},
                     CrossPath{Path::identity("*"), e.rhs.gen, e.rhs.path}});
  return u;
}

Path term_to_path(const Collage& c, const Term& t) {
  return c.from_cross(CrossPath{Path::identity("*"), t.gen, t.path});
}

Term path_to_term(const Collage& c, const Path& p) {
  CrossPath x = c.to_cross(p);
  return Term{x.pro, x.right};
}

InstancePresentation fiber_instance(const UncurriedPresentation& u,
                                    const std::string& c) {
  if (!u.left.has_sort(c))
    throw Error(ErrorKind::UnknownSort, "unknown sort " + c + " in " + u.name);
  InstancePresentation i;
  i.name = u.name + "^" + c;
  i.base = u.right;
  for (const auto& p : u.pros)
    if (p.src == c) i.gens.push_back({p.name, p.tgt});
  for (const auto& e : u.eqs)
    if (e.lhs.is_right() && e.rhs.is_right() && e.lhs.src() == c)
      i.eqs.push_back({Term{e.lhs.pro, e.lhs.right}, Term{e.rhs.pro, e.rhs.right}});
  return i;
}

InstanceProver::InstanceProver(const InstancePresentation& i, const Budget& b)
    : inst_(i),
      collage_(build_collage(as_uncurried(i))),
      prover_(collage_.theory, b) {}

ProofOutcome InstanceProver::prove(const Term& s, const Term& t) const {
  if (!term_in(inst_, s) || !term_in(inst_, t))
    throw Error(ErrorKind::ForeignPath,
                "term not in " + inst_.name + ": " +
                    (term_in(inst_, s) ? to_string(t) : to_string(s)));
  if (s.type() != t.type())
    throw Error(ErrorKind::NonParallel,
                to_string(s) + " and " + to_string(t) + " differ in type");
  return prover_.prove(term_to_path(collage_, s), term_to_path(collage_, t));
}

std::optional<Term> InstanceProver::normal_form(const Term& t) const {
  auto n = prover_.normal_form(term_to_path(collage_, t));
  if (!n) return std::nullopt;
  return path_to_term(collage_, *n);
}

// ---------------------------------------------------------------- morphisms

Term apply(const GenMap& m, const CatMorphism* base, const Term& t) {
  auto it = m.find(t.gen);
  if (it == m.end())
    throw Error(ErrorKind::UnknownSymbol, "no image for generator " + t.gen);
  Path tail = base ? apply_morphism(*base, t.path) : t.path;
  return Term{it->second.gen, compose_paths(it->second.path, tail)};
}

CrossPath apply(const UncurriedMorphism& f, const CrossPath& c) {
  auto it = f.pro_map.find(c.pro);
  if (it == f.pro_map.end())
    throw Error(ErrorKind::UnknownSymbol, "no image for " + c.pro);
  return CrossPath{compose_paths(c.left, it->second.left), it->second.pro,
                   compose_paths(it->second.right, c.right)};
}

InstanceMorphism action(const CurriedPresentation& p, const std::string& f) {
  const FunSym* fs = p.left.find_fun(f);
  if (!fs) throw Error(ErrorKind::UnknownSymbol, "unknown symbol " + f);
  return InstanceMorphism{p.name + "(" + f + ")", p.at.at(fs->tgt),
                          p.at.at(fs->src), identity_morphism(p.right),
                          p.act.at(f)};
}

Term act_path(const CurriedPresentation& p, const Path& path, const Term& t) {
  Term cur = t;
  for (auto it = path.syms.rbegin(); it != path.syms.rend(); ++it)
    cur = apply(p.act.at(*it), nullptr, cur);
  return cur;
}

InstanceMorphism component(const CurriedMorphism& m, const std::string& c) {
  return InstanceMorphism{m.name + "_" + c, m.source.at.at(c),
                          m.target.at.at(m.f0.sort_map.at(c)), m.f1,
                          m.components.at(c)};
}

// ---------------------------------------------------------------- reports

const char* to_string(Validity v) {
  switch (v) {
    case Validity::Valid: return "Valid";
    case Validity::Invalid: return "Invalid";
    case Validity::Inconclusive: return "Inconclusive";
  }
  return "?";
}

void ValidationReport::add(ReportItem item) { items.push_back(std::move(item)); }

void ValidationReport::merge(const ValidationReport& other,
                             const std::string& prefix) {
  for (const auto& d : other.structural)
    structural.push_back({d.kind, prefix + d.message});
  for (auto item : other.items) {
    item.what = prefix + item.what;
    items.push_back(std::move(item));
  }
}

void ValidationReport::finish() {
  status = Validity::Valid;
  if (!structural.empty()) {
    status = Validity::Invalid;
    return;
  }
  for (const auto& i : items) {
    if (i.outcome.refuted()) {
      status = Validity::Invalid;
      return;
    }
    if (!i.outcome.holds()) status = Validity::Inconclusive;
  }
}

ValidationReport validate_morphism(const CatMorphism& f, const Budget& b) {
  ValidationReport r;
  r.structural = validate_structure(f);
  if (r.structural.empty()) {
    Prover pv(Theory::of(f.target), b);
    for (const auto& e : f.source.eqs) {
      Path l = apply_morphism(f, e.lhs), rr = apply_morphism(f, e.rhs);
      r.add({"equation " + to_string(e), to_string(l), to_string(rr),
             pv.prove(l, rr)});
    }
  }
  r.finish();
  return r;
}

namespace {
std::vector<Diagnostic> structure_of(const InstanceMorphism& f) {
  auto out = validate_structure(f.base);
  if (!(f.base.source == f.source.base) || !(f.base.target == f.target.base))
    out.push_back({ErrorKind::BaseMismatch, "base map of " + f.name +
                                                " does not match the bases"});
  if (!out.empty()) return out;
  for (const auto& g : f.source.gens) {
    auto it = f.gen_map.find(g.name);
    if (it == f.gen_map.end()) {
      out.push_back({ErrorKind::UnknownSymbol, g.name + " is not mapped"});
      continue;
    }
    if (!term_in(f.target, it->second) ||
        it->second.type() != f.base.sort_map.at(g.sort))
      out.push_back({ErrorKind::TypeMismatch, "image of " + g.name +
                                                  " is ill-typed: " +
                                                  to_string(it->second)});
  }
  return out;
}
}  // namespace

ValidationReport validate_morphism(const InstanceMorphism& f, const Budget& b) {
  ValidationReport r;
  r.structural = structure_of(f);
  if (r.structural.empty()) {
    InstanceProver pv(f.target, b);
    for (const auto& e : f.source.eqs) {
      Term l = apply(f.gen_map, &f.base, e.lhs);
      Term rr = apply(f.gen_map, &f.base, e.rhs);
      r.add({"equation " + to_string(e.lhs) + " = " + to_string(e.rhs),
             to_string(l), to_string(rr), pv.prove(l, rr)});
    }
  }
  r.finish();
  return r;
}

ValidationReport validate_morphism(const UncurriedMorphism& f, const Budget& b) {
  ValidationReport r;
  if (!(f.source.left == f.target.left) || !(f.source.right == f.target.right))
    r.structural.push_back({ErrorKind::NonGlobular,
                            f.name + " must keep both frames fixed"});
  for (const auto& p : f.source.pros) {
    auto it = f.pro_map.find(p.name);
    if (it == f.pro_map.end()) {
      r.structural.push_back({ErrorKind::UnknownSymbol, p.name + " is not mapped"});
      continue;
    }
    if (!cross_in(f.target, it->second) || it->second.src() != p.src ||
        it->second.tgt() != p.tgt)
      r.structural.push_back({ErrorKind::TypeMismatch,
                              "image of " + p.name + " is ill-typed"});
  }
  if (r.structural.empty()) {
    Collage c = build_collage(f.target);
    Prover pv(c.theory, b);
    for (const auto& e : f.source.eqs) {
      CrossPath l = apply(f, e.lhs), rr = apply(f, e.rhs);
      r.add({"equation " + to_string(e.lhs) + " = " + to_string(e.rhs),
             to_string(l), to_string(rr),
             pv.prove(c.from_cross(l), c.from_cross(rr))});
    }
  }
  r.finish();
  return r;
}

namespace {
class ProverCache {
 public:
  ProverCache(const CurriedPresentation& p, const Budget& b) : p_(p), b_(b) {}
  const InstanceProver& at(const std::string& c) {
    auto it = cache_.find(c);
    if (it == cache_.end())
      it = cache_.emplace(c, std::make_unique<InstanceProver>(p_.at.at(c), b_))
               .first;
    return *it->second;
  }

 private:
  const CurriedPresentation& p_;
  Budget b_;
  std::map<std::string, std::unique_ptr<InstanceProver>> cache_;
};
}  // namespace

ValidationReport validate_curried(const CurriedPresentation& p,
                                  const Budget& b) {
  ValidationReport r;
  r.structural = validate_structure(p);
  if (!r.structural.empty()) {
    r.finish();
    return r;
  }
  ProverCache provers(p, b);
  for (const auto& f : p.left.funs) {
    const auto& src = p.at.at(f.tgt);
    const auto& pv = provers.at(f.src);
    for (const auto& e : src.eqs) {
      Term l = apply(p.act.at(f.name), nullptr, e.lhs);
      Term rr = apply(p.act.at(f.name), nullptr, e.rhs);
      r.add({"act " + f.name + " on " + to_string(e.lhs) + " = " +
                 to_string(e.rhs),
             to_string(l), to_string(rr), pv.prove(l, rr)});
    }
  }
  for (const auto& e : p.left.eqs) {
    const auto& pv = provers.at(e.lhs.src);
    for (const auto& g : p.at.at(e.lhs.tgt).gens) {
      Term x{g.name, Path::identity(g.sort)};
      Term l = act_path(p, e.lhs, x), rr = act_path(p, e.rhs, x);
      r.add({"equation " + to_string(e) + " at " + g.name, to_string(l),
             to_string(rr), pv.prove(l, rr)});
    }
  }
  r.finish();
  return r;
}

ValidationReport validate_curried_morphism(const CurriedMorphism& m,
                                           const Budget& b) {
  ValidationReport r;
  const auto& P = m.source;
  const auto& Q = m.target;
  for (auto& d : validate_structure(m.f0)) r.structural.push_back(d);
  for (auto& d : validate_structure(m.f1)) r.structural.push_back(d);
  if (!(m.f0.source == P.left) || !(m.f0.target == Q.left) ||
      !(m.f1.source == P.right) || !(m.f1.target == Q.right))
    r.structural.push_back({ErrorKind::FrameMismatch,
                            "frame maps of " + m.name + " do not fit"});
  if (!r.structural.empty()) {
    r.finish();
    return r;
  }
  for (const auto& c : P.left.sorts) {
    if (!m.components.count(c)) {
      r.structural.push_back({ErrorKind::UnknownSort, "no component at " + c});
      continue;
    }
    auto inst = component(m, c);
    r.merge(validate_morphism(inst, b), "component " + c + ": ");
  }
  if (!r.structural.empty()) {
    r.finish();
    return r;
  }
  ProverCache provers(Q, b);
  for (const auto& f : P.left.funs) {
    const auto& pv = provers.at(m.f0.sort_map.at(f.src));
    const Path& image = m.f0.fun_map.at(f.name);
    for (const auto& g : P.at.at(f.tgt).gens) {
      Term x{g.name, Path::identity(g.sort)};
      Term l = apply(m.components.at(f.src), &m.f1,
                     apply(P.act.at(f.name), nullptr, x));
      Term rr = act_path(Q, image, apply(m.components.at(f.tgt), &m.f1, x));
      r.add({"square " + f.name + " at " + g.name, to_string(l), to_string(rr),
             pv.prove(l, rr)});
    }
  }
  r.finish();
  return r;
}

void canonicalize_names(CurriedPresentation& p) {
  for (auto& [c, inst] : p.at) inst.name = p.name + "@" + c;
}

CurriedMorphism identity_curried_morphism(const CurriedPresentation& p) {
  CurriedMorphism m{"id_" + p.name, p, p, identity_morphism(p.left),
                    identity_morphism(p.right), {}};
  for (const auto& [c, inst] : p.at)
    for (const auto& g : inst.gens)
      m.components[c][g.name] = Term{g.name, Path::identity(g.sort)};
  return m;
}

CurriedMorphism compose_curried_morphism_chain(const CurriedMorphism& m,
                                               const CurriedMorphism& n) {
  if (!(m.target == n.source))
    throw Error(ErrorKind::FrameMismatch,
                "cannot compose " + m.name + " with " + n.name);
  CurriedMorphism out{n.name + "." + m.name, m.source, n.target,
                      compose_morphisms(m.f0, n.f0),
                      compose_morphisms(m.f1, n.f1), {}};
  for (const auto& [c, gens] : m.components) {
    const auto& next = n.components.at(m.f0.sort_map.at(c));
    for (const auto& [g, t] : gens) out.components[c][g] = apply(next, &n.f1, t);
  }
  return out;
}

ValidationReport curried_morphisms_equal(const CurriedMorphism& a,
                                         const CurriedMorphism& b,
                                         const Budget& budget) {
  ValidationReport r;
  if (!(a.source == b.source) || !(a.target == b.target))
    throw Error(ErrorKind::NotParallel,
                a.name + " and " + b.name + " are not parallel");
  if (a.f0.sort_map != b.f0.sort_map || a.f1.sort_map != b.f1.sort_map)
    r.structural.push_back({ErrorKind::NotParallel, "sort maps differ"});
  if (r.structural.empty()) {
    if (!(a.f0 == b.f0))
      r.add({"left frame", a.f0.name, b.f0.name,
             morphisms_equal(a.f0, b.f0, budget)});
    if (!(a.f1 == b.f1))
      r.add({"right frame", a.f1.name, b.f1.name,
             morphisms_equal(a.f1, b.f1, budget)});
    ProverCache provers(a.target, budget);
    for (const auto& [c, gens] : a.components) {
      const auto& pv = provers.at(a.f0.sort_map.at(c));
      for (const auto& [g, t] : gens) {
        const Term& u = b.components.at(c).at(g);
        r.add({"generator " + g + " at " + c, to_string(t), to_string(u),
               pv.prove(t, u)});
      }
    }
  }
  r.finish();
  return r;
}

}  // namespace profpres

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

// profpres: batch front end over .prof files.
//
// Exit status: 0 success / Holds / Valid / Iso, 1 certified failure,
// 2 inconclusive, 3 usage or parse error.

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "profpres/bridge.hpp"
#include "profpres/compose.hpp"
#include "profpres/dsl.hpp"
#include "profpres/semantics.hpp"

using namespace profpres;
using json = nlohmann::ordered_json;

namespace {

enum Exit { kOk = 0, kFail = 1, kInconclusive = 2, kUsage = 3 };

struct Usage : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::vector<std::string> files;
  std::string format = "text";
  Budget budget;
  int depth = 3;
};

bool json_out(const Options& o) { return o.format == "json"; }

Workspace load(const std::vector<std::string>& files) {
  Workspace ws;
  if (files.empty() || (files.size() == 1 && files[0] == "-")) {
    std::stringstream ss;
    ss << std::cin.rdbuf();
    parse_into(ws, ss.str(), "<stdin>");
    return ws;
  }
  for (const auto& f : files) {
    std::ifstream in(f);
    if (!in) throw Usage("cannot read " + f);
    std::stringstream ss;
    ss << in.rdbuf();
    parse_into(ws, ss.str(), f);
  }
  return ws;
}

const Entity& need(const Workspace& ws, const std::string& name) {
  const Entity* e = ws.find(name);
  if (!e) throw Usage("no entity named " + name);
  return *e;
}

template <class T>
const T& need(const Workspace& ws, const std::string& name, const char* what) {
  const T* x = std::get_if<T>(&need(ws, name));
  if (!x) throw Usage(name + " is not " + what);
  return *x;
}

int worst(int a, int b) {
  auto rank = [](int x) { return x == kFail ? 2 : x == kInconclusive ? 1 : 0; };
  return rank(a) >= rank(b) ? a : b;
}

int exit_of(Validity v) {
  return v == Validity::Valid ? kOk : v == Validity::Invalid ? kFail : kInconclusive;
}

int exit_of(const IsoReport& r) {
  return r.status == IsoStatus::Iso      ? kOk
         : r.status == IsoStatus::NotIso ? kFail
                                          : kInconclusive;
}

int exit_of(const CheckOutcome& c) {
  if (c.status == CheckStatus::Holds) return kOk;
  if (c.status == CheckStatus::FailsWithWitness && c.certified) return kFail;
  return kInconclusive;
}

json path_json(const Path& p) {
  return json{{"src", p.src}, {"tgt", p.tgt}, {"syms", p.syms}};
}

json outcome_json(const ProofOutcome& o) {
  json j{{"status", to_string(o)}, {"holds", o.holds()}, {"refuted", o.refuted()},
         {"budget_used", o.budget_used}};
  if (o.depth) j["depth"] = *o.depth;
  if (o.witness) {
    json steps = json::array();
    for (const auto& s : o.witness->steps)
      steps.push_back({{"before", path_json(s.before)},
                       {"after", path_json(s.after)},
                       {"eq_index", s.eq_index},
                       {"forward", s.forward},
                       {"pos", s.pos}});
    j["derivation"] = {{"from", path_json(o.witness->from)},
                       {"to", path_json(o.witness->to)},
                       {"steps", steps}};
  }
  return j;
}

json report_json(const std::string& name, const char* kind, const ValidationReport& r) {
  json items = json::array(), structural = json::array();
  for (const auto& d : r.structural)
    structural.push_back({{"kind", to_string(d.kind)}, {"message", d.message}});
  for (const auto& i : r.items)
    items.push_back({{"what", i.what}, {"lhs", i.lhs}, {"rhs", i.rhs},
                     {"outcome", to_string(i.outcome)}});
  return json{{"entity", name}, {"kind", kind}, {"status", to_string(r.status)},
              {"structural", structural}, {"items", items}};
}

void print_report(const std::string& name, const char* kind,
                  const ValidationReport& r) {
  std::cout << name << " (" << kind << "): " << to_string(r.status) << "\n";
  for (const auto& d : r.structural) std::cout << "  " << d.message << "\n";
  for (const auto& i : r.items)
    if (!i.outcome.holds())
      std::cout << "  " << i.what << ": " << i.lhs << " vs " << i.rhs << " ["
                << to_string(i.outcome) << "]\n";
}

ValidationReport structural_only(std::vector<Diagnostic> ds) {
  ValidationReport r;
  r.structural = std::move(ds);
  r.finish();
  return r;
}

ValidationReport validate_entity(const Entity& e, const Budget& b) {
  struct V {
    const Budget& b;
    ValidationReport operator()(const CatPresentation& c) {
      return structural_only(validate_presentation(c));
    }
    ValidationReport operator()(const InstancePresentation& i) {
      return structural_only(validate_structure(i));
    }
    ValidationReport operator()(const UncurriedPresentation& u) {
      return structural_only(validate_structure(u));
    }
    ValidationReport operator()(const CurriedPresentation& p) {
      return validate_curried(p, b);
    }
    ValidationReport operator()(const CatMorphism& m) { return validate_morphism(m, b); }
    ValidationReport operator()(const InstanceMorphism& m) {
      return validate_morphism(m, b);
    }
    ValidationReport operator()(const UncurriedMorphism& m) {
      return validate_morphism(m, b);
    }
    ValidationReport operator()(const CurriedMorphism& m) {
      return validate_curried_morphism(m, b);
    }
  };
  return std::visit(V{b}, e);
}

UncurriedPresentation as_uncurried_entity(const Entity& e) {
  if (auto* u = std::get_if<UncurriedPresentation>(&e)) return *u;
  if (auto* p = std::get_if<CurriedPresentation>(&e)) return uncurry(*p);
  if (auto* i = std::get_if<InstancePresentation>(&e)) return as_uncurried(*i);
  throw Usage(entity_name(e) + " is not a profunctor presentation");
}

ProfunctorTable table_of(const Entity& e, const Options& o) {
  if (auto* p = std::get_if<CurriedPresentation>(&e))
    return profunctor_table(*p, o.budget, o.depth);
  return profunctor_table(as_uncurried_entity(e), o.budget, o.depth);
}

// ---------------------------------------------------------------- verbs

int run_check(const Options& o, const std::vector<std::string>& names,
              bool nongen, bool strict, bool conservative) {
  Workspace ws = load(o.files);
  std::vector<std::string> targets = names;
  if (targets.empty())
    for (const auto& [n, e] : ws.entities) targets.push_back(n);
  int code = kOk;
  json all = json::array();

  if (nongen || strict || conservative) {
    if (names.empty()) throw Usage("--nongenerative/--conservative need --entity");
    for (const auto& n : targets) {
      UncurriedPresentation u = as_uncurried_entity(need(ws, n));
      CheckOutcome c = conservative ? check_conservative(u, o.budget)
                                    : check_nongenerative(u, o.budget, strict);
      const char* what = conservative ? "conservative"
                         : strict     ? "strictly nongenerative"
                                      : "nongenerative";
      code = worst(code, exit_of(c));
      auto pairs = [](const std::vector<std::pair<CrossPath, CrossPath>>& xs) {
        json a = json::array();
        for (const auto& [l, r] : xs) a.push_back({to_string(l), to_string(r)});
        return a;
      };
      json missing = json::array();
      for (const auto& m : c.missing) missing.push_back(to_string(m));
      if (json_out(o)) {
        all.push_back({{"entity", n}, {"check", what}, {"status", to_string(c.status)},
                       {"certified", c.certified}, {"witnesses", pairs(c.witnesses)},
                       {"missing", missing}, {"chosen", pairs(c.chosen)},
                       {"note", c.note}});
        continue;
      }
      std::cout << n << " " << what << ": " << to_string(c.status)
                << (c.certified ? " (certified)" : "") << "\n";
      const size_t shown = std::min<size_t>(c.witnesses.size(), 3);
      for (size_t i = 0; i < shown; ++i)
        std::cout << "  witness (" << to_string(c.witnesses[i].first) << ", "
                  << to_string(c.witnesses[i].second) << ")\n";
      if (c.witnesses.size() > shown)
        std::cout << "  (" << c.witnesses.size() - shown << " more witnesses)\n";
      for (const auto& m : c.missing) std::cout << "  missing " << to_string(m) << "\n";
      for (const auto& [l, r] : c.chosen)
        std::cout << "  " << to_string(l) << " = " << to_string(r) << "\n";
      if (!c.note.empty()) std::cout << "  " << c.note << "\n";
    }
  } else {
    for (const auto& n : targets) {
      const Entity& e = need(ws, n);
      ValidationReport r = validate_entity(e, o.budget);
      code = worst(code, exit_of(r.status));
      if (json_out(o))
        all.push_back(report_json(n, entity_kind(e), r));
      else
        print_report(n, entity_kind(e), r);
    }
  }
  if (json_out(o)) std::cout << all.dump(2) << "\n";
  return code;
}

std::pair<std::string, std::string> split_eq(const std::string& eq) {
  auto k = eq.find('=');
  if (k == std::string::npos || eq.find('=', k + 1) != std::string::npos)
    throw Usage("--eq needs exactly one '='");
  return {eq.substr(0, k), eq.substr(k + 1)};
}

int run_prove(const Options& o, const std::string& theory, const std::string& eq) {
  Workspace ws = load(o.files);
  auto [l, r] = split_eq(eq);
  const Entity& e = need(ws, theory);
  ProofOutcome out;
  std::string lhs, rhs;
  if (auto* c = std::get_if<CatPresentation>(&e)) {
    Path p = parse_path(*c, l), q = parse_path(*c, r);
    out = prove_path_eq(Theory::of(*c), p, q, o.budget);
    lhs = to_string(p);
    rhs = to_string(q);
  } else if (auto* i = std::get_if<InstancePresentation>(&e)) {
    Term s = parse_term(*i, l), t = parse_term(*i, r);
    out = InstanceProver(*i, o.budget).prove(s, t);
    lhs = to_string(s);
    rhs = to_string(t);
  } else {
    throw Usage(theory + " is neither a category nor an instance");
  }
  if (json_out(o)) {
    json j{{"theory", theory}, {"lhs", lhs}, {"rhs", rhs}};
    j.update(outcome_json(out));
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << lhs << " = " << rhs << ": " << to_string(out) << "\n";
    if (out.witness)
      for (const auto& s : out.witness->steps)
        std::cout << "  " << to_string(s.before) << " ~> " << to_string(s.after)
                  << "  (eq " << s.eq_index << (s.forward ? "" : ", reversed")
                  << ", at " << s.pos << ")\n";
  }
  if (out.holds()) return kOk;
  return out.refuted() ? kFail : kInconclusive;
}

void emit(const Options& o, const Entity& e) {
  std::cout << (json_out(o) ? export_json(e) + "\n" : render(e));
}

int run_compose(const Options& o, const std::string& left, const std::string& right) {
  Workspace ws = load(o.files);
  const auto& P = need<CurriedPresentation>(ws, left, "a curried presentation");
  const auto& Q = need<CurriedPresentation>(ws, right, "a curried presentation");
  emit(o, compose_curried(P, Q));
  return kOk;
}

int run_uncurry(const Options& o, const std::string& name) {
  Workspace ws = load(o.files);
  emit(o, uncurry(need<CurriedPresentation>(ws, name, "a curried presentation")));
  return kOk;
}

int run_curry(const Options& o, const std::string& name) {
  Workspace ws = load(o.files);
  const auto& u = need<UncurriedPresentation>(ws, name, "an uncurried presentation");
  try {
    emit(o, curry(u, o.budget));
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::CurryValidationFailed) {
      std::cerr << e.what() << "\n";
      return kFail;
    }
    if (e.kind() == ErrorKind::NongenerativityUnverified) {
      std::cerr << e.what() << "\n";
      return kInconclusive;
    }
    throw;
  }
  return kOk;
}

std::string join_labels(const ProfunctorTable& t, const std::vector<int>& es) {
  std::string out;
  for (size_t i = 0; i < es.size(); ++i)
    out += (i ? ", " : "") + (es[i] < 0 ? std::string("-") : t.elems[es[i]].label);
  return out;
}

void print_table(const std::string& title, const ProfunctorTable& t) {
  std::cout << title << ": depth " << t.depth << ", "
            << (t.stabilized ? "stabilized" : "not stabilized") << ", "
            << t.elems.size() << " elements\n";
  for (const auto& c : t.left.objects)
    for (const auto& d : t.right.objects) {
      auto es = t.at(c, d);
      if (!es.empty())
        std::cout << "  (" << c << ", " << d << "): " << join_labels(t, es) << "\n";
    }
  // Generators only; the full matrices are in the JSON form.
  for (size_t m = 0; m < t.left.morphs.size(); ++m) {
    if (t.left.morphs[m].rep.length() != 1) continue;
    std::cout << "  " << to_string(t.left.morphs[m].rep) << " . -:";
    for (size_t e = 0; e < t.elems.size(); ++e)
      if (t.elems[e].c == t.left.morphs[m].tgt)
        std::cout << " " << t.elems[e].label << " |-> "
                  << join_labels(t, {t.lact[m][e]}) << ";";
    std::cout << "\n";
  }
  for (size_t m = 0; m < t.right.morphs.size(); ++m) {
    if (t.right.morphs[m].rep.length() != 1) continue;
    std::cout << "  - . " << to_string(t.right.morphs[m].rep) << ":";
    for (size_t e = 0; e < t.elems.size(); ++e)
      if (t.elems[e].d == t.right.morphs[m].src)
        std::cout << " " << t.elems[e].label << " |-> "
                  << join_labels(t, {t.ract[e][m]}) << ";";
    std::cout << "\n";
  }
}

int run_semantics(const Options& o, const std::string& name) {
  Workspace ws = load(o.files);
  const Entity& e = need(ws, name);
  if (auto* c = std::get_if<CatPresentation>(&e)) {
    FiniteCategoryTable t = saturate_theory(Theory::of(*c), o.budget, o.depth);
    if (json_out(o)) {
      std::cout << table_json(t) << "\n";
    } else {
      std::cout << name << ": depth " << t.depth << ", "
                << (t.stabilized ? "stabilized" : "not stabilized") << ", "
                << t.morphs.size() << " morphisms\n";
      for (const auto& m : t.morphs)
        std::cout << "  " << to_string(m.rep) << " : " << m.src << " -> " << m.tgt << "\n";
    }
    return kOk;
  }
  ProfunctorTable t = table_of(e, o);
  if (json_out(o))
    std::cout << table_json(t) << "\n";
  else
    print_table(name, t);
  return kOk;
}

int run_coend(const Options& o, const std::string& left, const std::string& right) {
  Workspace ws = load(o.files);
  ProfunctorTable co =
      coend_compose(table_of(need(ws, left), o), table_of(need(ws, right), o));
  if (json_out(o))
    std::cout << table_json(co) << "\n";
  else
    print_table(left + " (.) " + right, co);
  return kOk;
}

void print_iso(const Options& o, const std::string& what, const IsoReport& r) {
  if (json_out(o)) {
    std::cout << json{{"check", what}, {"status", to_string(r.status)},
                      {"exact", r.exact}, {"checked", r.checked},
                      {"witness", r.witness}}
                     .dump(2)
              << "\n";
    return;
  }
  std::cout << what << ": " << to_string(r.status);
  if (r.status == IsoStatus::Iso && !r.exact)
    std::cout << " (bounded tables, depth " << o.depth << ")";
  std::cout << ", " << r.checked << " action squares checked\n";
  if (!r.witness.empty()) std::cout << "  " << r.witness << "\n";
}

int run_iso(const Options& o, const std::string& left, const std::string& right,
            const std::string& entity, const std::string& unit) {
  Workspace ws = load(o.files);
  IsoReport r;
  std::string what;
  if (!left.empty() && !right.empty() && entity.empty() && unit.empty()) {
    const Entity& a = need(ws, left);
    const Entity& b = need(ws, right);
    auto* P = std::get_if<CurriedPresentation>(&a);
    auto* Q = std::get_if<CurriedPresentation>(&b);
    if (P && Q) {
      r = check_mu_iso(*P, *Q, o.budget, o.depth);
      what = "mu " + left + ", " + right;
    } else {
      r = find_table_iso(table_of(a, o), table_of(b, o));
      what = "table iso " + left + ", " + right;
    }
  } else if (!entity.empty() && left.empty() && right.empty() && unit.empty()) {
    r = check_uncurry_iso(need<CurriedPresentation>(ws, entity, "a curried presentation"),
                          o.budget, o.depth);
    what = "uncurry " + entity;
  } else if (!unit.empty() && left.empty() && right.empty() && entity.empty()) {
    r = check_unit_iso(need<CatPresentation>(ws, unit, "a category"), o.budget, o.depth);
    what = "unit " + unit;
  } else {
    throw Usage("iso-check takes --left and --right, or --entity, or --unit");
  }
  print_iso(o, what, r);
  return exit_of(r);
}

ValidationReport invertible(const CoherenceCell& c, const Budget& b) {
  ValidationReport r;
  r.merge(validate_curried_morphism(c.cell, b), "cell: ");
  r.merge(validate_curried_morphism(c.inverse, b), "inverse: ");
  r.merge(curried_morphisms_equal(compose_curried_morphism_chain(c.cell, c.inverse),
                                  identity_curried_morphism(c.cell.source), b),
          "inverse after cell: ");
  r.merge(curried_morphisms_equal(compose_curried_morphism_chain(c.inverse, c.cell),
                                  identity_curried_morphism(c.cell.target), b),
          "cell after inverse: ");
  r.finish();
  return r;
}

int run_laws(const Options& o, const std::vector<std::string>& names) {
  Workspace ws = load(o.files);
  std::vector<CurriedPresentation> ps;
  for (const auto& n : names) ps.push_back(need<CurriedPresentation>(ws, n, "a curried presentation"));
  for (size_t i = 0; i + 1 < ps.size(); ++i)
    if (!(ps[i].right == ps[i + 1].left))
      throw Usage(ps[i].name + " and " + ps[i + 1].name + " do not compose");

  int code = kOk;
  json all = json::array();
  auto note = [&](const std::string& what, const ValidationReport& r) {
    code = worst(code, exit_of(r.status));
    if (json_out(o))
      all.push_back({{"law", what}, {"status", to_string(r.status)}});
    else
      print_report(what, "law", r);
  };
  auto note_iso = [&](const std::string& what, const IsoReport& r) {
    code = worst(code, exit_of(r));
    if (json_out(o))
      all.push_back({{"law", what}, {"status", to_string(r.status)}, {"exact", r.exact}});
    else
      std::cout << what << " (law): " << to_string(r.status)
                << (r.status == IsoStatus::Iso && !r.exact ? " on bounded tables" : "")
                << "\n";
  };

  std::set<std::string> cats;
  for (const auto& P : ps) {
    note("left_unitor(" + P.name + ")", invertible(left_unitor(P), o.budget));
    note("right_unitor(" + P.name + ")", invertible(right_unitor(P), o.budget));
    for (const auto* c : {&P.left, &P.right})
      if (cats.insert(c->name).second)
        note_iso("unit(" + c->name + ")", check_unit_iso(*c, o.budget, o.depth));
  }
  for (size_t i = 0; i + 1 < ps.size(); ++i)
    note("triangle(" + ps[i].name + ", " + ps[i + 1].name + ")",
         check_triangle(ps[i], ps[i + 1], o.budget));
  for (size_t i = 0; i + 2 < ps.size(); ++i)
    note("associator(" + ps[i].name + ", " + ps[i + 1].name + ", " + ps[i + 2].name + ")",
         invertible(associator(ps[i], ps[i + 1], ps[i + 2]), o.budget));
  for (size_t i = 0; i + 3 < ps.size(); ++i)
    note("pentagon(" + ps[i].name + ", " + ps[i + 1].name + ", " + ps[i + 2].name +
             ", " + ps[i + 3].name + ")",
         check_pentagon(ps[i], ps[i + 1], ps[i + 2], ps[i + 3], o.budget));
  if (json_out(o)) std::cout << all.dump(2) << "\n";
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Presentations of categories, instances and profunctors"};
  app.require_subcommand(1);
  Options o;

  auto common = [&](CLI::App* c, bool depth) {
    c->add_option("files", o.files, "Input .prof files; none or - reads stdin");
    c->add_option("--format", o.format, "Output format")
        ->check(CLI::IsMember({"text", "json"}));
    c->add_option("--max-len", o.budget.max_len, "Closure path length bound");
    c->add_option("--rounds", o.budget.rounds, "Closure saturation rounds");
    c->add_option("--kb-steps", o.budget.kb_steps, "Completion step budget");
    if (depth) c->add_option("--depth", o.depth, "Table depth");
  };

  std::vector<std::string> entities;
  std::string theory, eq, left, right, entity, unit;
  bool nongen = false, strict = false, conservative = false;

  auto* check = app.add_subcommand("check", "Validate entities or run bridge checks");
  common(check, false);
  check->add_option("--entity", entities, "Entities to check (default all)");
  check->add_flag("--nongenerative", nongen, "Nongenerativity");
  check->add_flag("--strict", strict, "Strict nongenerativity");
  check->add_flag("--conservative", conservative, "Conservativity");

  auto* prove = app.add_subcommand("prove", "Decide or prove an equation");
  common(prove, false);
  prove->add_option("--theory", theory, "Category or instance")->required();
  prove->add_option("--eq", eq, "Equation lhs = rhs")->required();

  auto* compose = app.add_subcommand("compose", "Compose two curried presentations");
  common(compose, false);
  compose->add_option("--left", left, "Left factor")->required();
  compose->add_option("--right", right, "Right factor")->required();

  auto* unc = app.add_subcommand("uncurry", "Uncurry a curried presentation");
  common(unc, false);
  unc->add_option("--entity", entity, "Curried presentation")->required();

  auto* cur = app.add_subcommand("curry", "Curry an uncurried presentation");
  common(cur, false);
  cur->add_option("--entity", entity, "Uncurried presentation")->required();

  auto* sem = app.add_subcommand("semantics", "Bounded table of an entity");
  common(sem, true);
  sem->add_option("--entity", entity, "Category or presentation")->required();

  auto* coend = app.add_subcommand("coend", "Coend of two tables");
  common(coend, true);
  coend->add_option("--left", left, "Left profunctor")->required();
  coend->add_option("--right", right, "Right profunctor")->required();

  auto* iso = app.add_subcommand("iso-check", "Isomorphism checks between tables");
  common(iso, true);
  iso->add_option("--left", left, "Left table (mu when both are curried)");
  iso->add_option("--right", right, "Right table");
  iso->add_option("--entity", entity, "Curried presentation against its uncurrying");
  iso->add_option("--unit", unit, "Category: unit presentation against hom");

  auto* laws = app.add_subcommand("laws", "Coherence suite over composable presentations");
  common(laws, true);
  laws->add_option("--entity", entities, "Composable chain, in order")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }

  try {
    if (*check) return run_check(o, entities, nongen, strict, conservative);
    if (*prove) return run_prove(o, theory, eq);
    if (*compose) return run_compose(o, left, right);
    if (*unc) return run_uncurry(o, entity);
    if (*cur) return run_curry(o, entity);
    if (*sem) return run_semantics(o, entity);
    if (*coend) return run_coend(o, left, right);
    if (*iso) return run_iso(o, left, right, entity, unit);
    if (*laws) return run_laws(o, entities);
  } catch (const Usage& e) {
    std::cerr << "profpres: " << e.what() << "\n";
    return kUsage;
  } catch (const Error& e) {
    std::cerr << "profpres: " << to_string(e.kind()) << ": " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}

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

#include "profpres/core.hpp"

#include <algorithm>
#include <set>

namespace profpres {

const char* to_string(ErrorKind k) {
  switch (k) {
    case ErrorKind::EndpointMismatch: return "EndpointMismatch";
    case ErrorKind::UnknownSymbol: return "UnknownSymbol";
    case ErrorKind::UnknownSort: return "UnknownSort";
    case ErrorKind::CompositionMismatch: return "CompositionMismatch";
    case ErrorKind::ForeignPath: return "ForeignPath";
    case ErrorKind::NonParallel: return "NonParallel";
    case ErrorKind::NonParallelEquation: return "NonParallelEquation";
    case ErrorKind::KindMismatch: return "KindMismatch";
    case ErrorKind::NotParallel: return "NotParallel";
    case ErrorKind::TypeMismatch: return "TypeMismatch";
    case ErrorKind::BaseMismatch: return "BaseMismatch";
    case ErrorKind::FrameMismatch: return "FrameMismatch";
    case ErrorKind::NonGlobular: return "NonGlobular";
    case ErrorKind::NongenerativityUnverified: return "NongenerativityUnverified";
    case ErrorKind::CurryValidationFailed: return "CurryValidationFailed";
    case ErrorKind::MiddleMismatch: return "MiddleMismatch";
    case ErrorKind::DuplicateName: return "DuplicateName";
    case ErrorKind::LexError: return "LexError";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::ResolveError: return "ResolveError";
  }
  return "?";
}

bool CatPresentation::has_sort(const std::string& s) const {
  return std::find(sorts.begin(), sorts.end(), s) != sorts.end();
}

const FunSym* CatPresentation::find_fun(const std::string& f) const {
  for (const auto& fs : funs)
    if (fs.name == f) return &fs;
  return nullptr;
}

std::string to_string(const Path& p) {
  if (p.syms.empty()) return "id(" + p.src + ")";
  std::string out;
  for (size_t i = 0; i < p.syms.size(); ++i) {
    if (i) out += '.';
    out += p.syms[i];
  }
  return out;
}

std::string to_string(const Equation& e) {
  return to_string(e.lhs) + " = " + to_string(e.rhs);
}

Path compose_paths(const Path& p, const Path& q) {
  if (p.tgt != q.src)
    throw Error(ErrorKind::EndpointMismatch,
                "cannot compose " + to_string(p) + " : " + p.src + " -> " +
                    p.tgt + " with " + to_string(q) + " : " + q.src + " -> " +
                    q.tgt);
  Path r{p.src, q.tgt, p.syms};
  r.syms.insert(r.syms.end(), q.syms.begin(), q.syms.end());
  return r;
}

Path typecheck_path(const CatPresentation& c,
                    const std::vector<std::string>& raw,
                    const std::string& start) {
  if (!c.has_sort(start))
    throw Error(ErrorKind::UnknownSort, "unknown sort " + start);
  Path p = Path::identity(start);
  for (const auto& name : raw) {
    const FunSym* f = c.find_fun(name);
    if (!f)
      throw Error(ErrorKind::UnknownSymbol,
                  "unknown symbol " + name + " in " + c.name);
    if (f->src != p.tgt)
      throw Error(ErrorKind::CompositionMismatch,
                  "symbol " + name + " starts at " + f->src + ", expected " +
                      p.tgt);
    p.syms.push_back(name);
    p.tgt = f->tgt;
  }
  return p;
}

Path typecheck_path(const CatPresentation& c,
                    const std::vector<std::string>& raw) {
  if (raw.empty())
    throw Error(ErrorKind::EndpointMismatch, "empty path needs a sort");
  const FunSym* f = c.find_fun(raw.front());
  if (!f)
    throw Error(ErrorKind::UnknownSymbol,
                "unknown symbol " + raw.front() + " in " + c.name);
  return typecheck_path(c, raw, f->src);
}

bool path_in(const CatPresentation& c, const Path& p) {
  try {
    return typecheck_path(c, p.syms, p.src) == p;
  } catch (const Error&) {
    return false;
  }
}

Path apply_morphism(const CatMorphism& f, const Path& p) {
  if (!path_in(f.source, p))
    throw Error(ErrorKind::ForeignPath,
                to_string(p) + " is not a path of " + f.source.name);
  auto sit = f.sort_map.find(p.src);
  if (sit == f.sort_map.end())
    throw Error(ErrorKind::UnknownSort, "sort map misses " + p.src);
  Path out = Path::identity(sit->second);
  for (const auto& s : p.syms) {
    auto it = f.fun_map.find(s);
    if (it == f.fun_map.end())
      throw Error(ErrorKind::UnknownSymbol, "morphism misses symbol " + s);
    out = compose_paths(out, it->second);
  }
  return out;
}

CatMorphism identity_morphism(const CatPresentation& c) {
  CatMorphism m{"id_" + c.name, c, c, {}, {}};
  for (const auto& s : c.sorts) m.sort_map[s] = s;
  for (const auto& f : c.funs) m.fun_map[f.name] = Path{f.src, f.tgt, {f.name}};
  return m;
}

// f then g.
CatMorphism compose_morphisms(const CatMorphism& f, const CatMorphism& g) {
  if (!(f.target == g.source))
    throw Error(ErrorKind::BaseMismatch,
                "cannot compose " + f.name + " with " + g.name);
  CatMorphism m{g.name + "." + f.name, f.source, g.target, {}, {}};
  for (const auto& [s, t] : f.sort_map) m.sort_map[s] = g.sort_map.at(t);
  for (const auto& [s, p] : f.fun_map) m.fun_map[s] = apply_morphism(g, p);
  return m;
}

bool is_identity_morphism(const CatMorphism& f) {
  if (!(f.source == f.target)) return false;
  for (const auto& [s, t] : f.sort_map)
    if (s != t) return false;
  for (const auto& [s, p] : f.fun_map)
    if (p.syms.size() != 1 || p.syms[0] != s) return false;
  return f.sort_map.size() == f.source.sorts.size() &&
         f.fun_map.size() == f.source.funs.size();
}

std::vector<Diagnostic> validate_presentation(const CatPresentation& c) {
  std::vector<Diagnostic> out;
  std::set<std::string> seen;
  for (const auto& s : c.sorts)
    if (!seen.insert(s).second)
      out.push_back({ErrorKind::DuplicateName, "duplicate sort " + s});
  seen.clear();
  for (const auto& f : c.funs) {
    if (!seen.insert(f.name).second)
      out.push_back({ErrorKind::DuplicateName, "duplicate symbol " + f.name});
    if (!c.has_sort(f.src) || !c.has_sort(f.tgt))
      out.push_back({ErrorKind::UnknownSort,
                     "symbol " + f.name + " uses an undeclared sort"});
  }
  for (const auto& e : c.eqs) {
    bool ok = true;
    for (const Path* p : {&e.lhs, &e.rhs}) {
      try {
        Path q = typecheck_path(c, p->syms, p->src);
        if (q.tgt != p->tgt) throw Error(ErrorKind::CompositionMismatch, "");
      } catch (const Error& err) {
        out.push_back({err.kind(), "in equation " + to_string(e) + ": " +
                                       err.what()});
        ok = false;
      }
    }
    if (ok && (e.lhs.src != e.rhs.src || e.lhs.tgt != e.rhs.tgt))
      out.push_back({ErrorKind::NonParallelEquation,
                     "equation " + to_string(e) + " is not parallel"});
  }
  return out;
}

std::vector<Diagnostic> validate_structure(const CatMorphism& f) {
  std::vector<Diagnostic> out;
  for (const auto& s : f.source.sorts) {
    auto it = f.sort_map.find(s);
    if (it == f.sort_map.end() || !f.target.has_sort(it->second))
      out.push_back({ErrorKind::UnknownSort, "sort " + s + " is not mapped"});
  }
  for (const auto& fs : f.source.funs) {
    auto it = f.fun_map.find(fs.name);
    if (it == f.fun_map.end()) {
      out.push_back({ErrorKind::UnknownSymbol, fs.name + " is not mapped"});
      continue;
    }
    const Path& p = it->second;
    auto ss = f.sort_map.find(fs.src), ts = f.sort_map.find(fs.tgt);
    if (!path_in(f.target, p) || ss == f.sort_map.end() ||
        ts == f.sort_map.end() || p.src != ss->second || p.tgt != ts->second)
      out.push_back({ErrorKind::TypeMismatch,
                     "image of " + fs.name + " is ill-typed"});
  }
  return out;
}

}  // namespace profpres

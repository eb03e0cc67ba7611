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

#ifndef PROFPRES_CORE_HPP
#define PROFPRES_CORE_HPP

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace profpres {

enum class ErrorKind {
  EndpointMismatch,
  UnknownSymbol,
  UnknownSort,
  CompositionMismatch,
  ForeignPath,
  NonParallel,
  NonParallelEquation,
  KindMismatch,
  NotParallel,
  TypeMismatch,
  BaseMismatch,
  FrameMismatch,
  NonGlobular,
  NongenerativityUnverified,
  CurryValidationFailed,
  MiddleMismatch,
  DuplicateName,
  LexError,
  ParseError,
  ResolveError,
};

const char* to_string(ErrorKind k);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& msg)
      : std::runtime_error(msg), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

struct FunSym {
  std::string name;
  std::string src;
  std::string tgt;
  bool operator==(const FunSym&) const = default;
};

// A composable list of function symbols. The identity path at a sort has an
// empty symbol list and src == tgt; the sort is kept so that 1_c and 1_d stay
// distinguishable.
struct Path {
  std::string src;
  std::string tgt;
  std::vector<std::string> syms;

  static Path identity(const std::string& sort) { return Path{sort, sort, {}}; }
  bool is_identity() const { return syms.empty(); }
  size_t length() const { return syms.size(); }
  bool operator==(const Path&) const = default;
  auto operator<=>(const Path&) const = default;
};

struct Equation {
  Path lhs;
  Path rhs;
  bool operator==(const Equation&) const = default;
};

struct CatPresentation {
  std::string name;
  std::vector<std::string> sorts;
  std::vector<FunSym> funs;
  std::vector<Equation> eqs;
  // Optional override of the symbol order used by completion.
  std::vector<std::string> order;

  bool has_sort(const std::string& s) const;
  const FunSym* find_fun(const std::string& f) const;
  bool operator==(const CatPresentation&) const = default;
};

struct CatMorphism {
  std::string name;
  CatPresentation source;
  CatPresentation target;
  std::map<std::string, std::string> sort_map;
  std::map<std::string, Path> fun_map;
  bool operator==(const CatMorphism&) const = default;
};

struct Diagnostic {
  ErrorKind kind;
  std::string message;
};

std::string to_string(const Path& p);
std::string to_string(const Equation& e);

Path compose_paths(const Path& p, const Path& q);
Path typecheck_path(const CatPresentation& c,
                    const std::vector<std::string>& raw,
                    const std::string& start);
// Resolves a non-empty symbol list, taking the start sort from the first
// symbol.
Path typecheck_path(const CatPresentation& c,
                    const std::vector<std::string>& raw);
bool path_in(const CatPresentation& c, const Path& p);

Path apply_morphism(const CatMorphism& f, const Path& p);
CatMorphism identity_morphism(const CatPresentation& c);
CatMorphism compose_morphisms(const CatMorphism& f, const CatMorphism& g);
bool is_identity_morphism(const CatMorphism& f);

std::vector<Diagnostic> validate_presentation(const CatPresentation& c);
std::vector<Diagnostic> validate_structure(const CatMorphism& f);

}  // namespace profpres

#endif  // PROFPRES_CORE_HPP

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

#ifndef PROFPRES_DSL_HPP
#define PROFPRES_DSL_HPP

#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "profpres/core.hpp"
#include "profpres/presentations.hpp"

namespace profpres {

struct SourceSpan {
  std::string file;
  int line = 1;
  int col = 1;
  int end_line = 1;
  int end_col = 1;  // exclusive
};

std::string to_string(const SourceSpan& s);

class DslError : public Error {
 public:
  DslError(ErrorKind kind, const std::string& msg, SourceSpan span)
      : Error(kind, to_string(span) + ": " + msg), span_(std::move(span)) {}
  const SourceSpan& span() const { return span_; }

 private:
  SourceSpan span_;
};

using Entity =
    std::variant<CatPresentation, InstancePresentation, UncurriedPresentation,
                 CurriedPresentation, CatMorphism, InstanceMorphism,
                 UncurriedMorphism, CurriedMorphism>;

const std::string& entity_name(const Entity& e);
const char* entity_kind(const Entity& e);

struct Workspace {
  std::vector<std::pair<std::string, Entity>> entities;

  const Entity* find(const std::string& name) const;
  template <class T>
  const T* get(const std::string& name) const {
    const Entity* e = find(name);
    return e ? std::get_if<T>(e) : nullptr;
  }
  void add(Entity e);
  bool operator==(const Workspace&) const = default;
};

Workspace parse_workspace(const std::string& text,
                          const std::string& file = "<input>");
// Parses additional text against an existing workspace.
void parse_into(Workspace& ws, const std::string& text,
                const std::string& file = "<input>");

// Path text against a presentation, e.g. "f.g" or "id(*)".
Path parse_path(const CatPresentation& c, const std::string& text);
Term parse_term(const InstancePresentation& i, const std::string& text);
CrossPath parse_cross_path(const UncurriedPresentation& u,
                           const std::string& text);

std::string render(const Entity& e);
std::string render(const Workspace& ws);

std::string export_json(const Entity& e);
std::string export_json(const Workspace& ws);

}  // namespace profpres

#endif  // PROFPRES_DSL_HPP

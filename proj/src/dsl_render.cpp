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

#include <sstream>

#include "json.hpp"
#include "profpres/dsl.hpp"

namespace profpres {
namespace {

using json = nlohmann::ordered_json;

std::string join(const std::vector<std::string>& xs) {
  std::string out;
  for (size_t i = 0; i < xs.size(); ++i) out += (i ? ", " : "") + xs[i];
  return out;
}

void body(std::ostringstream& os, const InstancePresentation& i,
          const std::string& indent) {
  for (const auto& g : i.gens)
    os << indent << "gen " << g.name << " : " << g.sort << ";\n";
  for (const auto& e : i.eqs)
    os << indent << "eq " << to_string(e.lhs) << " = " << to_string(e.rhs)
       << ";\n";
}

void gen_map(std::ostringstream& os, const GenMap& m,
             const InstancePresentation& src, const std::string& indent) {
  for (const auto& g : src.gens) {
    auto it = m.find(g.name);
    if (it != m.end())
      os << indent << g.name << " -> " << to_string(it->second) << ";\n";
  }
}

struct Renderer {
  std::ostringstream os;

  void operator()(const CatPresentation& c) {
    os << "category " << c.name << " {\n";
    if (!c.sorts.empty()) os << "  sorts " << join(c.sorts) << ";\n";
    for (const auto& f : c.funs)
      os << "  fun " << f.name << " : " << f.src << " -> " << f.tgt << ";\n";
    for (const auto& e : c.eqs) os << "  eq " << to_string(e) << ";\n";
    if (!c.order.empty()) os << "  order " << join(c.order) << ";\n";
    os << "}\n";
  }

  void operator()(const InstancePresentation& i) {
    os << "instance " << i.name << " on " << i.base.name << " {\n";
    body(os, i, "  ");
    os << "}\n";
  }

  void operator()(const UncurriedPresentation& u) {
    os << "uncurried " << u.name << " : " << u.left.name << " -> "
       << u.right.name << " {\n";
    for (const auto& p : u.pros)
      os << "  pro " << p.name << " : " << p.src << " -> " << p.tgt << ";\n";
    for (const auto& e : u.eqs)
      os << "  eq " << to_string(e.lhs) << " = " << to_string(e.rhs) << ";\n";
    os << "}\n";
  }

  void operator()(const CurriedPresentation& p) {
    os << "curried " << p.name << " : " << p.left.name << " -> "
       << p.right.name << " {\n";
    for (const auto& s : p.left.sorts) {
      auto it = p.at.find(s);
      if (it == p.at.end()) continue;
      os << "  at " << s << " {\n";
      body(os, it->second, "    ");
      os << "  }\n";
    }
    for (const auto& f : p.left.funs) {
      auto it = p.act.find(f.name);
      if (it == p.act.end()) continue;
      os << "  act " << f.name << " {\n";
      gen_map(os, it->second, p.at.at(f.tgt), "    ");
      os << "  }\n";
    }
    os << "}\n";
  }

  void operator()(const CatMorphism& m) {
    os << "morphism " << m.name << " : " << m.source.name << " -> "
       << m.target.name << " {\n";
    for (const auto& s : m.source.sorts) {
      auto it = m.sort_map.find(s);
      if (it != m.sort_map.end() && it->second != s)
        os << "  " << s << " -> " << it->second << ";\n";
    }
    for (const auto& f : m.source.funs) {
      auto it = m.fun_map.find(f.name);
      if (it != m.fun_map.end())
        os << "  " << f.name << " -> " << to_string(it->second) << ";\n";
    }
    os << "}\n";
  }

  void operator()(const InstanceMorphism& m) {
    if (!is_identity_morphism(m.base))
      throw Error(ErrorKind::BaseMismatch,
                  m.name + " changes base; the text syntax has no form for it");
    os << "morphism " << m.name << " : " << m.source.name << " -> "
       << m.target.name << " {\n";
    gen_map(os, m.gen_map, m.source, "  ");
    os << "}\n";
  }

  void operator()(const UncurriedMorphism& m) {
    os << "morphism " << m.name << " : " << m.source.name << " -> "
       << m.target.name << " {\n";
    for (const auto& p : m.source.pros) {
      auto it = m.pro_map.find(p.name);
      if (it != m.pro_map.end())
        os << "  " << p.name << " -> " << to_string(it->second) << ";\n";
    }
    os << "}\n";
  }

  void operator()(const CurriedMorphism& m) {
    if (!m.globular())
      throw Error(ErrorKind::NonGlobular,
                  m.name + " moves its frames; the text syntax has no form for it");
    os << "morphism " << m.name << " : " << m.source.name << " -> "
       << m.target.name << " {\n";
    for (const auto& s : m.source.left.sorts) {
      auto it = m.components.find(s);
      if (it == m.components.end()) continue;
      os << "  at " << s << " {\n";
      gen_map(os, it->second, m.source.at.at(s), "    ");
      os << "  }\n";
    }
    os << "}\n";
  }
};

json path_json(const Path& p) {
  return json{{"src", p.src}, {"tgt", p.tgt}, {"syms", p.syms}};
}

json cross_json(const CrossPath& c) {
  return json{{"left", path_json(c.left)},
              {"pro", c.pro},
              {"right", path_json(c.right)}};
}

json term_json(const Term& t) {
  return json{{"gen", t.gen}, {"path", path_json(t.path)}};
}

json cat_json(const CatPresentation& c) {
  json funs = json::array(), eqs = json::array();
  for (const auto& f : c.funs)
    funs.push_back({{"name", f.name}, {"src", f.src}, {"tgt", f.tgt}});
  for (const auto& e : c.eqs)
    eqs.push_back({{"lhs", path_json(e.lhs)}, {"rhs", path_json(e.rhs)}});
  json j{{"kind", "category"},
         {"name", c.name},
         {"sorts", c.sorts},
         {"funs", funs},
         {"eqs", eqs}};
  if (!c.order.empty()) j["order"] = c.order;
  return j;
}

json inst_body(const InstancePresentation& i) {
  json gens = json::array(), eqs = json::array();
  for (const auto& g : i.gens) gens.push_back({{"name", g.name}, {"sort", g.sort}});
  for (const auto& e : i.eqs)
    eqs.push_back({{"lhs", term_json(e.lhs)}, {"rhs", term_json(e.rhs)}});
  return json{{"gens", gens}, {"eqs", eqs}};
}

json gen_map_json(const GenMap& m, const InstancePresentation& src) {
  json out = json::array();
  for (const auto& g : src.gens) {
    auto it = m.find(g.name);
    if (it != m.end())
      out.push_back({{"gen", g.name}, {"term", term_json(it->second)}});
  }
  return out;
}

json cat_morphism_json(const CatMorphism& m) {
  json sorts = json::array(), funs = json::array();
  for (const auto& s : m.source.sorts)
    if (m.sort_map.count(s))
      sorts.push_back({{"sort", s}, {"image", m.sort_map.at(s)}});
  for (const auto& f : m.source.funs)
    if (m.fun_map.count(f.name))
      funs.push_back({{"fun", f.name}, {"image", path_json(m.fun_map.at(f.name))}});
  return json{{"kind", "category_morphism"},
              {"name", m.name},
              {"source", m.source.name},
              {"target", m.target.name},
              {"sort_map", sorts},
              {"fun_map", funs}};
}

struct Exporter {
  json operator()(const CatPresentation& c) { return cat_json(c); }

  json operator()(const InstancePresentation& i) {
    json j{{"kind", "instance"}, {"name", i.name}, {"base", i.base.name}};
    j.update(inst_body(i));
    return j;
  }

  json operator()(const UncurriedPresentation& u) {
    json pros = json::array(), eqs = json::array();
    for (const auto& p : u.pros)
      pros.push_back({{"name", p.name}, {"src", p.src}, {"tgt", p.tgt}});
    for (const auto& e : u.eqs)
      eqs.push_back({{"lhs", cross_json(e.lhs)}, {"rhs", cross_json(e.rhs)}});
    return json{{"kind", "uncurried"}, {"name", u.name},
                {"left", u.left.name}, {"right", u.right.name},
                {"pros", pros},        {"eqs", eqs}};
  }

  json operator()(const CurriedPresentation& p) {
    json at = json::array(), act = json::array();
    for (const auto& s : p.left.sorts) {
      auto it = p.at.find(s);
      if (it == p.at.end()) continue;
      json a{{"sort", s}};
      a.update(inst_body(it->second));
      at.push_back(a);
    }
    for (const auto& f : p.left.funs) {
      auto it = p.act.find(f.name);
      if (it == p.act.end()) continue;
      act.push_back({{"fun", f.name}, {"map", gen_map_json(it->second, p.at.at(f.tgt))}});
    }
    return json{{"kind", "curried"}, {"name", p.name}, {"left", p.left.name},
                {"right", p.right.name}, {"at", at}, {"act", act}};
  }

  json operator()(const CatMorphism& m) { return cat_morphism_json(m); }

  json operator()(const InstanceMorphism& m) {
    return json{{"kind", "instance_morphism"}, {"name", m.name},
                {"source", m.source.name},     {"target", m.target.name},
                {"base", cat_morphism_json(m.base)},
                {"map", gen_map_json(m.gen_map, m.source)}};
  }

  json operator()(const UncurriedMorphism& m) {
    json map = json::array();
    for (const auto& p : m.source.pros)
      if (m.pro_map.count(p.name))
        map.push_back({{"pro", p.name}, {"image", cross_json(m.pro_map.at(p.name))}});
    return json{{"kind", "uncurried_morphism"}, {"name", m.name},
                {"source", m.source.name},      {"target", m.target.name},
                {"map", map}};
  }

  json operator()(const CurriedMorphism& m) {
    json comps = json::array();
    for (const auto& s : m.source.left.sorts) {
      auto it = m.components.find(s);
      if (it == m.components.end()) continue;
      comps.push_back({{"sort", s}, {"map", gen_map_json(it->second, m.source.at.at(s))}});
    }
    return json{{"kind", "curried_morphism"}, {"name", m.name},
                {"source", m.source.name},    {"target", m.target.name},
                {"f0", cat_morphism_json(m.f0)},
                {"f1", cat_morphism_json(m.f1)},
                {"components", comps}};
  }
};

}  // namespace

std::string render(const Entity& e) {
  Renderer r;
  std::visit(r, e);
  return r.os.str();
}

std::string render(const Workspace& ws) {
  std::string out;
  for (size_t i = 0; i < ws.entities.size(); ++i)
    out += (i ? "\n" : "") + render(ws.entities[i].second);
  return out;
}

std::string export_json(const Entity& e) {
  return std::visit(Exporter{}, e).dump(2);
}

std::string export_json(const Workspace& ws) {
  json all = json::array();
  for (const auto& [n, e] : ws.entities) all.push_back(std::visit(Exporter{}, e));
  return json{{"entities", all}}.dump(2);
}

}  // namespace profpres

// Small presentations built by hand, independent of the parser.

#ifndef PROFPRES_TESTS_FIXTURES_HPP
#define PROFPRES_TESTS_FIXTURES_HPP

#include <string>
#include <vector>

#include "profpres/core.hpp"

namespace fixtures {

using profpres::CatMorphism;
using profpres::CatPresentation;
using profpres::Equation;
using profpres::FunSym;
using profpres::Path;

inline Path loop(const std::string& sort, std::vector<std::string> syms) {
  return Path{sort, sort, std::move(syms)};
}

// Monoid presentation on the single sort *.
inline CatPresentation monoid(const std::string& name,
                              std::vector<std::string> gens,
                              std::vector<std::pair<std::vector<std::string>,
                                                    std::vector<std::string>>>
                                  eqs = {}) {
  CatPresentation c;
  c.name = name;
  c.sorts = {"*"};
  for (auto& g : gens) c.funs.push_back(FunSym{g, "*", "*"});
  for (auto& [l, r] : eqs) c.eqs.push_back({loop("*", l), loop("*", r)});
  return c;
}

inline CatPresentation M() { return monoid("M", {"f", "g"}, {{{"f", "g"}, {"g", "f"}}}); }
inline CatPresentation N() { return monoid("N", {"s"}); }
inline CatPresentation E() { return monoid("E", {}); }
inline CatPresentation O() { return monoid("O", {"t"}); }

inline CatMorphism morphism(const std::string& name, const CatPresentation& a,
                            const CatPresentation& b,
                            std::vector<std::pair<std::string,
                                                  std::vector<std::string>>>
                                images) {
  CatMorphism m{name, a, b, {{"*", "*"}}, {}};
  for (auto& [f, p] : images) m.fun_map[f] = loop("*", p);
  return m;
}

}  // namespace fixtures

#endif  // PROFPRES_TESTS_FIXTURES_HPP

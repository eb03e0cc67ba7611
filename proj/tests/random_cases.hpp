// Random small curried presentations over finite categories.

#ifndef PROFPRES_TESTS_RANDOM_CASES_HPP
#define PROFPRES_TESTS_RANDOM_CASES_HPP

#include <optional>
#include <random>
#include <string>
#include <vector>

#include "profpres/presentations.hpp"

namespace random_cases {

using namespace profpres;

// Finite categories: arrows only go up in sort index; loops are idempotent.
inline CatPresentation random_category(std::mt19937& rng,
                                       const std::string& name, int sorts) {
  CatPresentation c;
  c.name = name;
  for (int i = 0; i < sorts; ++i) c.sorts.push_back(name + std::to_string(i));
  std::bernoulli_distribution coin(0.5);
  for (int i = 0; i < sorts; ++i) {
    if (coin(rng)) {
      std::string e = "e" + name + std::to_string(i);
      c.funs.push_back({e, c.sorts[i], c.sorts[i]});
      c.eqs.push_back({Path{c.sorts[i], c.sorts[i], {e, e}},
                       Path{c.sorts[i], c.sorts[i], {e}}});
    }
    for (int j = i + 1; j < sorts; ++j)
      if (coin(rng))
        c.funs.push_back({"h" + name + std::to_string(i) + std::to_string(j),
                          c.sorts[i], c.sorts[j]});
  }
  return c;
}

inline Path random_walk(std::mt19937& rng, const CatPresentation& c,
                        const std::string& from, int max_len) {
  Path p = Path::identity(from);
  std::uniform_int_distribution<int> len(0, max_len);
  for (int n = len(rng); n > 0; --n) {
    std::vector<const FunSym*> out;
    for (const auto& f : c.funs)
      if (f.src == p.tgt) out.push_back(&f);
    if (out.empty()) break;
    const FunSym* f = out[std::uniform_int_distribution<size_t>(0, out.size() - 1)(rng)];
    p.syms.push_back(f->name);
    p.tgt = f->tgt;
  }
  return p;
}

inline InstancePresentation random_instance(std::mt19937& rng,
                                            const CatPresentation& d,
                                            const std::string& name) {
  InstancePresentation i;
  i.name = name;
  i.base = d;
  std::uniform_int_distribution<int> ng(1, 3), ne(0, 2);
  std::uniform_int_distribution<size_t> sort(0, d.sorts.size() - 1);
  int n = ng(rng);
  for (int k = 0; k < n; ++k)
    i.gens.push_back({name + "g" + std::to_string(k), d.sorts[sort(rng)]});
  for (int k = ne(rng); k > 0; --k) {
    std::uniform_int_distribution<size_t> pick(0, i.gens.size() - 1);
    const auto& a = i.gens[pick(rng)];
    const auto& b = i.gens[pick(rng)];
    Path pa = random_walk(rng, d, a.sort, 2);
    Path pb = random_walk(rng, d, b.sort, 2);
    if (pa.tgt != pb.tgt) continue;
    Term ta{a.name, pa}, tb{b.name, pb};
    if (ta != tb) i.eqs.push_back({ta, tb});
  }
  return i;
}

inline std::optional<CurriedPresentation> random_curried(
    std::mt19937& rng, const CatPresentation& c, const CatPresentation& d,
    const std::string& name) {
  CurriedPresentation p;
  p.name = name;
  p.left = c;
  p.right = d;
  for (const auto& s : c.sorts) p.at[s] = random_instance(rng, d, name + s);
  for (const auto& f : c.funs) {
    const auto& src = p.at[f.src];
    GenMap m;
    for (const auto& g : p.at[f.tgt].gens) {
      std::vector<Term> options;
      for (const auto& h : src.gens)
        for (int t = 0; t < 3; ++t) {
          Path w = random_walk(rng, d, h.sort, 2);
          if (w.tgt == g.sort) options.push_back({h.name, w});
        }
      if (options.empty()) return std::nullopt;
      m[g.name] = options[std::uniform_int_distribution<size_t>(0, options.size() - 1)(rng)];
    }
    p.act[f.name] = m;
  }
  if (!validate_structure(p).empty()) return std::nullopt;
  if (validate_curried(p, Budget{}).status != Validity::Valid) return std::nullopt;
  return p;
}

}  // namespace random_cases

#endif  // PROFPRES_TESTS_RANDOM_CASES_HPP

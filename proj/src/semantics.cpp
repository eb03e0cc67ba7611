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

#include "profpres/semantics.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>

#include "json.hpp"
#include "profpres/bridge.hpp"
#include "profpres/compose.hpp"

namespace profpres {
namespace {

// Enumerates path classes from a set of start sorts. With a completed
// rewrite system the classes are the irreducible words; these are closed
// under factors, so the enumeration is exact once no kept word of weight
// depth+1 is irreducible. Otherwise classes come from the bounded closure.
class Saturator {
 public:
  Saturator(const Theory& t, const Budget& b) : pv_(t, b) {
    exact = pv_.completion().has_value();
    const auto& funs = pv_.theory().pres.funs;
    for (size_t i = 0; i < funs.size(); ++i)
      if (pv_.theory().fun_part[i] == Part::Pro) pro_.insert(funs[i].name);
  }

  int weight(const Path& p) const {
    int w = 0;
    for (const auto& s : p.syms) w += !pro_.count(s);
    return w;
  }

  void run(const std::vector<std::string>& starts, int depth,
           const std::function<bool(const Path&)>& keep) {
    const auto& funs = pv_.theory().pres.funs;
    int max_len = exact ? -1 : pv_.budget().max_len;
    std::deque<Path> queue;
    for (const auto& s : starts) queue.push_back(Path::identity(s));
    while (!queue.empty()) {
      Path w = queue.front();
      queue.pop_front();
      int wt = weight(w);
      if (wt > depth) {
        if (keep(w)) frontier_empty = false;
      } else {
        record(w);
      }
      for (const auto& f : funs) {
        if (f.src != w.tgt) continue;
        Path n = w;
        n.syms.push_back(f.name);
        n.tgt = f.tgt;
        if (weight(n) > depth + 1) continue;
        if (max_len >= 0 && static_cast<int>(n.length()) > max_len) continue;
        if (exact && *pv_.normal_form(n) != n) continue;
        queue.push_back(n);
      }
    }
    if (!exact) frontier_empty = false;
  }

  int lookup(const Path& p) const {
    auto it = index_.find(key(p));
    return it == index_.end() ? -1 : it->second;
  }

  std::vector<Path> reps;
  bool exact = false;
  bool frontier_empty = true;

 private:
  std::string key(const Path& p) const {
    if (exact) return p.src + "|" + to_string(*pv_.normal_form(p));
    int c = pv_.closure().class_of(p);
    if (c < 0) return "?" + p.src + "|" + to_string(p);
    return "#" + std::to_string(c);
  }

  void record(const Path& w) {
    std::string k = key(w);
    auto it = index_.find(k);
    if (it == index_.end()) {
      index_[k] = static_cast<int>(reps.size());
      reps.push_back(w);
    } else if (shortlex_compare(pv_.theory(), w, reps[it->second]) < 0) {
      reps[it->second] = w;
    }
  }

  Prover pv_;
  std::set<std::string> pro_;
  std::map<std::string, int> index_;
};

int index_of(const std::vector<std::string>& xs, const std::string& x) {
  auto it = std::find(xs.begin(), xs.end(), x);
  return static_cast<int>(it - xs.begin());
}

// Both actions by concatenation and lookup.
void finish_table(ProfunctorTable& t) {
  const int ne = static_cast<int>(t.elems.size());
  t.lact.assign(t.left.morphs.size(), std::vector<int>(ne, -1));
  t.ract.assign(ne, std::vector<int>(t.right.morphs.size(), -1));
  if (!t.locate) return;
  for (size_t m = 0; m < t.left.morphs.size(); ++m) {
    const Morph& mm = t.left.morphs[m];
    for (int e = 0; e < ne; ++e)
      if (mm.tgt == t.elems[e].c)
        t.lact[m][e] = t.find(prepend(mm.rep, t.elems[e].rep));
  }
  for (int e = 0; e < ne; ++e)
    for (size_t m = 0; m < t.right.morphs.size(); ++m) {
      const Morph& mm = t.right.morphs[m];
      if (mm.src == t.elems[e].d)
        t.ract[e][m] = t.find(extend(t.elems[e].rep, mm.rep));
    }
}

// Stable sort by objects; returns old index -> new index.
std::vector<int> sort_elems(ProfunctorTable& t) {
  std::vector<int> order(t.elems.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    const Elem& x = t.elems[a];
    const Elem& y = t.elems[b];
    return std::pair(index_of(t.left.objects, x.c), index_of(t.right.objects, x.d)) <
           std::pair(index_of(t.left.objects, y.c), index_of(t.right.objects, y.d));
  });
  std::vector<Elem> sorted;
  std::vector<int> renum(order.size());
  for (size_t i = 0; i < order.size(); ++i) {
    renum[order[i]] = static_cast<int>(i);
    sorted.push_back(std::move(t.elems[order[i]]));
  }
  t.elems = std::move(sorted);
  return renum;
}

using json = nlohmann::ordered_json;

json category_json(const FiniteCategoryTable& t) {
  json morphs = json::array();
  for (const auto& m : t.morphs)
    morphs.push_back({{"src", m.src}, {"tgt", m.tgt}, {"rep", to_string(m.rep)}});
  return json{{"objects", t.objects},
              {"morphs", morphs},
              {"compose", t.compose},
              {"stabilized", t.stabilized},
              {"depth", t.depth}};
}

struct IsoFail {
  IsoReport& r;
  bool exact;
  bool failed = false;
  void operator()(const std::string& why) {
    if (failed) return;
    failed = true;
    r.status = exact ? IsoStatus::NotIso : IsoStatus::Inconclusive;
    r.witness = why;
  }
};

void check_same_base(const FiniteCategoryTable& a, const FiniteCategoryTable& b) {
  if (a.objects != b.objects || a.morphs.size() != b.morphs.size())
    throw Error(ErrorKind::BaseMismatch, "tables have different base categories");
  for (const auto& m : a.morphs)
    if (b.find(m.rep) < 0)
      throw Error(ErrorKind::BaseMismatch,
                  "base morphism " + to_string(m.rep) + " missing");
}

}  // namespace

int FiniteCategoryTable::find(const Path& p) const {
  if (locate) return locate(p);
  for (size_t i = 0; i < morphs.size(); ++i)
    if (morphs[i].rep == p) return static_cast<int>(i);
  return -1;
}

std::vector<int> FiniteCategoryTable::hom(const std::string& a,
                                          const std::string& b) const {
  std::vector<int> out;
  for (size_t i = 0; i < morphs.size(); ++i)
    if (morphs[i].src == a && morphs[i].tgt == b) out.push_back(static_cast<int>(i));
  return out;
}

std::vector<int> ProfunctorTable::at(const std::string& c,
                                     const std::string& d) const {
  std::vector<int> out;
  for (size_t i = 0; i < elems.size(); ++i)
    if (elems[i].c == c && elems[i].d == d) out.push_back(static_cast<int>(i));
  return out;
}

FiniteCategoryTable saturate_theory(const Theory& t, const Budget& b, int depth) {
  auto sat = std::make_shared<Saturator>(t, b);
  sat->run(t.pres.sorts, depth, [](const Path&) { return true; });
  FiniteCategoryTable out;
  out.objects = t.pres.sorts;
  out.depth = depth;
  out.stabilized = sat->exact && sat->frontier_empty;
  for (const auto& r : sat->reps) out.morphs.push_back({r.src, r.tgt, r});
  for (const auto& s : out.objects) out.identity[s] = sat->lookup(Path::identity(s));
  out.locate = [sat](const Path& p) { return sat->lookup(p); };
  const size_t n = out.morphs.size();
  out.compose.assign(n, std::vector<int>(n, -1));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j)
      if (out.morphs[i].tgt == out.morphs[j].src)
        out.compose[i][j] =
            sat->lookup(compose_paths(out.morphs[i].rep, out.morphs[j].rep));
  return out;
}

ProfunctorTable profunctor_table(const UncurriedPresentation& u, const Budget& b,
                                 int depth) {
  ProfunctorTable t;
  t.depth = depth;
  t.left = saturate_theory(Theory::of(u.left), b, depth);
  t.right = saturate_theory(Theory::of(u.right), b, depth);
  auto col = std::make_shared<Collage>(build_collage(u));
  auto sat = std::make_shared<Saturator>(col->theory, b);
  sat->run(col->left_sorts, depth,
           [&](const Path& p) { return col->is_cross(p); });
  t.stabilized = sat->exact && sat->frontier_empty;

  auto rep_to_elem = std::make_shared<std::vector<int>>(sat->reps.size(), -1);
  for (size_t r = 0; r < sat->reps.size(); ++r) {
    if (!col->is_cross(sat->reps[r])) continue;
    CrossPath c = col->to_cross(sat->reps[r]);
    (*rep_to_elem)[r] = static_cast<int>(t.elems.size());
    t.elems.push_back({c.src(), c.tgt(), to_string(c), c,
                       static_cast<int>(c.left.length() + c.right.length()),
                       {}});
  }
  std::vector<int> renum = sort_elems(t);
  for (auto& e : *rep_to_elem)
    if (e >= 0) e = renum[e];
  t.locate = [col, sat, rep_to_elem](const CrossPath& c) {
    int r = sat->lookup(col->from_cross(c));
    return r < 0 ? -1 : (*rep_to_elem)[r];
  };
  finish_table(t);
  return t;
}

ProfunctorTable profunctor_table(const CurriedPresentation& p, const Budget& b,
                                 int depth) {
  struct Fiber {
    Collage col;
    std::shared_ptr<Saturator> sat;
    std::vector<int> rep_to_elem;
  };
  ProfunctorTable t;
  t.depth = depth;
  t.left = saturate_theory(Theory::of(p.left), b, depth);
  t.right = saturate_theory(Theory::of(p.right), b, depth);
  t.stabilized = true;

  auto fibers = std::make_shared<std::map<std::string, Fiber>>();
  for (const auto& c : p.left.sorts) {
    Fiber f{build_collage(as_uncurried(p.at.at(c))), nullptr, {}};
    f.sat = std::make_shared<Saturator>(f.col.theory, b);
    const Collage& col = f.col;
    f.sat->run(col.left_sorts, depth,
               [&](const Path& x) { return col.is_cross(x); });
    t.stabilized = t.stabilized && f.sat->exact && f.sat->frontier_empty;
    f.rep_to_elem.assign(f.sat->reps.size(), -1);
    for (size_t r = 0; r < f.sat->reps.size(); ++r) {
      if (!col.is_cross(f.sat->reps[r])) continue;
      Term s = path_to_term(col, f.sat->reps[r]);
      f.rep_to_elem[r] = static_cast<int>(t.elems.size());
      t.elems.push_back({c, s.type(), to_string(s),
                         CrossPath{Path::identity(c), s.gen, s.path},
                         static_cast<int>(s.path.length()), {}});
    }
    fibers->emplace(c, std::move(f));
  }
  std::vector<int> renum = sort_elems(t);
  for (auto& [c, f] : *fibers)
    for (auto& e : f.rep_to_elem)
      if (e >= 0) e = renum[e];
  t.locate = [fibers](const CrossPath& x) {
    if (!x.left.is_identity()) return -1;
    auto it = fibers->find(x.left.src);
    if (it == fibers->end()) return -1;
    const Fiber& f = it->second;
    int r = f.sat->lookup(term_to_path(f.col, Term{x.pro, x.right}));
    return r < 0 ? -1 : f.rep_to_elem[r];
  };

  // The left action goes through the presentation's action, so it is filled
  // here rather than by prepending.
  finish_table(t);
  for (size_t m = 0; m < t.left.morphs.size(); ++m) {
    const Morph& mm = t.left.morphs[m];
    for (size_t e = 0; e < t.elems.size(); ++e) {
      const Elem& el = t.elems[e];
      if (mm.tgt != el.c) {
        t.lact[m][e] = -1;
        continue;
      }
      Term s = act_path(p, mm.rep, Term{el.rep.pro, el.rep.right});
      t.lact[m][e] = t.find(CrossPath{Path::identity(mm.src), s.gen, s.path});
    }
  }
  return t;
}

ProfunctorTable hom_table(const FiniteCategoryTable& c) {
  ProfunctorTable t;
  t.left = c;
  t.right = c;
  t.depth = c.depth;
  t.stabilized = c.stabilized;
  for (const auto& m : c.morphs)
    t.elems.push_back({m.src, m.tgt, to_string(m.rep),
                       CrossPath{Path::identity(m.src), "", m.rep},
                       static_cast<int>(m.rep.length()), {}});
  t.lact = c.compose;
  t.ract = c.compose;
  t.locate = [c](const CrossPath& x) {
    return c.find(compose_paths(x.left, x.right));
  };
  return t;
}

ProfunctorTable coend_compose(const ProfunctorTable& tp,
                              const ProfunctorTable& tq, int bound) {
  if (tp.right.objects != tq.left.objects)
    throw Error(ErrorKind::MiddleMismatch,
                "the middle categories of the two tables differ");
  const bool exact = tp.stabilized && tq.stabilized;
  if (bound < 0) bound = std::min(tp.depth, tq.depth);

  std::vector<std::pair<int, int>> pairs;
  std::map<std::pair<int, int>, int> pid;
  for (size_t s = 0; s < tp.elems.size(); ++s)
    for (size_t q = 0; q < tq.elems.size(); ++q) {
      if (tp.elems[s].d != tq.elems[q].c) continue;
      if (!exact && tp.elems[s].weight + tq.elems[q].weight > bound) continue;
      pid[{static_cast<int>(s), static_cast<int>(q)}] = static_cast<int>(pairs.size());
      pairs.push_back({static_cast<int>(s), static_cast<int>(q)});
    }

  std::vector<int> parent(pairs.size());
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> root = [&](int x) {
    return parent[x] == x ? x : parent[x] = root(parent[x]);
  };
  for (size_t m = 0; m < tp.right.morphs.size(); ++m) {
    const Morph& mm = tp.right.morphs[m];
    if (mm.rep.is_identity()) continue;
    int mq = tq.left.find(mm.rep);
    if (mq < 0) continue;
    for (size_t s = 0; s < tp.elems.size(); ++s) {
      if (tp.elems[s].d != mm.src) continue;
      int sm = tp.ract[s][m];
      if (sm < 0) continue;
      for (size_t q = 0; q < tq.elems.size(); ++q) {
        if (tq.elems[q].c != mm.tgt) continue;
        int mt = tq.lact[mq][q];
        if (mt < 0) continue;
        auto a = pid.find({sm, static_cast<int>(q)});
        auto b = pid.find({static_cast<int>(s), mt});
        if (a == pid.end() || b == pid.end()) continue;
        int ra = root(a->second), rb = root(b->second);
        if (ra != rb) parent[std::max(ra, rb)] = std::min(ra, rb);
      }
    }
  }

  ProfunctorTable t;
  t.left = tp.left;
  t.right = tq.right;
  t.stabilized = exact;
  t.depth = bound;
  std::map<int, int> cls;
  std::vector<int> of_pair(pairs.size());
  for (size_t i = 0; i < pairs.size(); ++i) {
    int r = root(static_cast<int>(i));
    auto it = cls.find(r);
    if (it == cls.end()) {
      it = cls.emplace(r, static_cast<int>(t.elems.size())).first;
      const Elem& s = tp.elems[pairs[i].first];
      const Elem& q = tq.elems[pairs[i].second];
      t.elems.push_back({s.c, q.d, "<" + s.label + " | " + q.label + ">",
                         CrossPath{Path::identity(s.c), "", Path::identity(q.d)},
                         s.weight + q.weight, {}});
    }
    Elem& e = t.elems[it->second];
    e.pairs.push_back(pairs[i]);
    e.weight = std::min(e.weight, tp.elems[pairs[i].first].weight +
                                      tq.elems[pairs[i].second].weight);
    of_pair[i] = it->second;
  }
  std::vector<int> renum = sort_elems(t);
  for (auto& x : of_pair) x = renum[x];

  auto class_of = [&](int s, int q) {
    auto it = pid.find({s, q});
    return it == pid.end() ? -1 : of_pair[it->second];
  };
  const int ne = static_cast<int>(t.elems.size());
  t.lact.assign(t.left.morphs.size(), std::vector<int>(ne, -1));
  t.ract.assign(ne, std::vector<int>(t.right.morphs.size(), -1));
  for (size_t m = 0; m < t.left.morphs.size(); ++m)
    for (int e = 0; e < ne; ++e) {
      if (t.left.morphs[m].tgt != t.elems[e].c) continue;
      for (auto [s, q] : t.elems[e].pairs) {
        int ms = tp.lact[m][s];
        int c = ms < 0 ? -1 : class_of(ms, q);
        if (c >= 0) {
          t.lact[m][e] = c;
          break;
        }
      }
    }
  for (int e = 0; e < ne; ++e)
    for (size_t m = 0; m < t.right.morphs.size(); ++m) {
      if (t.right.morphs[m].src != t.elems[e].d) continue;
      for (auto [s, q] : t.elems[e].pairs) {
        int qm = tq.ract[q][m];
        int c = qm < 0 ? -1 : class_of(s, qm);
        if (c >= 0) {
          t.ract[e][m] = c;
          break;
        }
      }
    }
  return t;
}

const char* to_string(IsoStatus s) {
  switch (s) {
    case IsoStatus::Iso: return "Iso";
    case IsoStatus::NotIso: return "NotIso";
    case IsoStatus::Inconclusive: return "Inconclusive";
  }
  return "?";
}

IsoReport find_table_iso(const ProfunctorTable& a, const ProfunctorTable& b) {
  check_same_base(a.left, b.left);
  check_same_base(a.right, b.right);
  IsoReport r;
  r.exact = a.stabilized && b.stabilized;
  if (!r.exact) {
    r.witness = "a table is not stabilized";
    return r;
  }
  for (const auto& c : a.left.objects)
    for (const auto& d : a.right.objects) {
      size_t x = a.at(c, d).size(), y = b.at(c, d).size();
      if (x != y) {
        r.status = IsoStatus::NotIso;
        r.witness = "(" + c + ", " + d + "): " + std::to_string(x) + " vs " +
                    std::to_string(y) + " elements";
        return r;
      }
    }

  std::vector<int> lm(a.left.morphs.size()), rm(a.right.morphs.size());
  for (size_t m = 0; m < lm.size(); ++m) lm[m] = b.left.find(a.left.morphs[m].rep);
  for (size_t m = 0; m < rm.size(); ++m) rm[m] = b.right.find(a.right.morphs[m].rep);

  const int n = static_cast<int>(a.elems.size());
  std::vector<int> fwd(n, -1), bwd(b.elems.size(), -1);
  std::vector<int> trail;
  int checked = 0;

  // Assigns x -> y and everything it forces; false on a clash.
  std::function<bool(int, int)> assign = [&](int x, int y) -> bool {
    if (fwd[x] >= 0) return fwd[x] == y;
    if (bwd[y] >= 0) return false;
    if (a.elems[x].c != b.elems[y].c || a.elems[x].d != b.elems[y].d) return false;
    fwd[x] = y;
    bwd[y] = x;
    trail.push_back(x);
    for (size_t m = 0; m < lm.size(); ++m) {
      int u = a.lact[m][x], v = b.lact[lm[m]][y];
      ++checked;
      if ((u < 0) != (v < 0)) return false;
      if (u >= 0 && !assign(u, v)) return false;
    }
    for (size_t m = 0; m < rm.size(); ++m) {
      int u = a.ract[x][m], v = b.ract[y][rm[m]];
      ++checked;
      if ((u < 0) != (v < 0)) return false;
      if (u >= 0 && !assign(u, v)) return false;
    }
    return true;
  };
  auto undo = [&](size_t mark) {
    while (trail.size() > mark) {
      int x = trail.back();
      trail.pop_back();
      bwd[fwd[x]] = -1;
      fwd[x] = -1;
    }
  };
  std::function<bool(int)> search = [&](int x) -> bool {
    while (x < n && fwd[x] >= 0) ++x;
    if (x == n) return true;
    for (int y : b.at(a.elems[x].c, a.elems[x].d)) {
      if (bwd[y] >= 0) continue;
      size_t mark = trail.size();
      if (assign(x, y) && search(x + 1)) return true;
      undo(mark);
    }
    return false;
  };
  r.checked = 0;
  if (search(0)) {
    r.status = IsoStatus::Iso;
    r.map = fwd;
  } else {
    r.status = IsoStatus::NotIso;
    r.witness = "no equivariant bijection";
  }
  r.checked = checked;
  return r;
}

IsoReport check_map_iso(const ProfunctorTable& a, const ProfunctorTable& b,
                        const std::vector<int>& f, int core) {
  check_same_base(a.left, b.left);
  check_same_base(a.right, b.right);
  IsoReport r;
  r.exact = a.stabilized && b.stabilized;
  r.map = f;
  IsoFail fail{r, r.exact};
  auto in_a = [&](int e) { return r.exact || core < 0 || a.elems[e].weight <= core; };
  auto in_b = [&](int e) { return r.exact || core < 0 || b.elems[e].weight <= core; };
  const int n = static_cast<int>(a.elems.size());

  std::map<int, int> seen;
  for (int e = 0; e < n; ++e) {
    if (!in_a(e)) continue;
    if (f[e] < 0) {
      fail(a.elems[e].label + " has no image");
      continue;
    }
    const Elem& y = b.elems[f[e]];
    if (y.c != a.elems[e].c || y.d != a.elems[e].d)
      fail(a.elems[e].label + " maps across objects to " + y.label);
    auto [it, fresh] = seen.emplace(f[e], e);
    if (!fresh)
      fail(a.elems[it->second].label + " and " + a.elems[e].label +
           " both map to " + y.label);
  }
  for (size_t e = 0; e < b.elems.size(); ++e) {
    if (!in_b(static_cast<int>(e))) continue;
    bool hit = false;
    for (int x = 0; x < n && !hit; ++x) hit = f[x] == static_cast<int>(e);
    if (!hit) fail(b.elems[e].label + " is not hit");
  }
  for (int e = 0; e < n; ++e) {
    if (!in_a(e) || f[e] < 0) continue;
    for (size_t m = 0; m < a.left.morphs.size(); ++m) {
      if (a.left.morphs[m].tgt != a.elems[e].c) continue;
      int m2 = b.left.find(a.left.morphs[m].rep);
      int x = a.lact[m][e], y = b.lact[m2][f[e]];
      ++r.checked;
      if (x >= 0 && y >= 0 && f[x] >= 0 && f[x] != y)
        fail(to_string(a.left.morphs[m].rep) + " . " + a.elems[e].label);
      if (r.exact && (x < 0) != (y < 0))
        fail(to_string(a.left.morphs[m].rep) + " . " + a.elems[e].label +
             " defined on one side only");
    }
    for (size_t m = 0; m < a.right.morphs.size(); ++m) {
      if (a.right.morphs[m].src != a.elems[e].d) continue;
      int m2 = b.right.find(a.right.morphs[m].rep);
      int x = a.ract[e][m], y = b.ract[f[e]][m2];
      ++r.checked;
      if (x >= 0 && y >= 0 && f[x] >= 0 && f[x] != y)
        fail(a.elems[e].label + " . " + to_string(a.right.morphs[m].rep));
      if (r.exact && (x < 0) != (y < 0))
        fail(a.elems[e].label + " . " + to_string(a.right.morphs[m].rep) +
             " defined on one side only");
    }
  }
  if (!fail.failed) r.status = IsoStatus::Iso;
  return r;
}

IsoReport check_mu_iso(const CurriedPresentation& P, const CurriedPresentation& Q,
                       const Budget& b, int depth) {
  CurriedPresentation PQ = compose_curried(P, Q);
  ProfunctorTable tp = profunctor_table(P, b, depth);
  ProfunctorTable tq = profunctor_table(Q, b, depth);
  ProfunctorTable tpq = profunctor_table(PQ, b, depth);
  int core = -1, bound = -1;
  if (!(tp.stabilized && tq.stabilized && tpq.stabilized)) {
    // Classes near the bound can split for lack of room; judge only the
    // elements well inside it.
    bound = 3 * depth;
    core = depth;
    tp = profunctor_table(P, b, bound);
    tq = profunctor_table(Q, b, bound);
    tpq = profunctor_table(PQ, b, bound);
  }
  ProfunctorTable co = coend_compose(tp, tq, bound);

  std::vector<int> f(co.elems.size(), -1);
  std::string clash;
  for (size_t e = 0; e < co.elems.size(); ++e)
    for (auto [si, ti] : co.elems[e].pairs) {
      const Elem& s = tp.elems[si];
      const Elem& t = tq.elems[ti];
      Term st = tensor(P, Q, s.c, Term{s.rep.pro, s.rep.right},
                       Term{t.rep.pro, t.rep.right});
      int img = tpq.find(CrossPath{Path::identity(s.c), st.gen, st.path});
      if (img < 0) continue;
      if (f[e] < 0) {
        f[e] = img;
      } else if (f[e] != img && clash.empty()) {
        clash = co.elems[e].label + " has images " + tpq.elems[f[e]].label +
                " and " + tpq.elems[img].label;
      }
    }
  IsoReport r = check_map_iso(co, tpq, f, core);
  if (!clash.empty()) {
    r.status = r.exact ? IsoStatus::NotIso : IsoStatus::Inconclusive;
    r.witness = clash;
  }
  return r;
}

IsoReport check_mu_naturality(const CurriedMorphism& phi,
                              const CurriedMorphism& psi, const Budget& b,
                              int depth) {
  if (!phi.globular() || !psi.globular())
    throw Error(ErrorKind::NonGlobular, "naturality needs globular morphisms");
  CurriedMorphism both = compose_curried_morphisms(phi, psi);
  const auto& P = phi.source;
  const auto& Q = psi.source;
  ProfunctorTable tp = profunctor_table(P, b, depth);
  ProfunctorTable tq = profunctor_table(Q, b, depth);
  ProfunctorTable target = profunctor_table(both.target, b, 3 * depth);
  IsoReport r;
  r.exact = tp.stabilized && tq.stabilized && target.stabilized;
  IsoFail fail{r, r.exact};
  auto image = [](const CurriedMorphism& m, const std::string& c, const Term& t) {
    InstanceMorphism i = component(m, c);
    return apply(i.gen_map, &i.base, t);
  };
  for (const auto& s : tp.elems)
    for (const auto& t : tq.elems) {
      if (s.d != t.c) continue;
      Term ss{s.rep.pro, s.rep.right}, tt{t.rep.pro, t.rep.right};
      Term lhs = image(both, s.c, tensor(P, Q, s.c, ss, tt));
      Term rhs = tensor(phi.target, psi.target, s.c, image(phi, s.c, ss),
                        image(psi, t.c, tt));
      int l = target.find(CrossPath{Path::identity(s.c), lhs.gen, lhs.path});
      int x = target.find(CrossPath{Path::identity(s.c), rhs.gen, rhs.path});
      ++r.checked;
      if (l < 0 || x < 0) {
        if (r.exact) fail("square at <" + s.label + " | " + t.label + "> leaves the table");
        continue;
      }
      if (l != x)
        fail("square at <" + s.label + " | " + t.label + ">: " +
             target.elems[l].label + " vs " + target.elems[x].label);
    }
  if (!fail.failed) r.status = IsoStatus::Iso;
  return r;
}

IsoReport check_unit_iso(const CatPresentation& c, const Budget& b, int depth) {
  ProfunctorTable tu = profunctor_table(unit_presentation(c), b, depth);
  ProfunctorTable th = hom_table(tu.right);
  std::vector<int> f(tu.elems.size(), -1);
  for (size_t e = 0; e < tu.elems.size(); ++e) f[e] = tu.right.find(tu.elems[e].rep.right);
  return check_map_iso(tu, th, f, tu.stabilized ? -1 : depth);
}

IsoReport check_uncurry_iso(const CurriedPresentation& P, const Budget& b,
                            int depth) {
  ProfunctorTable tc = profunctor_table(P, b, depth);
  ProfunctorTable tu = profunctor_table(uncurry(P), b, depth);
  std::vector<int> f(tc.elems.size(), -1);
  for (size_t e = 0; e < tc.elems.size(); ++e) {
    const Elem& x = tc.elems[e];
    f[e] = tu.find(overline(P, x.c, Term{x.rep.pro, x.rep.right}));
  }
  return check_map_iso(tc, tu, f, depth);
}

std::vector<std::string> table_law_violations(const FiniteCategoryTable& t) {
  std::vector<std::string> out;
  const size_t n = t.morphs.size();
  auto name = [&](size_t i) { return to_string(t.morphs[i].rep); };
  for (size_t a = 0; a < n; ++a) {
    int il = t.identity.at(t.morphs[a].src), ir = t.identity.at(t.morphs[a].tgt);
    if (t.compose[il][a] != static_cast<int>(a) ||
        t.compose[a][ir] != static_cast<int>(a))
      out.push_back("unit law at " + name(a));
    for (size_t b = 0; b < n; ++b) {
      int ab = t.compose[a][b];
      if (ab < 0) continue;
      for (size_t c = 0; c < n; ++c) {
        int bc = t.compose[b][c];
        if (bc < 0) continue;
        int l = t.compose[ab][c], r = t.compose[a][bc];
        if (l >= 0 && r >= 0 && l != r)
          out.push_back("associativity at " + name(a) + ", " + name(b) + ", " +
                        name(c));
      }
    }
  }
  return out;
}

std::vector<std::string> table_law_violations(const ProfunctorTable& t) {
  std::vector<std::string> out;
  const size_t ne = t.elems.size();
  const auto& L = t.left;
  const auto& R = t.right;
  for (size_t e = 0; e < ne; ++e) {
    const Elem& x = t.elems[e];
    if (t.lact[L.identity.at(x.c)][e] != static_cast<int>(e) ||
        t.ract[e][R.identity.at(x.d)] != static_cast<int>(e))
      out.push_back("identity action at " + x.label);
    for (size_t m = 0; m < L.morphs.size(); ++m) {
      int me = t.lact[m][e];
      if (me < 0) continue;
      for (size_t k = 0; k < L.morphs.size(); ++k) {
        int km = L.compose[k][m];
        if (km < 0) continue;
        int l = t.lact[k][me], r = t.lact[km][e];
        if (l >= 0 && r >= 0 && l != r) out.push_back("left action at " + x.label);
      }
      for (size_t k = 0; k < R.morphs.size(); ++k) {
        int l = t.ract[me][k], ek = t.ract[e][k];
        int r = ek < 0 ? -1 : t.lact[m][ek];
        if (l >= 0 && r >= 0 && l != r) out.push_back("mixed action at " + x.label);
      }
    }
    for (size_t m = 0; m < R.morphs.size(); ++m) {
      int em = t.ract[e][m];
      if (em < 0) continue;
      for (size_t k = 0; k < R.morphs.size(); ++k) {
        int mk = R.compose[m][k];
        if (mk < 0) continue;
        int l = t.ract[em][k], r = t.ract[e][mk];
        if (l >= 0 && r >= 0 && l != r) out.push_back("right action at " + x.label);
      }
    }
  }
  return out;
}

std::string table_json(const FiniteCategoryTable& t) {
  return category_json(t).dump(2);
}

std::string table_json(const ProfunctorTable& t) {
  json elems = json::array();
  for (const auto& e : t.elems)
    elems.push_back({{"c", e.c}, {"d", e.d}, {"label", e.label}, {"weight", e.weight}});
  return json{{"left", category_json(t.left)},
              {"right", category_json(t.right)},
              {"elems", elems},
              {"lact", t.lact},
              {"ract", t.ract},
              {"stabilized", t.stabilized},
              {"depth", t.depth}}
      .dump(2);
}

}  // namespace profpres

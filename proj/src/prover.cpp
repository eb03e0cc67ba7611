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

#include "profpres/prover.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <queue>

#include "word.hpp"

namespace profpres {

Theory Theory::of(const CatPresentation& c) {
  Theory t;
  t.pres = c;
  t.fun_part.assign(c.funs.size(), Part::Left);
  t.sort_part.assign(c.sorts.size(), Part::Left);
  return t;
}

Part Theory::part_of(const std::string& fun) const {
  for (size_t i = 0; i < pres.funs.size(); ++i)
    if (pres.funs[i].name == fun) return fun_part[i];
  throw Error(ErrorKind::UnknownSymbol, "unknown symbol " + fun);
}

std::string to_string(const ProofOutcome& o) {
  switch (o.status) {
    case ProofStatus::Proved:
      return "Proved(depth " + std::to_string(o.depth.value_or(0)) + ")";
    case ProofStatus::NotProvedWithinBudget:
      return "NotProvedWithinBudget";
    case ProofStatus::Decided:
      return o.equal ? "Decided(equal)" : "Decided(distinct)";
  }
  return "?";
}

int shortlex_compare(const Theory& t, const Path& a, const Path& b) {
  detail::Alphabet al(t);
  return detail::shortlex(al, al.encode(a), al.encode(b));
}

// ---------------------------------------------------------------- completion

namespace {

using detail::Word;

struct KbRule {
  Word lhs, rhs;
  bool alive = true;
};

void critical_pairs(const KbRule& a, const KbRule& b,
                    std::deque<std::pair<Word, Word>>& out) {
  const Word& l1 = a.lhs;
  const Word& l2 = b.lhs;
  // suffix of l1 overlaps prefix of l2
  for (size_t k = 1; k < l1.size() && k < l2.size(); ++k) {
    if (!std::equal(l1.end() - k, l1.end(), l2.begin())) continue;
    Word x = a.rhs;
    x.insert(x.end(), l2.begin() + k, l2.end());
    Word y(l1.begin(), l1.end() - k);
    y.insert(y.end(), b.rhs.begin(), b.rhs.end());
    out.emplace_back(std::move(x), std::move(y));
  }
  // l2 inside l1
  if (l2.size() <= l1.size() && &a != &b) {
    for (size_t i = 0; i + l2.size() <= l1.size(); ++i) {
      if (!std::equal(l2.begin(), l2.end(), l1.begin() + i)) continue;
      Word y(l1.begin(), l1.begin() + i);
      y.insert(y.end(), b.rhs.begin(), b.rhs.end());
      y.insert(y.end(), l1.begin() + i + l2.size(), l1.end());
      out.emplace_back(a.rhs, std::move(y));
    }
  }
}

bool contains(const Word& w, const Word& sub) {
  return std::search(w.begin(), w.end(), sub.begin(), sub.end()) != w.end();
}

}  // namespace

std::optional<RewriteSystem> complete_rewrite_system(const Theory& t,
                                                     const Budget& b) {
  detail::Alphabet al(t);
  std::vector<KbRule> rules;
  std::deque<std::pair<Word, Word>> pending;
  for (const auto& e : t.pres.eqs)
    pending.emplace_back(al.encode(e.lhs), al.encode(e.rhs));

  auto nf = [&](const Word& w) {
    detail::RuleIndex idx(al.size());
    for (size_t i = 0; i < rules.size(); ++i)
      if (rules[i].alive) idx.add(rules[i].lhs, rules[i].rhs);
    return idx.normalize(w);
  };

  int steps = 0, joined = 0;
  while (!pending.empty()) {
    auto [x, y] = pending.front();
    pending.pop_front();
    if (++steps > b.kb_steps) return std::nullopt;
    x = nf(x);
    y = nf(y);
    if (x == y) {
      ++joined;
      continue;
    }
    if (detail::shortlex(al, x, y) < 0) std::swap(x, y);
    rules.push_back({x, y, true});
    size_t n = rules.size() - 1;
    for (size_t k = 0; k < n; ++k) {
      if (!rules[k].alive) continue;
      if (contains(rules[k].lhs, rules[n].lhs)) {
        rules[k].alive = false;
        pending.emplace_back(rules[k].lhs, rules[k].rhs);
      }
    }
    for (size_t k = 0; k <= n; ++k) {
      if (!rules[k].alive) continue;
      critical_pairs(rules[n], rules[k], pending);
      if (k != n) critical_pairs(rules[k], rules[n], pending);
    }
  }

  // Reduce: right-hand sides to normal form, drop reducible left-hand sides.
  std::vector<KbRule> alive;
  for (auto& r : rules)
    if (r.alive) alive.push_back(r);
  std::vector<KbRule> reduced;
  for (size_t i = 0; i < alive.size(); ++i) {
    bool redundant = false;
    for (size_t j = 0; j < alive.size() && !redundant; ++j)
      if (i != j && contains(alive[i].lhs, alive[j].lhs) &&
          (alive[i].lhs != alive[j].lhs || j < i))
        redundant = true;
    if (!redundant) reduced.push_back(alive[i]);
  }
  detail::RuleIndex idx(al.size());
  for (auto& r : reduced) idx.add(r.lhs, r.rhs);
  for (auto& r : reduced) r.rhs = idx.normalize(r.rhs);
  std::sort(reduced.begin(), reduced.end(), [&](const KbRule& a, const KbRule& c) {
    return detail::shortlex(al, a.lhs, c.lhs) < 0;
  });

  RewriteSystem rs;
  for (const auto& r : reduced) {
    Path l = al.decode(r.lhs, std::nullopt);
    rs.rules.push_back({l, al.decode(r.rhs, l.src)});
  }
  rs.order = al.order_names();
  rs.critical_pairs_joined = joined;
  rs.steps_used = steps;
  return rs;
}

Path normalize(const RewriteSystem& rs, const Path& p) {
  // Works on names directly so that it needs no theory.
  std::vector<std::string> out;
  std::vector<std::string> input(p.syms.rbegin(), p.syms.rend());
  while (!input.empty()) {
    out.push_back(input.back());
    input.pop_back();
    for (const auto& r : rs.rules) {
      const auto& l = r.lhs.syms;
      if (l.size() > out.size()) continue;
      if (!std::equal(l.begin(), l.end(), out.end() - l.size())) continue;
      out.resize(out.size() - l.size());
      for (auto it = r.rhs.syms.rbegin(); it != r.rhs.syms.rend(); ++it)
        input.push_back(*it);
      break;
    }
  }
  return Path{p.src, p.tgt, out};
}

// ---------------------------------------------------------------- replay

bool check_derivation(const Theory& t, const Derivation& d) {
  Path cur = d.from;
  for (const auto& s : d.steps) {
    if (!(s.before == cur)) return false;
    if (s.eq_index >= t.pres.eqs.size()) return false;
    const Equation& e = t.pres.eqs[s.eq_index];
    const Path& from = s.forward ? e.lhs : e.rhs;
    const Path& to = s.forward ? e.rhs : e.lhs;
    const auto& w = s.before.syms;
    if (s.pos + from.syms.size() > w.size()) return false;
    if (!std::equal(from.syms.begin(), from.syms.end(), w.begin() + s.pos))
      return false;
    std::vector<std::string> next(w.begin(), w.begin() + s.pos);
    next.insert(next.end(), to.syms.begin(), to.syms.end());
    next.insert(next.end(), w.begin() + s.pos + from.syms.size(), w.end());
    if (next != s.after.syms) return false;
    if (s.after.src != s.before.src || s.after.tgt != s.before.tgt)
      return false;
    if (!path_in(t.pres, s.after)) return false;
    cur = s.after;
  }
  return cur == d.to;
}

// ---------------------------------------------------------------- closure

namespace {
constexpr size_t kUniverseCap = 400000;

std::string key_of(int sort, const std::vector<int>& w) {
  std::string k;
  k.reserve(4 + 2 * w.size());
  k.push_back(static_cast<char>(sort & 0xff));
  k.push_back(static_cast<char>((sort >> 8) & 0xff));
  for (int s : w) {
    k.push_back(static_cast<char>(s & 0xff));
    k.push_back(static_cast<char>((s >> 8) & 0xff));
  }
  return k;
}
}  // namespace

Closure::Closure(const Theory& t, const Budget& b) : theory_(&t) {
  const auto& pres = t.pres;
  std::map<std::string, int> sort_id;
  for (size_t i = 0; i < pres.sorts.size(); ++i) sort_id[pres.sorts[i]] = i;
  for (const auto& f : pres.funs) {
    sym_src_.push_back(sort_id.at(f.src));
    sym_tgt_.push_back(sort_id.at(f.tgt));
  }
  std::map<std::string, int> sym_id;
  for (size_t i = 0; i < pres.funs.size(); ++i) sym_id[pres.funs[i].name] = i;

  auto tgt_of = [&](int sort, const std::vector<int>& w) {
    return w.empty() ? sort : sym_tgt_[w.back()];
  };

  // Universe, level by level.
  std::vector<int> level;
  for (size_t s = 0; s < pres.sorts.size(); ++s) {
    index_[key_of(s, {})] = words_.size();
    level.push_back(words_.size());
    words_.push_back({static_cast<int>(s), {}});
  }
  effective_len_ = 0;
  for (int len = 1; len <= b.max_len; ++len) {
    std::vector<std::pair<int, std::vector<int>>> next;
    for (int id : level) {
      auto [s, w] = words_[id];
      int end = tgt_of(s, w);
      for (size_t f = 0; f < pres.funs.size(); ++f) {
        if (sym_src_[f] != end) continue;
        auto w2 = w;
        w2.push_back(f);
        next.push_back({s, std::move(w2)});
      }
    }
    if (words_.size() + next.size() > kUniverseCap) break;
    level.clear();
    for (auto& e : next) {
      index_[key_of(e.first, e.second)] = words_.size();
      level.push_back(words_.size());
      words_.push_back(std::move(e));
    }
    effective_len_ = len;
  }
  parent_.resize(words_.size());
  for (size_t i = 0; i < parent_.size(); ++i) parent_[i] = i;
  adj_.resize(words_.size());

  // Seed with every equation instance in context.
  std::vector<std::pair<int, std::vector<int>>> eqs;
  for (const auto& e : pres.eqs) {
    std::vector<int> l, r;
    for (const auto& s : e.lhs.syms) l.push_back(sym_id.at(s));
    for (const auto& s : e.rhs.syms) r.push_back(sym_id.at(s));
    eqs.push_back({sort_id.at(e.lhs.src), l});
    eqs.push_back({sort_id.at(e.rhs.src), r});
  }
  for (size_t id = 0; id < words_.size(); ++id) {
    const auto [s, w] = words_[id];
    for (size_t e = 0; e < pres.eqs.size(); ++e) {
      const auto& l = eqs[2 * e].second;
      const auto& r = eqs[2 * e + 1].second;
      int esort = eqs[2 * e].first;
      for (size_t pos = 0; pos + l.size() <= w.size(); ++pos) {
        int here = pos < w.size() ? sym_src_[w[pos]] : tgt_of(s, w);
        if (here != esort) continue;
        if (!std::equal(l.begin(), l.end(), w.begin() + pos)) continue;
        std::vector<int> w2(w.begin(), w.begin() + pos);
        w2.insert(w2.end(), r.begin(), r.end());
        w2.insert(w2.end(), w.begin() + pos + l.size(), w.end());
        int other = lookup(s, w2);
        if (other < 0) continue;
        unite(id, other, Edge{other, 0, e, true, pos, -1, -1, -1},
              Edge{static_cast<int>(id), 0, e, false, pos, -1, -1, -1});
      }
    }
  }

  // Congruence rounds: members of one class must stay together under
  // pre- and post-composition.
  for (int round = 0; round < b.rounds; ++round) {
    bool changed = false;
    std::map<std::pair<int, int>, std::pair<int, int>> post, pre;
    for (size_t id = 0; id < words_.size(); ++id) {
      const auto& [s, w] = words_[id];
      int root = find(id);
      int end = tgt_of(s, w);
      for (size_t f = 0; f < pres.funs.size(); ++f) {
        if (sym_src_[f] == end) {
          auto w2 = w;
          w2.push_back(f);
          int ext = lookup(s, w2);
          if (ext >= 0) {
            auto [it, fresh] = post.try_emplace({root, f}, id, ext);
            if (!fresh && find(it->second.second) != find(ext)) {
              int a0 = it->second.first, b0 = it->second.second;
              changed |= unite(b0, ext,
                               Edge{ext, 1, 0, true, 0, a0, (int)id, (int)f},
                               Edge{b0, 1, 0, true, 0, (int)id, a0, (int)f});
            }
          }
        }
        if (sym_tgt_[f] == s) {
          std::vector<int> w2{static_cast<int>(f)};
          w2.insert(w2.end(), w.begin(), w.end());
          int ext = lookup(sym_src_[f], w2);
          if (ext >= 0) {
            auto [it, fresh] = pre.try_emplace({root, f}, id, ext);
            if (!fresh && find(it->second.second) != find(ext)) {
              int a0 = it->second.first, b0 = it->second.second;
              changed |= unite(b0, ext,
                               Edge{ext, 2, 0, true, 0, a0, (int)id, (int)f},
                               Edge{b0, 2, 0, true, 0, (int)id, a0, (int)f});
            }
          }
        }
      }
    }
    rounds_used_ = round + 1;
    if (!changed) break;
  }
}

int Closure::find(int x) const {
  while (parent_[x] != x) {
    parent_[x] = parent_[parent_[x]];
    x = parent_[x];
  }
  return x;
}

bool Closure::unite(int a, int b, Edge ab, Edge ba) {
  int ra = find(a), rb = find(b);
  if (ra == rb) return false;
  parent_[ra] = rb;
  adj_[a].push_back(ab);
  adj_[b].push_back(ba);
  return true;
}

int Closure::lookup(int sort, const std::vector<int>& w) const {
  auto it = index_.find(key_of(sort, w));
  return it == index_.end() ? -1 : it->second;
}

Path Closure::to_path(int id) const {
  const auto& [s, w] = words_[id];
  Path p = Path::identity(theory_->pres.sorts[s]);
  for (int f : w) {
    p.syms.push_back(theory_->pres.funs[f].name);
    p.tgt = theory_->pres.funs[f].tgt;
  }
  return p;
}

int Closure::class_of(const Path& p) const {
  const auto& pres = theory_->pres;
  auto sit = std::find(pres.sorts.begin(), pres.sorts.end(), p.src);
  if (sit == pres.sorts.end()) return -1;
  std::vector<int> w;
  for (const auto& s : p.syms) {
    auto f = std::find_if(pres.funs.begin(), pres.funs.end(),
                          [&](const FunSym& fs) { return fs.name == s; });
    if (f == pres.funs.end()) return -1;
    w.push_back(f - pres.funs.begin());
  }
  int id = lookup(sit - pres.sorts.begin(), w);
  return id < 0 ? -1 : find(id);
}

std::vector<Path> Closure::members(const Path& p) const {
  std::vector<Path> out;
  int c = class_of(p);
  if (c < 0) return out;
  for (size_t id = 0; id < words_.size(); ++id)
    if (find(id) == c) out.push_back(to_path(id));
  return out;
}

std::vector<RewriteStep> Closure::expand(int a, int b) const {
  // Unique path in the merge forest.
  std::map<int, std::pair<int, const Edge*>> prev;
  std::queue<int> q;
  q.push(a);
  prev[a] = {-1, nullptr};
  while (!q.empty() && !prev.count(b)) {
    int x = q.front();
    q.pop();
    for (const auto& e : adj_[x])
      if (!prev.count(e.to)) {
        prev[e.to] = {x, &e};
        q.push(e.to);
      }
  }
  std::vector<std::pair<int, const Edge*>> chain;
  for (int x = b; x != a; x = prev[x].first) chain.push_back({x, prev[x].second});
  std::reverse(chain.begin(), chain.end());

  std::vector<RewriteStep> steps;
  int cur = a;
  for (auto [to, e] : chain) {
    if (e->kind == 0) {
      steps.push_back({to_path(cur), to_path(to), e->eq_index, e->forward,
                       e->pos});
    } else {
      const auto& f = theory_->pres.funs[e->sym];
      for (auto s : expand(e->sub_a, e->sub_b)) {
        if (e->kind == 1) {
          s.before.syms.push_back(f.name);
          s.before.tgt = f.tgt;
          s.after.syms.push_back(f.name);
          s.after.tgt = f.tgt;
        } else {
          s.before.syms.insert(s.before.syms.begin(), f.name);
          s.before.src = f.src;
          s.after.syms.insert(s.after.syms.begin(), f.name);
          s.after.src = f.src;
          s.pos += 1;
        }
        steps.push_back(std::move(s));
      }
    }
    cur = to;
  }
  return steps;
}

std::optional<Derivation> Closure::derive(const Path& p, const Path& q) const {
  int cp = class_of(p), cq = class_of(q);
  if (cp < 0 || cp != cq) return std::nullopt;
  const auto& pres = theory_->pres;
  auto id_of = [&](const Path& x) {
    std::vector<int> w;
    for (const auto& s : x.syms)
      w.push_back(std::find_if(pres.funs.begin(), pres.funs.end(),
                               [&](const FunSym& fs) { return fs.name == s; }) -
                  pres.funs.begin());
    int sort = std::find(pres.sorts.begin(), pres.sorts.end(), x.src) -
               pres.sorts.begin();
    return lookup(sort, w);
  };
  return Derivation{p, q, expand(id_of(p), id_of(q))};
}

// ---------------------------------------------------------------- prover

Prover::Prover(Theory t, Budget b, bool use_completion)
    : theory_(std::move(t)), budget_(b), use_completion_(use_completion) {}

const std::optional<RewriteSystem>& Prover::completion() const {
  if (!completion_done_) {
    completion_done_ = true;
    if (use_completion_ && budget_.kb_steps > 0)
      completion_ = complete_rewrite_system(theory_, budget_);
  }
  return completion_;
}

const Closure& Prover::closure() const {
  if (!closure_) closure_ = std::make_unique<Closure>(theory_, budget_);
  return *closure_;
}

std::optional<Path> Prover::normal_form(const Path& p) const {
  const auto& rs = completion();
  if (!rs) return std::nullopt;
  return normalize(*rs, p);
}

ProofOutcome Prover::prove(const Path& p, const Path& q) const {
  if (!path_in(theory_.pres, p))
    throw Error(ErrorKind::ForeignPath, to_string(p) + " is not a path of " +
                                            theory_.pres.name);
  if (!path_in(theory_.pres, q))
    throw Error(ErrorKind::ForeignPath, to_string(q) + " is not a path of " +
                                            theory_.pres.name);
  if (p.src != q.src || p.tgt != q.tgt)
    throw Error(ErrorKind::NonParallel,
                to_string(p) + " and " + to_string(q) + " are not parallel");
  ProofOutcome out;
  if (p == q) {
    out.status = ProofStatus::Proved;
    out.depth = 0;
    out.witness = Derivation{p, q, {}};
    return out;
  }
  const Closure& cl = closure();
  out.budget_used = static_cast<int>(cl.universe_size());
  if (auto d = cl.derive(p, q)) {
    out.status = ProofStatus::Proved;
    out.depth = static_cast<int>(d->steps.size());
    out.witness = std::move(d);
    return out;
  }
  if (const auto& rs = completion()) {
    out.status = ProofStatus::Decided;
    out.equal = normalize(*rs, p) == normalize(*rs, q);
    out.budget_used = rs->steps_used;
    return out;
  }
  out.status = ProofStatus::NotProvedWithinBudget;
  return out;
}

ProofOutcome prove_path_eq(const Theory& t, const Path& p, const Path& q,
                           const Budget& b) {
  return Prover(t, b).prove(p, q);
}

ProofOutcome morphisms_equal(const CatMorphism& f, const CatMorphism& g,
                             const Budget& b) {
  if (!(f.source == g.source) || !(f.target == g.target))
    throw Error(ErrorKind::NotParallel, f.name + " and " + g.name +
                                            " do not share source and target");
  ProofOutcome out;
  if (f.sort_map != g.sort_map) {
    out.status = ProofStatus::Decided;
    out.equal = false;
    return out;
  }
  Prover pv(Theory::of(f.target), b);
  bool all = true, any_refuted = false, all_proved = true;
  int depth = 0;
  for (const auto& fs : f.source.funs) {
    auto r = pv.prove(f.fun_map.at(fs.name), g.fun_map.at(fs.name));
    if (r.status == ProofStatus::Proved) depth = std::max(depth, *r.depth);
    else all_proved = false;
    if (!r.holds()) all = false;
    if (r.refuted()) any_refuted = true;
  }
  if (any_refuted) {
    out.status = ProofStatus::Decided;
    out.equal = false;
  } else if (all && all_proved) {
    out.status = ProofStatus::Proved;
    out.depth = depth;
  } else if (all) {
    out.status = ProofStatus::Decided;
    out.equal = true;
  }
  return out;
}

}  // namespace profpres

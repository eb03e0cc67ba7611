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

// Integer words over a theory's symbols. Internal to the library.

#ifndef PROFPRES_SRC_WORD_HPP
#define PROFPRES_SRC_WORD_HPP

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "profpres/prover.hpp"

namespace profpres::detail {

using Word = std::vector<int>;

class Alphabet {
 public:
  explicit Alphabet(const Theory& t) : pres_(&t.pres) {
    const auto& funs = t.pres.funs;
    for (size_t i = 0; i < funs.size(); ++i) id_[funs[i].name] = i;
    rank_.assign(funs.size(), -1);
    int next = 0;
    for (const auto& name : t.pres.order) {
      auto it = id_.find(name);
      if (it != id_.end() && rank_[it->second] < 0) rank_[it->second] = next++;
    }
    for (size_t i = 0; i < funs.size(); ++i)
      if (rank_[i] < 0) rank_[i] = next++;
    heavy_.assign(funs.size(), false);
    for (size_t i = 0; i < funs.size() && i < t.fun_part.size(); ++i)
      heavy_[i] = t.fun_part[i] == Part::Left;
  }

  size_t size() const { return rank_.size(); }
  int rank(int sym) const { return rank_[sym]; }
  bool heavy(int sym) const { return heavy_[sym]; }
  int id(const std::string& name) const {
    auto it = id_.find(name);
    if (it == id_.end())
      throw Error(ErrorKind::ForeignPath, "unknown symbol " + name);
    return it->second;
  }

  Word encode(const Path& p) const {
    Word w;
    w.reserve(p.syms.size());
    for (const auto& s : p.syms) w.push_back(id(s));
    return w;
  }

  Path decode(const Word& w, std::optional<std::string> src) const {
    Path p;
    p.src = w.empty() ? src.value_or("") : src.value_or(pres_->funs[w[0]].src);
    p.tgt = p.src;
    for (int f : w) {
      p.syms.push_back(pres_->funs[f].name);
      p.tgt = pres_->funs[f].tgt;
    }
    return p;
  }

  std::vector<std::string> order_names() const {
    std::vector<std::string> out(rank_.size());
    for (size_t i = 0; i < rank_.size(); ++i)
      out[rank_[i]] = pres_->funs[i].name;
    return out;
  }

 private:
  const CatPresentation* pres_;
  std::map<std::string, int> id_;
  std::vector<int> rank_;
  std::vector<bool> heavy_;
};

// Number of left-frame symbols first, then shortlex. On a plain category
// every symbol is left-frame and this is shortlex; on a collage it orients
// f.p = p.w towards the right cross-path whatever the length of w.
inline int shortlex(const Alphabet& al, const Word& a, const Word& b) {
  auto heavy = [&](const Word& w) {
    return std::count_if(w.begin(), w.end(), [&](int s) { return al.heavy(s); });
  };
  auto ha = heavy(a), hb = heavy(b);
  if (ha != hb) return ha < hb ? -1 : 1;
  if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
  for (size_t i = 0; i < a.size(); ++i) {
    int ra = al.rank(a[i]), rb = al.rank(b[i]);
    if (ra != rb) return ra < rb ? -1 : 1;
  }
  return 0;
}

// Rules indexed by their last symbol; normalization keeps the processed
// prefix irreducible and pushes right-hand sides back onto the input.
class RuleIndex {
 public:
  explicit RuleIndex(size_t nsyms) : by_last_(nsyms) {}

  void add(const Word& lhs, const Word& rhs) {
    rules_.push_back({lhs, rhs});
    by_last_[lhs.back()].push_back(rules_.size() - 1);
  }

  Word normalize(const Word& w) const {
    Word out;
    Word input(w.rbegin(), w.rend());
    while (!input.empty()) {
      out.push_back(input.back());
      input.pop_back();
      for (size_t r : by_last_[out.back()]) {
        const Word& l = rules_[r].first;
        if (l.size() > out.size()) continue;
        if (!std::equal(l.begin(), l.end(), out.end() - l.size())) continue;
        out.resize(out.size() - l.size());
        const Word& rhs = rules_[r].second;
        input.insert(input.end(), rhs.rbegin(), rhs.rend());
        break;
      }
    }
    return out;
  }

  // True when appending sym to an irreducible word w creates a redex.
  bool reducible_after_push(const Word& w) const {
    if (w.empty()) return false;
    for (size_t r : by_last_[w.back()]) {
      const Word& l = rules_[r].first;
      if (l.size() <= w.size() &&
          std::equal(l.begin(), l.end(), w.end() - l.size()))
        return true;
    }
    return false;
  }

 private:
  std::vector<std::pair<Word, Word>> rules_;
  std::vector<std::vector<size_t>> by_last_;
};

}  // namespace profpres::detail

#endif  // PROFPRES_SRC_WORD_HPP

// Test-side oracles. None of these call into the library's prover,
// completion or semantics code.

#ifndef PROFPRES_TESTS_ORACLES_HPP
#define PROFPRES_TESTS_ORACLES_HPP

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "profpres/core.hpp"
#include "profpres/prover.hpp"

namespace oracle {

using Word = std::vector<std::string>;

// Replays a derivation step by step: every step must be a single use of a
// declared equation (either direction) inside a context.
inline bool replay(const std::vector<profpres::Equation>& eqs,
                   const profpres::Derivation& d) {
  Word cur = d.from.syms;
  for (const auto& s : d.steps) {
    if (s.before.syms != cur) return false;
    bool ok = false;
    for (const auto& e : eqs) {
      for (int dir = 0; dir < 2 && !ok; ++dir) {
        const Word& a = dir ? e.rhs.syms : e.lhs.syms;
        const Word& b = dir ? e.lhs.syms : e.rhs.syms;
        for (size_t i = 0; i + a.size() <= cur.size() && !ok; ++i) {
          if (!std::equal(a.begin(), a.end(), cur.begin() + i)) continue;
          Word n(cur.begin(), cur.begin() + i);
          n.insert(n.end(), b.begin(), b.end());
          n.insert(n.end(), cur.begin() + i + a.size(), cur.end());
          if (n == s.after.syms) ok = true;
        }
      }
    }
    if (!ok) return false;
    cur = s.after.syms;
  }
  return cur == d.to.syms;
}

// All words over an alphabet with length <= k.
inline std::vector<Word> words(const std::vector<std::string>& alphabet, int k) {
  std::vector<Word> out{{}};
  std::vector<Word> level{{}};
  for (int i = 0; i < k; ++i) {
    std::vector<Word> next;
    for (const auto& w : level)
      for (const auto& a : alphabet) {
        Word x = w;
        x.push_back(a);
        next.push_back(x);
      }
    out.insert(out.end(), next.begin(), next.end());
    level = next;
  }
  return out;
}

// Classes of the free commutative monoid: a word is its sorted letter bag.
inline size_t commutative_classes(const std::vector<std::string>& alphabet,
                                  int k) {
  std::set<Word> bags;
  for (auto w : words(alphabet, k)) {
    std::sort(w.begin(), w.end());
    bags.insert(w);
  }
  return bags.size();
}

// Prefix rewriting to a fixpoint with rules applied anywhere, naive loop.
inline Word rewrite(Word w, const std::vector<std::pair<Word, Word>>& rules) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (const auto& [l, r] : rules) {
      auto it = std::search(w.begin(), w.end(), l.begin(), l.end());
      if (it == w.end()) continue;
      Word n(w.begin(), it);
      n.insert(n.end(), r.begin(), r.end());
      n.insert(n.end(), it + l.size(), w.end());
      w = n;
      changed = true;
    }
  }
  return w;
}

// Naive equivalence closure of a finite relation on 0..n-1.
inline std::vector<int> components(int n,
                                   const std::vector<std::pair<int, int>>& rel) {
  std::vector<int> label(n);
  for (int i = 0; i < n; ++i) label[i] = i;
  bool changed = true;
  while (changed) {
    changed = false;
    for (auto [a, b] : rel) {
      int m = std::min(label[a], label[b]);
      if (label[a] != m || label[b] != m) {
        label[a] = label[b] = m;
        changed = true;
      }
    }
  }
  return label;
}

}  // namespace oracle

#endif  // PROFPRES_TESTS_ORACLES_HPP

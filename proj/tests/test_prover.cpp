#include "profpres/prover.hpp"

#include "fixtures.hpp"
#include "gtest/gtest.h"
#include "oracles.hpp"

namespace profpres {
namespace {

using fixtures::loop;

Theory q_star() {
  // |Q(*)| for Q(*) = <q | q.t.t = q.t> over O.
  CatPresentation c;
  c.name = "Qstar";
  c.sorts = {"*", "*_O"};
  c.funs = {{"q", "*", "*_O"}, {"t", "*_O", "*_O"}};
  c.eqs.push_back({Path{"*", "*_O", {"q", "t", "t"}}, Path{"*", "*_O", {"q", "t"}}});
  Theory t = Theory::of(c);
  t.fun_part = {Part::Pro, Part::Right};
  t.sort_part = {Part::Left, Part::Right};
  return t;
}

TEST(Prove, CommutationInM) {
  Theory m = Theory::of(fixtures::M());
  auto r = prove_path_eq(m, loop("*", {"f", "g"}), loop("*", {"g", "f"}), {});
  ASSERT_EQ(r.status, ProofStatus::Proved);
  EXPECT_EQ(*r.depth, 1);
  ASSERT_TRUE(r.witness);
  EXPECT_TRUE(oracle::replay(m.pres.eqs, *r.witness));
}

TEST(Prove, ImageEquationOfEndomorphism) {
  Theory m = Theory::of(fixtures::M());
  auto r = prove_path_eq(m, loop("*", {"f", "f", "f", "g"}),
                         loop("*", {"f", "g", "f", "f"}), {});
  ASSERT_EQ(r.status, ProofStatus::Proved);
  EXPECT_TRUE(oracle::replay(m.pres.eqs, *r.witness));
  EXPECT_TRUE(check_derivation(m, *r.witness));
  EXPECT_EQ(*r.depth, 2);
}

TEST(Prove, FreeMonoidSeparates) {
  Theory n = Theory::of(fixtures::N());
  Prover bounded(n, {}, false);
  EXPECT_EQ(bounded.prove(loop("*", {"s"}), loop("*", {"s", "s"})).status,
            ProofStatus::NotProvedWithinBudget);
  auto r = prove_path_eq(n, loop("*", {"s"}), loop("*", {"s", "s"}), {});
  EXPECT_EQ(r.status, ProofStatus::Decided);
  EXPECT_FALSE(r.equal);
}

TEST(Prove, RejectsNonParallelAndForeign) {
  Theory q = q_star();
  Prover pv(q, {});
  EXPECT_THROW(pv.prove(Path{"*", "*_O", {"q"}}, Path::identity("*")), Error);
  try {
    pv.prove(loop("*", {"z"}), loop("*", {"z"}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::ForeignPath);
  }
}

TEST(Completion, CommutativeMonoid) {
  Theory m = Theory::of(fixtures::M());
  auto rs = complete_rewrite_system(m, {});
  ASSERT_TRUE(rs);
  ASSERT_EQ(rs->rules.size(), 1u);
  EXPECT_EQ(rs->rules[0].lhs, loop("*", {"g", "f"}));
  EXPECT_EQ(rs->rules[0].rhs, loop("*", {"f", "g"}));
  // Oracle: rewrite g.f -> f.g naively until stuck.
  std::vector<std::pair<oracle::Word, oracle::Word>> rules = {{{"g", "f"}, {"f", "g"}}};
  for (auto w : {oracle::Word{"f", "g", "f"}, oracle::Word{"g", "f", "f"}}) {
    EXPECT_EQ(oracle::rewrite(w, rules), (oracle::Word{"f", "f", "g"}));
    EXPECT_EQ(normalize(*rs, loop("*", w)), loop("*", {"f", "f", "g"}));
  }
}

TEST(Completion, FreeMonoidIsEmpty) {
  auto rs = complete_rewrite_system(Theory::of(fixtures::N()), {});
  ASSERT_TRUE(rs);
  EXPECT_TRUE(rs->rules.empty());
}

TEST(Completion, IdempotentTail) {
  auto rs = complete_rewrite_system(q_star(), {});
  ASSERT_TRUE(rs);
  ASSERT_EQ(rs->rules.size(), 1u);
  EXPECT_EQ(rs->rules[0].lhs.syms, (std::vector<std::string>{"q", "t", "t"}));
  EXPECT_EQ(rs->rules[0].rhs.syms, (std::vector<std::string>{"q", "t"}));
  EXPECT_EQ(normalize(*rs, Path{"*", "*_O", {"q", "t", "t", "t"}}),
            (Path{"*", "*_O", {"q", "t"}}));
}

TEST(Completion, IdentitiesAreNormal) {
  auto rs = complete_rewrite_system(Theory::of(fixtures::M()), {});
  EXPECT_EQ(normalize(*rs, Path::identity("*")), Path::identity("*"));
}

TEST(Completion, NormalizeIsIdempotent) {
  auto rs = complete_rewrite_system(Theory::of(fixtures::M()), {});
  for (const auto& w : oracle::words({"f", "g"}, 5)) {
    Path n = normalize(*rs, loop("*", w));
    EXPECT_EQ(normalize(*rs, n), n);
  }
}

TEST(Completion, GivesUpWithinBudget) {
  // Budget of one step cannot finish M.
  Budget b;
  b.kb_steps = 1;
  auto m = fixtures::monoid("X", {"a", "b"}, {{{"a", "b", "a"}, {"b", "a", "b"}}});
  EXPECT_FALSE(complete_rewrite_system(Theory::of(m), b));
}

TEST(Completion, OrderOverride) {
  auto m = fixtures::M();
  m.order = {"g", "f"};
  auto rs = complete_rewrite_system(Theory::of(m), {});
  ASSERT_TRUE(rs);
  EXPECT_EQ(rs->rules[0].lhs, loop("*", {"f", "g"}));
}

TEST(MorphismsEqual, NotFaithful) {
  auto F = fixtures::morphism("F", fixtures::N(), fixtures::M(), {{"s", {"f", "g"}}});
  auto G = fixtures::morphism("G", fixtures::N(), fixtures::M(), {{"s", {"g", "f"}}});
  EXPECT_FALSE(F.fun_map == G.fun_map);
  EXPECT_EQ(morphisms_equal(F, G, {}).status, ProofStatus::Proved);
  EXPECT_EQ(morphisms_equal(F, F, {}).status, ProofStatus::Proved);
}

TEST(MorphismsEqual, DistinctImages) {
  auto F = fixtures::morphism("F", fixtures::N(), fixtures::M(), {{"s", {"f"}}});
  auto G = fixtures::morphism("G", fixtures::N(), fixtures::M(), {{"s", {"g"}}});
  auto r = morphisms_equal(F, G, {});
  EXPECT_TRUE(r.refuted());
}

TEST(MorphismsEqual, NotParallel) {
  auto F = fixtures::morphism("F", fixtures::N(), fixtures::M(), {{"s", {"f"}}});
  auto G = fixtures::morphism("G", fixtures::N(), fixtures::N(), {{"s", {"s"}}});
  EXPECT_THROW(morphisms_equal(F, G, {}), Error);
}

std::vector<Theory> hygiene_theories() {
  return {Theory::of(fixtures::M()), Theory::of(fixtures::N()), q_star(),
          Theory::of(fixtures::monoid("B", {"a", "b"},
                                      {{{"a", "a"}, {}}, {{"b", "b", "b"}, {}},
                                       {{"a", "b", "a", "b"}, {}}}))};
}

TEST(Hygiene, ClosureNeverContradictsCompletion) {
  Budget b;
  b.max_len = 6;
  for (const auto& t : hygiene_theories()) {
    Prover pv(t, b);
    auto rs = pv.completion();
    ASSERT_TRUE(rs) << t.pres.name;
    const Closure& cl = pv.closure();
    std::vector<std::string> alphabet;
    for (const auto& f : t.pres.funs) alphabet.push_back(f.name);
    std::vector<Path> paths;
    for (const auto& w : oracle::words(alphabet, 5)) {
      for (const auto& s : t.pres.sorts) {
        Path p = Path::identity(s);
        try {
          p = typecheck_path(t.pres, w, s);
        } catch (const Error&) {
          continue;
        }
        paths.push_back(p);
      }
    }
    for (size_t i = 0; i < paths.size(); ++i)
      for (size_t j = i + 1; j < paths.size(); ++j) {
        const Path &p = paths[i], &q = paths[j];
        if (p.src != q.src || p.tgt != q.tgt) continue;
        int a = cl.class_of(p), c = cl.class_of(q);
        if (a >= 0 && a == c)
          EXPECT_EQ(normalize(*rs, p), normalize(*rs, q))
              << t.pres.name << ": " << to_string(p) << " vs " << to_string(q);
      }
  }
}

TEST(Hygiene, WitnessesReplay) {
  Budget b;
  b.max_len = 6;
  for (const auto& t : hygiene_theories()) {
    Prover pv(t, b, false);
    std::vector<std::string> alphabet;
    for (const auto& f : t.pres.funs) alphabet.push_back(f.name);
    int checked = 0;
    for (const auto& w : oracle::words(alphabet, 4)) {
      Path p;
      try {
        p = typecheck_path(t.pres, w, t.pres.sorts[0]);
      } catch (const Error&) {
        continue;
      }
      for (const auto& q : pv.closure().members(p)) {
        auto r = pv.prove(p, q);
        ASSERT_EQ(r.status, ProofStatus::Proved);
        EXPECT_TRUE(oracle::replay(t.pres.eqs, *r.witness))
            << to_string(p) << " ~ " << to_string(q);
        ++checked;
      }
    }
    EXPECT_GT(checked, 0);
  }
}

TEST(Hygiene, BudgetMonotonicity) {
  std::vector<Budget> ladder;
  for (int len = 2; len <= 8; len += 2)
    for (int rounds : {1, 4, 16}) ladder.push_back({len, rounds, 0});
  for (const auto& t : hygiene_theories()) {
    std::vector<std::string> alphabet;
    for (const auto& f : t.pres.funs) alphabet.push_back(f.name);
    std::vector<Path> paths;
    for (const auto& w : oracle::words(alphabet, 4))
      try {
        paths.push_back(typecheck_path(t.pres, w, t.pres.sorts[0]));
      } catch (const Error&) {
      }
    for (size_t k = 0; k + 1 < ladder.size(); ++k) {
      const Budget& small = ladder[k];
      for (size_t l = k + 1; l < ladder.size(); ++l) {
        const Budget& big = ladder[l];
        if (big.max_len < small.max_len || big.rounds < small.rounds) continue;
        Prover a(t, small, false), c(t, big, false);
        for (const auto& p : paths)
          for (const auto& q : paths) {
            if (p.tgt != q.tgt) continue;
            if (a.prove(p, q).status == ProofStatus::Proved)
              EXPECT_EQ(c.prove(p, q).status, ProofStatus::Proved);
          }
      }
    }
  }
}

}  // namespace
}  // namespace profpres

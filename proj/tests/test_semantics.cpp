#include <gtest/gtest.h>

#include <iostream>
#include <random>
#include <set>

#include "corpus.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"
#include "random_cases.hpp"
#include "profpres/bridge.hpp"
#include "profpres/compose.hpp"
#include "profpres/dsl.hpp"
#include "profpres/semantics.hpp"

using namespace profpres;

namespace {

const Budget kB{};

const CurriedPresentation& Pc() { return corpus::get<CurriedPresentation>("Pc"); }
const CurriedPresentation& Qc() { return corpus::get<CurriedPresentation>("Qc"); }
const UncurriedPresentation& U(const std::string& n) {
  return corpus::get<UncurriedPresentation>(n);
}

std::vector<std::string> corpus_categories() {
  std::vector<std::string> out;
  for (const auto& [n, e] : corpus::ws().entities)
    if (std::holds_alternative<CatPresentation>(e)) out.push_back(n);
  return out;
}

std::vector<CurriedPresentation> corpus_curried() {
  std::vector<CurriedPresentation> out;
  for (const auto& [n, e] : corpus::ws().entities)
    if (auto* p = std::get_if<CurriedPresentation>(&e)) out.push_back(*p);
  out.push_back(compose_curried(Pc(), Qc()));
  return out;
}

std::vector<std::string> labels(const ProfunctorTable& t, const std::vector<int>& es) {
  std::vector<std::string> out;
  for (int e : es) out.push_back(e < 0 ? "-" : t.elems[e].label);
  return out;
}

int elem(const ProfunctorTable& t, const std::string& label) {
  for (size_t i = 0; i < t.elems.size(); ++i)
    if (t.elems[i].label == label) return static_cast<int>(i);
  return -1;
}

int morph(const FiniteCategoryTable& t, const std::string& rep) {
  for (size_t i = 0; i < t.morphs.size(); ++i)
    if (to_string(t.morphs[i].rep) == rep) return static_cast<int>(i);
  return -1;
}

// Coend by the definition: all pairs over a shared middle object, glued along
// every middle morphism, components by naive label propagation.
std::map<std::pair<std::string, std::string>, int> naive_coend_sizes(
    const ProfunctorTable& tp, const ProfunctorTable& tq) {
  std::vector<std::pair<int, int>> pairs;
  for (size_t s = 0; s < tp.elems.size(); ++s)
    for (size_t q = 0; q < tq.elems.size(); ++q)
      if (tp.elems[s].d == tq.elems[q].c) pairs.push_back({int(s), int(q)});
  auto idx = [&](int s, int q) {
    for (size_t i = 0; i < pairs.size(); ++i)
      if (pairs[i] == std::pair{s, q}) return int(i);
    return -1;
  };
  std::vector<std::pair<int, int>> rel;
  for (size_t m = 0; m < tp.right.morphs.size(); ++m) {
    int mq = -1;
    for (size_t k = 0; k < tq.left.morphs.size(); ++k)
      if (tq.left.morphs[k].rep == tp.right.morphs[m].rep) mq = int(k);
    if (mq < 0) continue;
    // (s.m, q) ~ (s, m.q) for s ending and q starting at the two ends of m
    for (size_t s = 0; s < tp.elems.size(); ++s)
      for (size_t q = 0; q < tq.elems.size(); ++q) {
        if (tp.elems[s].d != tp.right.morphs[m].src) continue;
        if (tq.elems[q].c != tp.right.morphs[m].tgt) continue;
        int sm = tp.ract[s][m], mt = tq.lact[mq][q];
        if (sm < 0 || mt < 0) continue;
        int a = idx(sm, int(q)), b = idx(int(s), mt);
        if (a >= 0 && b >= 0) rel.push_back({a, b});
      }
  }
  auto lab = oracle::components(int(pairs.size()), rel);
  std::map<std::pair<std::string, std::string>, std::set<int>> cls;
  for (size_t i = 0; i < pairs.size(); ++i)
    cls[{tp.elems[pairs[i].first].c, tq.elems[pairs[i].second].d}].insert(lab[i]);
  std::map<std::pair<std::string, std::string>, int> out;
  for (auto& [k, v] : cls) out[k] = int(v.size());
  return out;
}

}  // namespace

// ---------------------------------------------------------------- categories

TEST(CategoryTable, CommutativeMonoidMatchesBagCount) {
  const auto& M = corpus::get<CatPresentation>("M");
  for (int k = 0; k <= 5; ++k) {
    auto t = saturate_theory(Theory::of(M), kB, k);
    EXPECT_EQ(t.morphs.size(), oracle::commutative_classes({"f", "g"}, k)) << k;
    EXPECT_FALSE(t.stabilized);
    EXPECT_TRUE(table_law_violations(t).empty());
  }
}

TEST(CategoryTable, FreeMonoidGrowsByOne) {
  for (int k = 0; k <= 6; ++k) {
    auto t = saturate_theory(Theory::of(fixtures::N()), kB, k);
    EXPECT_EQ(t.morphs.size(), size_t(k + 1));
  }
}

TEST(CategoryTable, IdempotentStabilizes) {
  auto c = fixtures::monoid("Id", {"e"}, {{{"e", "e"}, {"e"}}});
  auto t = saturate_theory(Theory::of(c), kB, 3);
  EXPECT_TRUE(t.stabilized);
  ASSERT_EQ(t.morphs.size(), 2u);
  int e = morph(t, "e");
  EXPECT_EQ(t.compose[e][e], e);
  EXPECT_EQ(t.compose[t.identity.at("*")][e], e);
  EXPECT_TRUE(table_law_violations(t).empty());
}

TEST(CategoryTable, TerminalIsOneMorphism) {
  auto t = saturate_theory(Theory::of(fixtures::E()), kB, 4);
  EXPECT_TRUE(t.stabilized);
  EXPECT_EQ(t.morphs.size(), 1u);
}

// ---------------------------------------------------------------- profunctors

TEST(ProfunctorTable, ComposedExampleMatchesWorkedTable) {
  auto PQ = compose_curried(Pc(), Qc());
  auto t = profunctor_table(PQ, kB, 4);
  EXPECT_TRUE(t.stabilized);
  ASSERT_EQ(t.elems.size(), 3u);
  int x = elem(t, "x*q"), y = elem(t, "y*q"), yt = elem(t, "y*q.t");
  ASSERT_GE(x, 0);
  ASSERT_GE(y, 0);
  ASSERT_GE(yt, 0);
  int f = morph(t.left, "f"), g = morph(t.left, "g"), tt = morph(t.right, "t");
  for (int m : {f, g}) {
    EXPECT_EQ(t.lact[m][x], x);
    EXPECT_EQ(t.lact[m][y], yt);
    EXPECT_EQ(t.lact[m][yt], yt);
  }
  EXPECT_EQ(t.ract[x][tt], x);
  EXPECT_EQ(t.ract[y][tt], yt);
  EXPECT_EQ(t.ract[yt][tt], yt);
  EXPECT_TRUE(table_law_violations(t).empty());
}

TEST(ProfunctorTable, CurriedPcIsUnbounded) {
  auto t = profunctor_table(Pc(), kB, 4);
  EXPECT_FALSE(t.stabilized);
  // x and y.s^n for n <= 4
  EXPECT_EQ(labels(t, t.at("*", "*")),
            (std::vector<std::string>{"x", "y", "y.s", "y.s.s", "y.s.s.s",
                                      "y.s.s.s.s"}));
  int f = morph(t.left, "f"), g = morph(t.left, "g");
  EXPECT_EQ(t.elems[t.lact[f][elem(t, "y")]].label, "y.s");
  EXPECT_EQ(t.elems[t.lact[g][elem(t, "y.s")]].label, "y.s.s.s");
  EXPECT_EQ(t.lact[g][elem(t, "y.s.s.s")], -1);
  EXPECT_TRUE(table_law_violations(t).empty());
}

TEST(ProfunctorTable, InstanceHasDepthPlusTwoClasses) {
  const auto& I = corpus::get<InstancePresentation>("I");
  for (int k = 1; k <= 6; ++k) {
    auto t = profunctor_table(as_uncurried(I), kB, k);
    EXPECT_EQ(t.elems.size(), size_t(k + 2)) << k;
    EXPECT_FALSE(t.stabilized);
  }
}

TEST(ProfunctorTable, UncurriedGrowth) {
  for (int k = 0; k <= 6; ++k) {
    auto t = profunctor_table(U("Qu"), kB, k);
    EXPECT_EQ(t.at("d", "e").size(), size_t(k + 1)) << k;
    EXPECT_TRUE(table_law_violations(t).empty());
  }
}

TEST(ProfunctorTable, HomTableOfFiniteCategory) {
  auto c = fixtures::monoid("Id", {"e"}, {{{"e", "e"}, {"e"}}});
  auto h = hom_table(saturate_theory(Theory::of(c), kB, 3));
  EXPECT_TRUE(h.stabilized);
  EXPECT_EQ(h.elems.size(), 2u);
  EXPECT_TRUE(table_law_violations(h).empty());
}

TEST(ProfunctorTable, AllCorpusTablesObeyLaws) {
  for (const auto& P : corpus_curried())
    EXPECT_TRUE(table_law_violations(profunctor_table(P, kB, 3)).empty()) << P.name;
  for (const auto& n : {"Pu", "Qu", "Papp", "Qapp"})
    EXPECT_TRUE(table_law_violations(profunctor_table(U(n), kB, 3)).empty()) << n;
}

// ---------------------------------------------------------------- coends

TEST(Coend, UncurriedCompositeGrowsStrictly) {
  size_t prev = 0;
  for (int k = 0; k <= 6; ++k) {
    auto tp = profunctor_table(U("Pu"), kB, k);
    auto tq = profunctor_table(U("Qu"), kB, k);
    auto co = coend_compose(tp, tq);
    size_t n = co.at("c", "e").size();
    EXPECT_EQ(n, size_t(k + 1)) << k;
    if (k > 0) EXPECT_GT(n, prev);
    prev = n;
    EXPECT_FALSE(co.stabilized);
  }
}

TEST(Coend, MatchesNaiveOracleOnBoundedInputs) {
  auto tp = profunctor_table(U("Pu"), kB, 3);
  auto tq = profunctor_table(U("Qu"), kB, 3);
  // Unbounded pairing on bounded tables: every weight is allowed.
  auto co = coend_compose(tp, tq, 100);
  auto naive = naive_coend_sizes(tp, tq);
  for (auto& [k, n] : naive) EXPECT_EQ(int(co.at(k.first, k.second).size()), n);
}

TEST(Coend, CounterexampleClassesShiftAndFix) {
  for (int k = 1; k <= 5; ++k) {
    auto tp = profunctor_table(U("Papp"), kB, k);
    auto tq = profunctor_table(U("Qapp"), kB, k);
    auto co = coend_compose(tp, tq);
    auto xs = co.at("*", "*");
    ASSERT_EQ(xs.size(), size_t(k + 1)) << k;
    // pq_n: the class of weight n
    std::map<int, int> pq;
    for (int e : xs) pq[co.elems[e].weight] = e;
    ASSERT_EQ(pq.size(), size_t(k + 1));
    int a = morph(co.right, "a"), b = morph(co.right, "b");
    for (int n = 0; n <= k; ++n) {
      EXPECT_EQ(co.ract[pq[n]][b], pq[n]) << n;
      if (n < k) EXPECT_EQ(co.ract[pq[n]][a], pq[n + 1]) << n;
    }
  }
}

TEST(Coend, MiddleMismatchThrows) {
  auto tp = profunctor_table(U("Pu"), kB, 2);
  try {
    coend_compose(tp, tp);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::MiddleMismatch);
  }
}

// ---------------------------------------------------------------- isos

TEST(Iso, MuForWorkedExample) {
  auto r = check_mu_iso(Pc(), Qc(), kB, 3);
  EXPECT_EQ(r.status, IsoStatus::Iso) << r.witness;
  EXPECT_GT(r.checked, 0);
}

TEST(Iso, MuWithUnitsForCorpus) {
  for (const auto& P : corpus_curried()) {
    auto l = check_mu_iso(unit_presentation(P.left), P, kB, 3);
    EXPECT_EQ(l.status, IsoStatus::Iso) << P.name << ": " << l.witness;
    auto r = check_mu_iso(P, unit_presentation(P.right), kB, 3);
    EXPECT_EQ(r.status, IsoStatus::Iso) << P.name << ": " << r.witness;
  }
}

TEST(Iso, MuIsNaturalInPhiPsi) {
  const auto& phi = corpus::get<CurriedMorphism>("phi");
  const auto& psi = corpus::get<CurriedMorphism>("psi");
  auto r = check_mu_naturality(phi, psi, kB, 3);
  EXPECT_EQ(r.status, IsoStatus::Iso) << r.witness;
  EXPECT_GT(r.checked, 0);
  auto id = check_mu_naturality(identity_curried_morphism(Pc()),
                                identity_curried_morphism(Qc()), kB, 3);
  EXPECT_EQ(id.status, IsoStatus::Iso) << id.witness;
}

TEST(Iso, UnitIsHomForCorpusCategories) {
  for (const auto& n : corpus_categories()) {
    auto r = check_unit_iso(corpus::get<CatPresentation>(n), kB, 4);
    EXPECT_EQ(r.status, IsoStatus::Iso) << n << ": " << r.witness;
  }
}

TEST(Iso, UncurryPreservesSemantics) {
  for (const auto& P : corpus_curried()) {
    auto r = check_uncurry_iso(P, kB, 3);
    EXPECT_EQ(r.status, IsoStatus::Iso) << P.name << ": " << r.witness;
  }
}

TEST(Iso, SearchFindsIsoBetweenCurriedAndUncurriedComposite) {
  auto PQ = compose_curried(Pc(), Qc());
  auto a = profunctor_table(PQ, kB, 4);
  auto b = profunctor_table(uncurry(PQ), kB, 4);
  ASSERT_TRUE(a.stabilized);
  ASSERT_TRUE(b.stabilized);
  auto r = find_table_iso(a, b);
  EXPECT_EQ(r.status, IsoStatus::Iso);
  EXPECT_TRUE(r.exact);
}

TEST(Iso, SearchRejectsDifferentActions) {
  // Same element counts, different right actions.
  auto PQ = compose_curried(Pc(), Qc());
  auto a = profunctor_table(PQ, kB, 4);
  auto b = a;
  int y = elem(b, "y*q"), yt = elem(b, "y*q.t"), tt = morph(b.right, "t");
  b.ract[y][tt] = y;
  b.ract[yt][tt] = yt;
  EXPECT_EQ(find_table_iso(a, b).status, IsoStatus::NotIso);
}

TEST(Iso, SearchIsInconclusiveOnUnstabilized) {
  auto a = profunctor_table(Pc(), kB, 3);
  EXPECT_EQ(find_table_iso(a, a).status, IsoStatus::Inconclusive);
}

TEST(Iso, SearchCountsMismatch) {
  auto a = profunctor_table(compose_curried(Pc(), Qc()), kB, 4);
  auto b = a;
  b.elems.pop_back();
  for (auto& row : b.lact) row.pop_back();
  b.ract.pop_back();
  auto r = find_table_iso(a, b);
  EXPECT_EQ(r.status, IsoStatus::NotIso);
  EXPECT_NE(r.witness.find("3 vs 2"), std::string::npos);
}

TEST(Iso, BaseMismatchThrows) {
  auto a = profunctor_table(Pc(), kB, 2);
  auto b = profunctor_table(Qc(), kB, 2);
  try {
    find_table_iso(a, b);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::BaseMismatch);
  }
}

TEST(Iso, BrokenMapIsRejected) {
  auto PQ = compose_curried(Pc(), Qc());
  auto a = profunctor_table(PQ, kB, 4);
  std::vector<int> f{0, 1, 2};
  std::swap(f[0], f[1]);
  EXPECT_EQ(check_map_iso(a, a, f).status, IsoStatus::NotIso);
  std::vector<int> id{0, 1, 2};
  EXPECT_EQ(check_map_iso(a, a, id).status, IsoStatus::Iso);
}

// ---------------------------------------------------------------- random

namespace {

using namespace random_cases;

std::string render_case(const CurriedPresentation& P,
                        const CurriedPresentation& Q) {
  return render(Entity{P}) + render(Entity{Q});
}

}  // namespace

TEST(RandomSemantics, CoendMatchesCompositeAndNaiveOracle) {
  std::mt19937 rng(20261018);
  int stabilized = 0, attempts = 0, with_eqs = 0, multi = 0;
  size_t elems = 0;
  while (stabilized < 200 && attempts < 5000) {
    ++attempts;
    std::uniform_int_distribution<int> ns(1, 2);
    auto C = random_category(rng, "C", 1);
    auto D = random_category(rng, "D", ns(rng));
    auto E = random_category(rng, "E", ns(rng));
    auto P = random_curried(rng, C, D, "P");
    auto Q = random_curried(rng, D, E, "Q");
    if (!P || !Q) continue;
    auto tp = profunctor_table(*P, kB, 6);
    auto tq = profunctor_table(*Q, kB, 6);
    auto PQ = compose_curried(*P, *Q);
    auto tpq = profunctor_table(PQ, kB, 6);
    if (!tp.stabilized || !tq.stabilized || !tpq.stabilized) continue;
    ++stabilized;
    auto co = coend_compose(tp, tq);
    elems += co.elems.size();
    multi += D.sorts.size() > 1;
    for (const auto& [c, i] : P->at) with_eqs += !i.eqs.empty();
    ASSERT_TRUE(co.stabilized);
    auto naive = naive_coend_sizes(tp, tq);
    for (const auto& c : C.sorts)
      for (const auto& e : E.sorts) {
        int n = naive.count({c, e}) ? naive[{c, e}] : 0;
        ASSERT_EQ(int(co.at(c, e).size()), n) << render_case(*P, *Q);
        ASSERT_EQ(int(tpq.at(c, e).size()), n) << render_case(*P, *Q);
      }
    auto r = check_mu_iso(*P, *Q, kB, 6);
    ASSERT_EQ(r.status, IsoStatus::Iso) << r.witness;
    ASSERT_TRUE(r.exact);
    ASSERT_TRUE(table_law_violations(co).empty());
    auto lu = find_table_iso(coend_compose(hom_table(tp.left), tp), tp);
    auto ru = find_table_iso(coend_compose(tp, hom_table(tp.right)), tp);
    ASSERT_EQ(lu.status, IsoStatus::Iso) << lu.witness;
    ASSERT_EQ(ru.status, IsoStatus::Iso) << ru.witness;
    ASSERT_EQ(check_uncurry_iso(*P, kB, 6).status, IsoStatus::Iso);
  }
  EXPECT_GE(stabilized, 200) << "attempts " << attempts;
  std::cout << stabilized << " cases from " << attempts << " attempts, "
            << elems << " coend elements, " << with_eqs
            << " with equations, " << multi << " with two middle sorts\n";
}

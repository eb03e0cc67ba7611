#include "profpres/dsl.hpp"

#include "corpus.hpp"
#include "fixtures.hpp"
#include "gtest/gtest.h"

namespace profpres {
namespace {

DslError parse_error(const std::string& text) {
  try {
    parse_workspace(text, "t.prof");
  } catch (const DslError& e) {
    return e;
  }
  ADD_FAILURE() << "no error for: " << text;
  return DslError(ErrorKind::ParseError, "", {});
}

TEST(Parse, MonoidM) {
  auto ws = parse_workspace(
      "category M { sorts *; fun f : * -> *; fun g : * -> *; eq f.g = g.f; }");
  const auto* m = ws.get<CatPresentation>("M");
  ASSERT_TRUE(m);
  EXPECT_EQ(*m, fixtures::M());
}

TEST(Parse, TrivialMonoid) {
  auto ws = parse_workspace("category E { sorts *; }");
  EXPECT_EQ(*ws.get<CatPresentation>("E"), fixtures::E());
}

TEST(Parse, Instance) {
  auto ws = parse_workspace(
      "category N { sorts *; fun s : * -> *; }\n"
      "instance I on N { gen x : *; gen y : *; eq x.s = x; }");
  const auto* i = ws.get<InstancePresentation>("I");
  ASSERT_TRUE(i);
  EXPECT_EQ(i->base, fixtures::N());
  ASSERT_EQ(i->gens.size(), 2u);
  ASSERT_EQ(i->eqs.size(), 1u);
  EXPECT_EQ(i->eqs[0].lhs, (Term{"x", fixtures::loop("*", {"s"})}));
  EXPECT_EQ(i->eqs[0].rhs, (Term{"x", Path::identity("*")}));
}

TEST(Parse, CorpusLoads) {
  EXPECT_GE(corpus::ws().entities.size(), 20u);
  const auto& q = corpus::get<UncurriedPresentation>("Qapp");
  ASSERT_EQ(q.eqs.size(), 2u);
  EXPECT_EQ(q.eqs[0].lhs.left.syms, std::vector<std::string>{"f"});
  EXPECT_EQ(q.eqs[0].rhs.right.syms, std::vector<std::string>{"a"});
  const auto& p = corpus::get<CurriedPresentation>("Pc");
  EXPECT_EQ(p.at.at("*").name, "Pc@*");
  EXPECT_EQ(to_string(p.act.at("g").at("y")), "y.s.s");
}

TEST(Parse, CommentsAndUtf8) {
  auto ws = parse_workspace(
      "// line\n/* block\n comment */ category Ω { sorts ★; fun φ : ★ -> ★; }");
  const auto* c = ws.get<CatPresentation>("Ω");
  ASSERT_TRUE(c);
  EXPECT_EQ(c->funs[0].name, "φ");
}

TEST(ParseErrors, LexErrorSpan) {
  auto e = parse_error("category M {\n  sorts *; fun f : * -> #; }");
  EXPECT_EQ(e.kind(), ErrorKind::LexError);
  EXPECT_EQ(e.span().line, 2);
  EXPECT_EQ(e.span().col, 25);
}

TEST(ParseErrors, ParseErrorSpan) {
  auto e = parse_error("category M { sorts * fun f : * -> *; }");
  EXPECT_EQ(e.kind(), ErrorKind::ParseError);
  EXPECT_EQ(e.span().col, 22);
}

TEST(ParseErrors, UnknownSymbolPointsInsideToken) {
  std::string src = "category N { sorts *; fun s : * -> *; eq s.zz = s; }";
  auto e = parse_error(src);
  EXPECT_EQ(e.kind(), ErrorKind::ResolveError);
  EXPECT_EQ(e.span().line, 1);
  int col = e.span().col;
  EXPECT_EQ(src.substr(col - 1, 2), "zz");
  EXPECT_EQ(e.span().end_col - e.span().col, 2);
}

TEST(ParseErrors, CompositionMismatch) {
  auto e = parse_error(
      "category C { sorts a, b; fun f : a -> b; fun g : a -> b; eq f.g = f; }");
  EXPECT_EQ(e.kind(), ErrorKind::ResolveError);
}

TEST(ParseErrors, UnknownBase) {
  auto e = parse_error("instance I on Nope { gen x : *; }");
  EXPECT_EQ(e.kind(), ErrorKind::ResolveError);
  EXPECT_EQ(e.span().col, 15);
}

TEST(ParseErrors, DuplicateEntity) {
  auto e = parse_error("category A { sorts *; }\ncategory A { sorts *; }");
  EXPECT_EQ(e.kind(), ErrorKind::ResolveError);
  EXPECT_EQ(e.span().line, 2);
}

TEST(ParseErrors, ProClashesWithFrameSymbol) {
  auto e = parse_error(
      "category D { sorts d; fun f : d -> d; }\n"
      "uncurried P : D -> D { pro f : d -> d; }");
  EXPECT_EQ(e.kind(), ErrorKind::ResolveError);
}

TEST(ParseErrors, NonParallelEquation) {
  auto e = parse_error(
      "category C { sorts a, b; fun f : a -> b; eq f = id(a); }");
  EXPECT_EQ(e.kind(), ErrorKind::ResolveError);
}

TEST(ParseErrors, UnterminatedComment) {
  EXPECT_EQ(parse_error("category A { sorts *; } /* open").kind(),
            ErrorKind::LexError);
}

TEST(Render, ContainsEquation) {
  std::string out = render(Entity(corpus::get<CatPresentation>("M")));
  EXPECT_NE(out.find("eq f.g = g.f;"), std::string::npos);
}

TEST(Render, IdentityPath) {
  auto ws = parse_workspace(
      "category N { sorts *; fun s : * -> *; }\n"
      "morphism Z : N -> N { s -> id(*); }");
  std::string out = render(*ws.find("Z"));
  EXPECT_NE(out.find("s -> id(*);"), std::string::npos);
}

TEST(Render, RoundTripCorpus) {
  const auto& ws = corpus::ws();
  std::string text = render(ws);
  Workspace again = parse_workspace(text, "rendered");
  ASSERT_EQ(again.entities.size(), ws.entities.size());
  for (size_t i = 0; i < ws.entities.size(); ++i)
    EXPECT_TRUE(again.entities[i] == ws.entities[i]) << ws.entities[i].first;
  EXPECT_EQ(render(again), text);
}

TEST(Render, PathRoundTrip) {
  const auto& m = corpus::get<CatPresentation>("M");
  for (const auto& p : {Path::identity("*"), fixtures::loop("*", {"f"}),
                        fixtures::loop("*", {"g", "f", "g"})})
    EXPECT_EQ(parse_path(m, to_string(p)), p);
  const auto& q = corpus::get<UncurriedPresentation>("Qapp");
  CrossPath c = parse_cross_path(q, "f.q.a.b");
  EXPECT_EQ(c.left.syms, std::vector<std::string>{"f"});
  EXPECT_EQ(c.right.syms, (std::vector<std::string>{"a", "b"}));
  EXPECT_EQ(parse_cross_path(q, to_string(c)), c);
}

TEST(Json, Stable) {
  const auto& ws = corpus::ws();
  std::string a = export_json(ws);
  Workspace again = parse_workspace(render(ws));
  EXPECT_EQ(export_json(again), a);
  EXPECT_EQ(export_json(ws), a);
}

TEST(Json, CategoryShape) {
  std::string j = export_json(Entity(corpus::get<CatPresentation>("M")));
  EXPECT_EQ(j.find("\"kind\": \"category\""), 4u);
  EXPECT_NE(j.find("\"name\": \"f\""), std::string::npos);
}

TEST(Json, CurriedHasAtAndAct) {
  std::string j = export_json(*corpus::ws().find("Pc"));
  EXPECT_NE(j.find("\"at\""), std::string::npos);
  EXPECT_NE(j.find("\"act\""), std::string::npos);
  EXPECT_NE(j.find("\"kind\": \"curried\""), std::string::npos);
}

}  // namespace
}  // namespace profpres

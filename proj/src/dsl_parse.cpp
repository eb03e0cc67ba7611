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

#include <cctype>
#include <set>

#include "profpres/dsl.hpp"

namespace profpres {

std::string to_string(const SourceSpan& s) {
  return s.file + ":" + std::to_string(s.line) + ":" + std::to_string(s.col);
}

const std::string& entity_name(const Entity& e) {
  return std::visit([](const auto& x) -> const std::string& { return x.name; },
                    e);
}

const char* entity_kind(const Entity& e) {
  static const char* kinds[] = {"category",           "instance",
                                "uncurried",          "curried",
                                "category_morphism",  "instance_morphism",
                                "uncurried_morphism", "curried_morphism"};
  return kinds[e.index()];
}

const Entity* Workspace::find(const std::string& name) const {
  for (const auto& [n, e] : entities)
    if (n == name) return &e;
  return nullptr;
}

void Workspace::add(Entity e) {
  std::string n = entity_name(e);
  if (find(n)) throw Error(ErrorKind::DuplicateName, "duplicate entity " + n);
  entities.emplace_back(n, std::move(e));
}

namespace {

enum class Tok {
  Ident, LBrace, RBrace, Semi, Colon, Comma, Dot, Eq, LParen, RParen, Arrow,
  End
};

struct Token {
  Tok kind;
  std::string text;
  SourceSpan span;
};

bool ident_char(unsigned char c) {
  return std::isalnum(c) || c == '_' || c == '*' || c == '\'' || c >= 0x80;
}

std::vector<Token> lex(const std::string& text, const std::string& file) {
  std::vector<Token> out;
  int line = 1, col = 1;
  size_t i = 0;
  auto span_at = [&](int l, int c, int len) {
    return SourceSpan{file, l, c, l, c + len};
  };
  auto advance = [&](size_t n) {
    for (size_t k = 0; k < n && i < text.size(); ++k, ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else if ((static_cast<unsigned char>(text[i]) & 0xC0) != 0x80) {
        ++col;
      }
    }
  };
  while (i < text.size()) {
    unsigned char c = text[i];
    if (std::isspace(c)) {
      advance(1);
      continue;
    }
    if (text.compare(i, 2, "//") == 0) {
      while (i < text.size() && text[i] != '\n') advance(1);
      continue;
    }
    if (text.compare(i, 2, "/*") == 0) {
      int l = line, cc = col;
      size_t end = text.find("*/", i + 2);
      if (end == std::string::npos)
        throw DslError(ErrorKind::LexError, "unterminated comment",
                       span_at(l, cc, 2));
      advance(end + 2 - i);
      continue;
    }
    if (text.compare(i, 2, "->") == 0) {
      out.push_back({Tok::Arrow, "->", span_at(line, col, 2)});
      advance(2);
      continue;
    }
    Tok single = Tok::End;
    switch (c) {
      case '{': single = Tok::LBrace; break;
      case '}': single = Tok::RBrace; break;
      case ';': single = Tok::Semi; break;
      case ':': single = Tok::Colon; break;
      case ',': single = Tok::Comma; break;
      case '.': single = Tok::Dot; break;
      case '=': single = Tok::Eq; break;
      case '(': single = Tok::LParen; break;
      case ')': single = Tok::RParen; break;
      default: break;
    }
    if (single != Tok::End) {
      out.push_back({single, std::string(1, c), span_at(line, col, 1)});
      advance(1);
      continue;
    }
    if (ident_char(c)) {
      int l = line, cc = col;
      size_t start = i;
      while (i < text.size() && ident_char(text[i])) advance(1);
      out.push_back({Tok::Ident, text.substr(start, i - start),
                     SourceSpan{file, l, cc, l, col}});
      continue;
    }
    throw DslError(ErrorKind::LexError,
                   std::string("unexpected character '") +
                       static_cast<char>(c) + "'",
                   span_at(line, col, 1));
  }
  out.push_back({Tok::End, "", span_at(line, col, 1)});
  return out;
}

struct Named {
  std::string text;
  SourceSpan span;
};

struct RawPath {
  bool is_id = false;
  Named sort;
  std::vector<Named> syms;
  SourceSpan span;
};

[[noreturn]] void resolve_error(const std::string& msg, const SourceSpan& s) {
  throw DslError(ErrorKind::ResolveError, msg, s);
}

Path resolve_path(const CatPresentation& c, const RawPath& r) {
  if (r.is_id) {
    if (!c.has_sort(r.sort.text))
      resolve_error("unknown sort " + r.sort.text + " in " + c.name,
                    r.sort.span);
    return Path::identity(r.sort.text);
  }
  const FunSym* first = c.find_fun(r.syms[0].text);
  if (!first)
    resolve_error("unknown symbol " + r.syms[0].text + " in " + c.name,
                  r.syms[0].span);
  Path p = Path::identity(first->src);
  for (const auto& s : r.syms) {
    const FunSym* f = c.find_fun(s.text);
    if (!f) resolve_error("unknown symbol " + s.text + " in " + c.name, s.span);
    if (f->src != p.tgt)
      resolve_error("symbol " + s.text + " starts at " + f->src +
                        " but the path is at " + p.tgt,
                    s.span);
    p.syms.push_back(s.text);
    p.tgt = f->tgt;
  }
  return p;
}

Path resolve_tail(const CatPresentation& c, const std::string& start,
                  const std::vector<Named>& syms, size_t from) {
  Path p = Path::identity(start);
  for (size_t k = from; k < syms.size(); ++k) {
    const auto& s = syms[k];
    const FunSym* f = c.find_fun(s.text);
    if (!f) resolve_error("unknown symbol " + s.text + " in " + c.name, s.span);
    if (f->src != p.tgt)
      resolve_error("symbol " + s.text + " starts at " + f->src +
                        " but the path is at " + p.tgt,
                    s.span);
    p.syms.push_back(s.text);
    p.tgt = f->tgt;
  }
  return p;
}

Term resolve_term(const InstancePresentation& i, const RawPath& r) {
  if (r.is_id) resolve_error("a term starts with a generator", r.span);
  const Generator* g = i.find_gen(r.syms[0].text);
  if (!g)
    resolve_error("unknown generator " + r.syms[0].text, r.syms[0].span);
  return Term{g->name, resolve_tail(i.base, g->sort, r.syms, 1)};
}

CrossPath resolve_cross(const UncurriedPresentation& u, const RawPath& r) {
  if (r.is_id) resolve_error("a cross-path needs a pro symbol", r.span);
  size_t k = 0;
  while (k < r.syms.size() && !u.find_pro(r.syms[k].text)) ++k;
  if (k == r.syms.size())
    resolve_error("cross-path without a pro symbol", r.span);
  const FunSym* pro = u.find_pro(r.syms[k].text);
  CrossPath c;
  c.pro = pro->name;
  std::vector<Named> left(r.syms.begin(), r.syms.begin() + k);
  if (left.empty()) {
    c.left = Path::identity(pro->src);
  } else {
    RawPath lr;
    lr.syms = left;
    c.left = resolve_path(u.left, lr);
    if (c.left.tgt != pro->src)
      resolve_error("left path ends at " + c.left.tgt + ", " + pro->name +
                        " starts at " + pro->src,
                    r.syms[k].span);
  }
  c.right = resolve_tail(u.right, pro->tgt, r.syms, k + 1);
  return c;
}

class Parser {
 public:
  Parser(std::vector<Token> toks, Workspace& ws)
      : toks_(std::move(toks)), ws_(ws) {}

  void run() {
    while (peek().kind != Tok::End) {
      const Token& kw = expect_ident();
      if (kw.text == "category") category();
      else if (kw.text == "instance") instance();
      else if (kw.text == "uncurried") uncurried();
      else if (kw.text == "curried") curried();
      else if (kw.text == "morphism") morphism();
      else
        throw DslError(ErrorKind::ParseError,
                       "expected a declaration, found " + kw.text, kw.span);
    }
  }

  RawPath raw_path() {
    RawPath r;
    const Token& first = expect_ident();
    r.span = first.span;
    if (first.text == "id" && peek().kind == Tok::LParen) {
      next();
      const Token& s = expect_ident();
      expect(Tok::RParen, ")");
      r.is_id = true;
      r.sort = {s.text, s.span};
      return r;
    }
    r.syms.push_back({first.text, first.span});
    while (peek().kind == Tok::Dot) {
      next();
      const Token& t = expect_ident();
      r.syms.push_back({t.text, t.span});
      r.span.end_line = t.span.end_line;
      r.span.end_col = t.span.end_col;
    }
    return r;
  }

  void expect_end() {
    if (peek().kind != Tok::End)
      throw DslError(ErrorKind::ParseError, "trailing input", peek().span);
  }

 private:
  const Token& peek() const { return toks_[pos_]; }
  const Token& next() { return toks_[pos_ < toks_.size() - 1 ? pos_++ : pos_]; }

  const Token& expect(Tok k, const char* what) {
    if (peek().kind != k)
      throw DslError(ErrorKind::ParseError,
                     std::string("expected '") + what + "', found '" +
                         (peek().kind == Tok::End ? "end of input" : peek().text) +
                         "'",
                     peek().span);
    return next();
  }
  const Token& expect_ident() {
    if (peek().kind != Tok::Ident)
      throw DslError(ErrorKind::ParseError,
                     "expected an identifier, found '" +
                         (peek().kind == Tok::End ? std::string("end of input")
                                                  : peek().text) +
                         "'",
                     peek().span);
    return next();
  }
  void expect_keyword(const char* kw) {
    const Token& t = expect_ident();
    if (t.text != kw)
      throw DslError(ErrorKind::ParseError,
                     std::string("expected '") + kw + "', found " + t.text,
                     t.span);
  }

  template <class T>
  const T& lookup(const Token& t, const char* kind) {
    const Entity* e = ws_.find(t.text);
    if (!e) resolve_error("unknown " + std::string(kind) + " " + t.text, t.span);
    const T* x = std::get_if<T>(e);
    if (!x) resolve_error(t.text + " is not a " + kind, t.span);
    return *x;
  }

  void add(Entity e, const SourceSpan& at) {
    if (ws_.find(entity_name(e)))
      resolve_error("duplicate entity " + entity_name(e), at);
    ws_.add(std::move(e));
  }

  void check(const std::vector<Diagnostic>& d, const SourceSpan& at) {
    if (!d.empty()) resolve_error(d.front().message, at);
  }

  void category() {
    const Token& name = expect_ident();
    CatPresentation c;
    c.name = name.text;
    std::vector<std::pair<RawPath, RawPath>> eqs;
    std::vector<std::pair<FunSym, std::pair<SourceSpan, SourceSpan>>> funs;
    std::vector<Named> order;
    std::set<std::string> seen_sorts;
    expect(Tok::LBrace, "{");
    while (peek().kind != Tok::RBrace) {
      const Token& kw = expect_ident();
      if (kw.text == "sorts") {
        do {
          const Token& s = expect_ident();
          if (!seen_sorts.insert(s.text).second)
            resolve_error("duplicate sort " + s.text, s.span);
          c.sorts.push_back(s.text);
        } while (peek().kind == Tok::Comma && (next(), true));
      } else if (kw.text == "fun") {
        const Token& f = expect_ident();
        expect(Tok::Colon, ":");
        const Token& s = expect_ident();
        expect(Tok::Arrow, "->");
        const Token& t = expect_ident();
        if (c.find_fun(f.text)) resolve_error("duplicate symbol " + f.text, f.span);
        c.funs.push_back({f.text, s.text, t.text});
        funs.push_back({c.funs.back(), {s.span, t.span}});
      } else if (kw.text == "eq") {
        RawPath l = raw_path();
        expect(Tok::Eq, "=");
        RawPath r = raw_path();
        eqs.push_back({l, r});
      } else if (kw.text == "order") {
        do {
          const Token& s = expect_ident();
          order.push_back({s.text, s.span});
        } while (peek().kind == Tok::Comma && (next(), true));
      } else {
        throw DslError(ErrorKind::ParseError,
                       "expected sorts, fun, eq or order, found " + kw.text,
                       kw.span);
      }
      expect(Tok::Semi, ";");
    }
    expect(Tok::RBrace, "}");
    for (const auto& [f, spans] : funs) {
      if (!c.has_sort(f.src)) resolve_error("unknown sort " + f.src, spans.first);
      if (!c.has_sort(f.tgt)) resolve_error("unknown sort " + f.tgt, spans.second);
    }
    for (const auto& o : order) {
      if (!c.find_fun(o.text)) resolve_error("unknown symbol " + o.text, o.span);
      c.order.push_back(o.text);
    }
    for (const auto& [l, r] : eqs) {
      Path a = resolve_path(c, l), b = resolve_path(c, r);
      if (a.src != b.src || a.tgt != b.tgt)
        resolve_error("equation sides are not parallel", l.span);
      c.eqs.push_back({a, b});
    }
    add(std::move(c), name.span);
  }

  void instance_body(InstancePresentation& i) {
    std::vector<std::pair<RawPath, RawPath>> eqs;
    expect(Tok::LBrace, "{");
    while (peek().kind != Tok::RBrace) {
      const Token& kw = expect_ident();
      if (kw.text == "gen") {
        const Token& g = expect_ident();
        expect(Tok::Colon, ":");
        const Token& s = expect_ident();
        if (!i.base.has_sort(s.text))
          resolve_error("unknown sort " + s.text + " in " + i.base.name, s.span);
        if (i.find_gen(g.text)) resolve_error("duplicate generator " + g.text, g.span);
        i.gens.push_back({g.text, s.text});
      } else if (kw.text == "eq") {
        RawPath l = raw_path();
        expect(Tok::Eq, "=");
        RawPath r = raw_path();
        eqs.push_back({l, r});
      } else {
        throw DslError(ErrorKind::ParseError,
                       "expected gen or eq, found " + kw.text, kw.span);
      }
      expect(Tok::Semi, ";");
    }
    expect(Tok::RBrace, "}");
    for (const auto& [l, r] : eqs) {
      Term a = resolve_term(i, l), b = resolve_term(i, r);
      if (a.type() != b.type())
        resolve_error("equation sides are not parallel", l.span);
      i.eqs.push_back({a, b});
    }
  }

  void instance() {
    const Token& name = expect_ident();
    expect_keyword("on");
    const Token& base = expect_ident();
    InstancePresentation i;
    i.name = name.text;
    i.base = lookup<CatPresentation>(base, "category");
    instance_body(i);
    add(std::move(i), name.span);
  }

  void frames(const CatPresentation*& a, const CatPresentation*& b) {
    expect(Tok::Colon, ":");
    a = &lookup<CatPresentation>(expect_ident(), "category");
    expect(Tok::Arrow, "->");
    b = &lookup<CatPresentation>(expect_ident(), "category");
  }

  void uncurried() {
    const Token& name = expect_ident();
    const CatPresentation *l, *r;
    frames(l, r);
    UncurriedPresentation u;
    u.name = name.text;
    u.left = *l;
    u.right = *r;
    std::vector<std::pair<RawPath, RawPath>> eqs;
    expect(Tok::LBrace, "{");
    while (peek().kind != Tok::RBrace) {
      const Token& kw = expect_ident();
      if (kw.text == "pro") {
        const Token& p = expect_ident();
        expect(Tok::Colon, ":");
        const Token& s = expect_ident();
        expect(Tok::Arrow, "->");
        const Token& t = expect_ident();
        if (u.find_pro(p.text)) resolve_error("duplicate pro " + p.text, p.span);
        if (u.left.find_fun(p.text) || u.right.find_fun(p.text))
          resolve_error("pro " + p.text + " clashes with a category symbol",
                        p.span);
        if (!u.left.has_sort(s.text)) resolve_error("unknown sort " + s.text, s.span);
        if (!u.right.has_sort(t.text)) resolve_error("unknown sort " + t.text, t.span);
        u.pros.push_back({p.text, s.text, t.text});
      } else if (kw.text == "eq") {
        RawPath a = raw_path();
        expect(Tok::Eq, "=");
        RawPath b = raw_path();
        eqs.push_back({a, b});
      } else {
        throw DslError(ErrorKind::ParseError,
                       "expected pro or eq, found " + kw.text, kw.span);
      }
      expect(Tok::Semi, ";");
    }
    expect(Tok::RBrace, "}");
    for (const auto& [a, b] : eqs) {
      CrossPath x = resolve_cross(u, a), y = resolve_cross(u, b);
      if (x.src() != y.src() || x.tgt() != y.tgt())
        resolve_error("equation sides are not parallel", a.span);
      u.eqs.push_back({x, y});
    }
    add(std::move(u), name.span);
  }

  GenMap gen_map_body(const InstancePresentation& src,
                      const InstancePresentation& dst) {
    GenMap m;
    expect(Tok::LBrace, "{");
    while (peek().kind != Tok::RBrace) {
      const Token& g = expect_ident();
      if (!src.find_gen(g.text))
        resolve_error("unknown generator " + g.text + " of " + src.name, g.span);
      expect(Tok::Arrow, "->");
      RawPath r = raw_path();
      if (m.count(g.text)) resolve_error("generator mapped twice", g.span);
      m[g.text] = resolve_term(dst, r);
      expect(Tok::Semi, ";");
    }
    expect(Tok::RBrace, "}");
    return m;
  }

  void curried() {
    const Token& name = expect_ident();
    const CatPresentation *l, *r;
    frames(l, r);
    CurriedPresentation p;
    p.name = name.text;
    p.left = *l;
    p.right = *r;
    expect(Tok::LBrace, "{");
    while (peek().kind != Tok::RBrace) {
      const Token& kw = expect_ident();
      if (kw.text == "at") {
        const Token& s = expect_ident();
        if (!p.left.has_sort(s.text)) resolve_error("unknown sort " + s.text, s.span);
        if (p.at.count(s.text)) resolve_error("duplicate at block", s.span);
        InstancePresentation i;
        i.name = p.name + "@" + s.text;
        i.base = p.right;
        instance_body(i);
        p.at[s.text] = std::move(i);
      } else if (kw.text == "act") {
        const Token& f = expect_ident();
        const FunSym* fs = p.left.find_fun(f.text);
        if (!fs) resolve_error("unknown symbol " + f.text, f.span);
        if (!p.at.count(fs->src) || !p.at.count(fs->tgt))
          resolve_error("act " + f.text + " needs both at blocks first", f.span);
        if (p.act.count(f.text)) resolve_error("duplicate act block", f.span);
        p.act[f.text] = gen_map_body(p.at.at(fs->tgt), p.at.at(fs->src));
      } else {
        throw DslError(ErrorKind::ParseError,
                       "expected at or act, found " + kw.text, kw.span);
      }
    }
    expect(Tok::RBrace, "}");
    check(validate_structure(p), name.span);
    add(std::move(p), name.span);
  }

  void morphism() {
    const Token& name = expect_ident();
    expect(Tok::Colon, ":");
    const Token& a = expect_ident();
    expect(Tok::Arrow, "->");
    const Token& b = expect_ident();
    const Entity* ea = ws_.find(a.text);
    const Entity* eb = ws_.find(b.text);
    if (!ea) resolve_error("unknown entity " + a.text, a.span);
    if (!eb) resolve_error("unknown entity " + b.text, b.span);
    if (ea->index() != eb->index())
      resolve_error(a.text + " and " + b.text + " are of different kinds", b.span);
    if (auto* c = std::get_if<CatPresentation>(ea))
      cat_morphism(name, *c, std::get<CatPresentation>(*eb));
    else if (auto* i = std::get_if<InstancePresentation>(ea))
      instance_morphism(name, *i, std::get<InstancePresentation>(*eb), b.span);
    else if (auto* u = std::get_if<UncurriedPresentation>(ea))
      uncurried_morphism(name, *u, std::get<UncurriedPresentation>(*eb), b.span);
    else if (auto* p = std::get_if<CurriedPresentation>(ea))
      curried_morphism(name, *p, std::get<CurriedPresentation>(*eb), b.span);
    else
      resolve_error("morphisms go between presentations", a.span);
  }

  void cat_morphism(const Token& name, const CatPresentation& a,
                    const CatPresentation& b) {
    CatMorphism m{name.text, a, b, {}, {}};
    expect(Tok::LBrace, "{");
    std::vector<std::pair<Named, RawPath>> funs;
    while (peek().kind != Tok::RBrace) {
      const Token& x = expect_ident();
      expect(Tok::Arrow, "->");
      if (!a.find_fun(x.text) && a.has_sort(x.text)) {
        const Token& y = expect_ident();
        if (!b.has_sort(y.text)) resolve_error("unknown sort " + y.text, y.span);
        m.sort_map[x.text] = y.text;
      } else {
        if (!a.find_fun(x.text))
          resolve_error("unknown symbol " + x.text + " in " + a.name, x.span);
        funs.push_back({{x.text, x.span}, raw_path()});
      }
      expect(Tok::Semi, ";");
    }
    expect(Tok::RBrace, "}");
    for (const auto& s : a.sorts) {
      if (m.sort_map.count(s)) continue;
      if (b.has_sort(s)) m.sort_map[s] = s;
      else if (b.sorts.size() == 1) m.sort_map[s] = b.sorts[0];
      else resolve_error("no image for sort " + s, name.span);
    }
    for (const auto& [f, r] : funs) {
      Path p = resolve_path(b, r);
      const FunSym* fs = a.find_fun(f.text);
      if (p.src != m.sort_map[fs->src] || p.tgt != m.sort_map[fs->tgt])
        resolve_error("image of " + f.text + " has the wrong endpoints", r.span);
      m.fun_map[f.text] = p;
    }
    check(validate_structure(m), name.span);
    add(std::move(m), name.span);
  }

  void instance_morphism(const Token& name, const InstancePresentation& a,
                         const InstancePresentation& b, const SourceSpan& at) {
    if (!(a.base == b.base)) resolve_error("instances over different bases", at);
    InstanceMorphism m{name.text, a, b, identity_morphism(a.base), {}};
    m.gen_map = gen_map_body(a, b);
    for (const auto& g : a.gens) {
      if (!m.gen_map.count(g.name)) resolve_error("no image for " + g.name, name.span);
      if (m.gen_map[g.name].type() != g.sort)
        resolve_error("image of " + g.name + " has the wrong type", name.span);
    }
    add(std::move(m), name.span);
  }

  void uncurried_morphism(const Token& name, const UncurriedPresentation& a,
                          const UncurriedPresentation& b, const SourceSpan& at) {
    if (!(a.left == b.left) || !(a.right == b.right))
      resolve_error("uncurried morphisms keep both frames fixed", at);
    UncurriedMorphism m{name.text, a, b, {}};
    expect(Tok::LBrace, "{");
    while (peek().kind != Tok::RBrace) {
      const Token& p = expect_ident();
      const FunSym* fs = a.find_pro(p.text);
      if (!fs) resolve_error("unknown pro " + p.text, p.span);
      expect(Tok::Arrow, "->");
      RawPath r = raw_path();
      CrossPath c = resolve_cross(b, r);
      if (c.src() != fs->src || c.tgt() != fs->tgt)
        resolve_error("image of " + p.text + " has the wrong endpoints", r.span);
      m.pro_map[p.text] = c;
      expect(Tok::Semi, ";");
    }
    expect(Tok::RBrace, "}");
    for (const auto& p : a.pros)
      if (!m.pro_map.count(p.name)) resolve_error("no image for " + p.name, name.span);
    add(std::move(m), name.span);
  }

  void curried_morphism(const Token& name, const CurriedPresentation& a,
                        const CurriedPresentation& b, const SourceSpan& at) {
    if (!(a.left == b.left) || !(a.right == b.right))
      resolve_error("curried morphisms in the text syntax keep both frames fixed",
                    at);
    CurriedMorphism m{name.text, a, b, identity_morphism(a.left),
                      identity_morphism(a.right), {}};
    expect(Tok::LBrace, "{");
    while (peek().kind != Tok::RBrace) {
      expect_keyword("at");
      const Token& s = expect_ident();
      if (!a.left.has_sort(s.text)) resolve_error("unknown sort " + s.text, s.span);
      if (m.components.count(s.text)) resolve_error("duplicate at block", s.span);
      m.components[s.text] = gen_map_body(a.at.at(s.text), b.at.at(s.text));
    }
    expect(Tok::RBrace, "}");
    for (const auto& c : a.left.sorts) {
      if (!m.components.count(c)) resolve_error("no component at " + c, name.span);
      for (const auto& g : a.at.at(c).gens) {
        auto it = m.components[c].find(g.name);
        if (it == m.components[c].end())
          resolve_error("no image for " + g.name + " at " + c, name.span);
        if (it->second.type() != g.sort)
          resolve_error("image of " + g.name + " has the wrong type", name.span);
      }
    }
    add(std::move(m), name.span);
  }

  std::vector<Token> toks_;
  size_t pos_ = 0;
  Workspace& ws_;
};

RawPath lex_raw_path(const std::string& text) {
  Workspace scratch;
  Parser p(lex(text, "<path>"), scratch);
  RawPath r = p.raw_path();
  p.expect_end();
  return r;
}

}  // namespace

void parse_into(Workspace& ws, const std::string& text,
                const std::string& file) {
  Parser p(lex(text, file), ws);
  p.run();
}

Workspace parse_workspace(const std::string& text, const std::string& file) {
  Workspace ws;
  parse_into(ws, text, file);
  return ws;
}

Path parse_path(const CatPresentation& c, const std::string& text) {
  return resolve_path(c, lex_raw_path(text));
}

Term parse_term(const InstancePresentation& i, const std::string& text) {
  return resolve_term(i, lex_raw_path(text));
}

CrossPath parse_cross_path(const UncurriedPresentation& u,
                           const std::string& text) {
  return resolve_cross(u, lex_raw_path(text));
}

}  // namespace profpres

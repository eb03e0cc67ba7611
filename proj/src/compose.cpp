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

#include "profpres/compose.hpp"

#include <set>

namespace profpres {

std::string tensor_name(const std::string& p, const std::string& q) {
  return p + "*" + q;
}

std::string unit_generator(const std::string& sort) { return "x_" + sort; }

namespace {

Term gen_term(const Generator& g) { return Term{g.name, Path::identity(g.sort)}; }

const InstancePresentation& at(const CurriedPresentation& P,
                               const std::string& c) {
  auto it = P.at.find(c);
  if (it == P.at.end())
    throw Error(ErrorKind::UnknownSort, P.name + " has no instance at " + c);
  return it->second;
}

}  // namespace

Term tensor(const CurriedPresentation& P, const CurriedPresentation& Q,
            const std::string& c, const Term& s, const Term& t) {
  const auto& pc = at(P, c);
  if (!term_in(pc, s))
    throw Error(ErrorKind::TypeMismatch,
                to_string(s) + " is not a term of " + pc.name);
  const auto& qd = at(Q, s.type());
  if (!term_in(qd, t))
    throw Error(ErrorKind::TypeMismatch,
                to_string(t) + " is not a term of " + qd.name);
  const Generator* p = pc.find_gen(s.gen);
  Term moved = act_path(Q, s.path, t);  // a term of Q(type p)
  return Term{tensor_name(p->name, moved.gen), moved.path};
}

CurriedPresentation compose_curried(const CurriedPresentation& P,
                                    const CurriedPresentation& Q) {
  if (!(P.right == Q.left))
    throw Error(ErrorKind::BaseMismatch, "right base of " + P.name +
                                             " is not the left base of " +
                                             Q.name);
  CurriedPresentation out;
  out.name = P.name + "*" + Q.name;
  out.left = P.left;
  out.right = Q.right;
  for (const auto& c : P.left.sorts) {
    const auto& pc = at(P, c);
    InstancePresentation inst;
    inst.name = out.name + "@" + c;
    inst.base = Q.right;
    std::set<std::string> names;
    for (const auto& p : pc.gens)
      for (const auto& q : at(Q, p.sort).gens) {
        std::string n = tensor_name(p.name, q.name);
        if (!names.insert(n).second)
          throw Error(ErrorKind::DuplicateName,
                      "generator name " + n + " is ambiguous in " + inst.name);
        inst.gens.push_back({n, q.sort});
      }
    for (const auto& p : pc.gens) {
      Term x = gen_term(p);
      for (const auto& e : at(Q, p.sort).eqs)
        inst.eqs.push_back({tensor(P, Q, c, x, e.lhs), tensor(P, Q, c, x, e.rhs)});
    }
    for (const auto& e : pc.eqs)
      for (const auto& q : at(Q, e.lhs.type()).gens)
        inst.eqs.push_back({tensor(P, Q, c, e.lhs, gen_term(q)),
                            tensor(P, Q, c, e.rhs, gen_term(q))});
    out.at[c] = std::move(inst);
  }
  for (const auto& f : P.left.funs) {
    GenMap m;
    for (const auto& p : at(P, f.tgt).gens) {
      const Term& image = P.act.at(f.name).at(p.name);
      for (const auto& q : at(Q, p.sort).gens)
        m[tensor_name(p.name, q.name)] = tensor(P, Q, f.src, image, gen_term(q));
    }
    out.act[f.name] = std::move(m);
  }
  return out;
}

CurriedMorphism compose_curried_morphisms(const CurriedMorphism& phi,
                                          const CurriedMorphism& psi) {
  if (!(phi.f1 == psi.f0))
    throw Error(ErrorKind::FrameMismatch, "right frame of " + phi.name +
                                              " is not the left frame of " +
                                              psi.name);
  CurriedPresentation src = compose_curried(phi.source, psi.source);
  CurriedPresentation tgt = compose_curried(phi.target, psi.target);
  CurriedMorphism out{phi.name + "*" + psi.name, src, tgt, phi.f0, psi.f1, {}};
  for (const auto& c : phi.source.left.sorts) {
    const std::string& c2 = phi.f0.sort_map.at(c);
    auto& comp = out.components[c];
    for (const auto& p : at(phi.source, c).gens) {
      const Term& pp = phi.components.at(c).at(p.name);
      for (const auto& q : at(psi.source, p.sort).gens)
        comp[tensor_name(p.name, q.name)] =
            tensor(phi.target, psi.target, c2, pp,
                   psi.components.at(p.sort).at(q.name));
    }
  }
  return out;
}

CurriedPresentation unit_presentation(const CatPresentation& c) {
  CurriedPresentation u;
  u.name = "U_" + c.name;
  u.left = c;
  u.right = c;
  for (const auto& s : c.sorts) {
    InstancePresentation i;
    i.name = u.name + "@" + s;
    i.base = c;
    i.gens.push_back({unit_generator(s), s});
    u.at[s] = std::move(i);
  }
  for (const auto& f : c.funs)
    u.act[f.name][unit_generator(f.tgt)] =
        Term{unit_generator(f.src), Path{f.src, f.tgt, {f.name}}};
  return u;
}

namespace {

CurriedMorphism globular(const std::string& name, const CurriedPresentation& a,
                         const CurriedPresentation& b) {
  return CurriedMorphism{name, a, b, identity_morphism(a.left),
                         identity_morphism(a.right), {}};
}

}  // namespace

CoherenceCell left_unitor(const CurriedPresentation& P) {
  CurriedPresentation UP = compose_curried(unit_presentation(P.left), P);
  CoherenceCell out{globular("lambda_" + P.name, UP, P),
                    globular("lambda_" + P.name + "^-1", P, UP)};
  for (const auto& c : P.left.sorts) {
    out.cell.components[c];
    out.inverse.components[c];
    for (const auto& p : at(P, c).gens) {
      std::string n = tensor_name(unit_generator(c), p.name);
      out.cell.components[c][n] = gen_term(p);
      out.inverse.components[c][p.name] = Term{n, Path::identity(p.sort)};
    }
  }
  return out;
}

CoherenceCell right_unitor(const CurriedPresentation& P) {
  CurriedPresentation PU = compose_curried(P, unit_presentation(P.right));
  CoherenceCell out{globular("rho_" + P.name, PU, P),
                    globular("rho_" + P.name + "^-1", P, PU)};
  for (const auto& c : P.left.sorts) {
    out.cell.components[c];
    out.inverse.components[c];
    for (const auto& p : at(P, c).gens) {
      std::string n = tensor_name(p.name, unit_generator(p.sort));
      out.cell.components[c][n] = gen_term(p);
      out.inverse.components[c][p.name] = Term{n, Path::identity(p.sort)};
    }
  }
  return out;
}

CoherenceCell associator(const CurriedPresentation& P,
                         const CurriedPresentation& Q,
                         const CurriedPresentation& R) {
  CurriedPresentation a = compose_curried(compose_curried(P, Q), R);
  CurriedPresentation b = compose_curried(P, compose_curried(Q, R));
  std::string n = P.name + "," + Q.name + "," + R.name;
  CoherenceCell out{globular("alpha_" + n, a, b),
                    globular("alpha_" + n + "^-1", b, a)};
  for (const auto& c : P.left.sorts) {
    out.cell.components[c];
    out.inverse.components[c];
    for (const auto& p : at(P, c).gens)
      for (const auto& q : at(Q, p.sort).gens)
        for (const auto& r : at(R, q.sort).gens) {
          std::string x = tensor_name(tensor_name(p.name, q.name), r.name);
          std::string y = tensor_name(p.name, tensor_name(q.name, r.name));
          out.cell.components[c][x] = Term{y, Path::identity(r.sort)};
          out.inverse.components[c][y] = Term{x, Path::identity(r.sort)};
        }
  }
  return out;
}

CoherenceCell coherence_cell(CellKind kind,
                             const std::vector<CurriedPresentation>& args) {
  size_t need = kind == CellKind::Associator ? 3 : 1;
  if (args.size() != need)
    throw Error(ErrorKind::FrameMismatch, "wrong number of presentations");
  switch (kind) {
    case CellKind::Associator:
      if (!(args[0].right == args[1].left) || !(args[1].right == args[2].left))
        throw Error(ErrorKind::FrameMismatch, "presentations do not compose");
      return associator(args[0], args[1], args[2]);
    case CellKind::LeftUnitor:
      return left_unitor(args[0]);
    case CellKind::RightUnitor:
      return right_unitor(args[0]);
  }
  throw Error(ErrorKind::FrameMismatch, "unknown cell");
}

ValidationReport check_pentagon(const CurriedPresentation& P,
                                const CurriedPresentation& Q,
                                const CurriedPresentation& R,
                                const CurriedPresentation& S, const Budget& b) {
  CurriedPresentation PQ = compose_curried(P, Q);
  CurriedPresentation RS = compose_curried(R, S);
  CurriedPresentation QR = compose_curried(Q, R);
  auto top = compose_curried_morphism_chain(associator(PQ, R, S).cell,
                                            associator(P, Q, RS).cell);
  auto first = compose_curried_morphisms(associator(P, Q, R).cell,
                                         identity_curried_morphism(S));
  auto middle = associator(P, QR, S).cell;
  auto last = compose_curried_morphisms(identity_curried_morphism(P),
                                        associator(Q, R, S).cell);
  auto bottom = compose_curried_morphism_chain(
      compose_curried_morphism_chain(first, middle), last);
  return curried_morphisms_equal(top, bottom, b);
}

ValidationReport check_triangle(const CurriedPresentation& P,
                                const CurriedPresentation& Q, const Budget& b) {
  CurriedPresentation U = unit_presentation(P.right);
  auto direct = compose_curried_morphisms(right_unitor(P).cell,
                                          identity_curried_morphism(Q));
  auto around = compose_curried_morphism_chain(
      associator(P, U, Q).cell,
      compose_curried_morphisms(identity_curried_morphism(P),
                                left_unitor(Q).cell));
  return curried_morphisms_equal(direct, around, b);
}

}  // namespace profpres

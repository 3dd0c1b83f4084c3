#include "oracle.hpp"

#include <functional>
#include <utility>

#include "ctt/errors.hpp"

namespace ctt::oracle {

namespace {

Interval iv(const Name& n) { return Interval::var(n); }

std::vector<Branch> dropFalse(std::vector<Branch> sys) {
  std::vector<Branch> out;
  for (auto& b : sys)
    if (!faceIsZero(b.face)) out.push_back(std::move(b));
  return out;
}

std::vector<Face> facesOf(const std::vector<Branch>& sys) {
  std::vector<Face> out;
  for (const auto& b : sys) out.push_back(b.face);
  return out;
}

std::vector<Branch> mapTerms(const std::vector<Branch>& sys,
                             const std::function<Term(const Term&)>& f) {
  std::vector<Branch> out;
  for (const auto& b : sys) out.push_back({b.face, f(b.tm)});
  return out;
}

Term predFn() {
  Name n = fresh("n"), m = fresh("m"), x = fresh("x"), y = fresh("y");
  return mkLam(n, mkNat(),
               mkNatrec(m, mkNat(), mkVar(n), mkZero(),
                        mkLam(x, mkNat(), mkLam(y, mkNat(), mkVar(x)))));
}

Term oFill(const Name& i, const Term& line, const std::vector<Branch>& sys,
           const Term& u0) {
  Name j = fresh("j");
  Interval ij = ivMeet(iv(i), iv(j));
  std::vector<Branch> sys2;
  for (const auto& b : sys) sys2.push_back({b.face, substName(b.tm, i, ij)});
  sys2.push_back({Face::atom(i, false), u0});
  return mkComp(j, substName(line, i, ij), std::move(sys2), u0);
}

Term fiberTy(const Term& T, const Term& A, const Term& a, const Term& fn) {
  Name x = fresh("x");
  return mkSigma(x, T, mkPathND(A, a, mkApp(fn, mkVar(x))));
}

Term contrTy(const Term& C) {
  Name c = fresh("c"), y = fresh("y");
  return mkSigma(c, C, mkPi(y, C, mkPathND(C, mkVar(c), mkVar(y))));
}

Term equivTy(const Term& T, const Term& A) {
  Name f = fresh("f"), a = fresh("a");
  return mkSigma(f, mkArrow(T, A),
                 mkPi(a, A, contrTy(fiberTy(T, A, mkVar(a), mkVar(f)))));
}

Term oIdEquiv(const Term& A) {
  Name x = fresh("x"), a = fresh("a"), y = fresh("y");
  Name j = fresh("j"), j2 = fresh("j"), k = fresh("k");
  Term idf = mkLam(x, A, mkVar(x));
  Term fib = fiberTy(A, A, mkVar(a), idf);
  Term center = mkPair(mkVar(a), mkPLam(j, mkVar(a)));
  Term contract =
      mkLam(y, fib,
            mkPLam(k, mkPair(mkPApp(mkSnd(mkVar(y)), iv(k)),
                             mkPLam(j2, mkPApp(mkSnd(mkVar(y)),
                                               ivMeet(iv(j2), iv(k)))))));
  return mkPair(idf, mkLam(a, A, mkPair(center, contract)));
}

Term oPtoeq(const Name& i, const Term& line) {
  Term l0 = atEnd(line, i, false);
  return mkComp(i, equivTy(l0, line), {}, oIdEquiv(l0));
}

Term oPres(const Name& i, const Term& fn, const Term& T, const Term& A,
           const std::vector<Branch>& sys, const Term& u0) {
  Term v = oFill(i, T, sys, u0);
  Name j = fresh("j");
  std::vector<Branch> br;
  for (const auto& b : sys) br.push_back({b.face, mkApp(fn, b.tm)});
  br.push_back({Face::atom(j, true), mkApp(fn, v)});
  return mkPLam(
      j, mkComp(i, A, std::move(br), mkApp(atEnd(fn, i, false), u0)));
}

struct ExtBranch {
  Face face;
  Term t;
  Term path;
};

std::pair<Term, Term> oEquivExtend(const Term& w, const Term& T, const Term& A,
                                   const std::vector<ExtBranch>& branches,
                                   const Term& a) {
  Term fib = fiberTy(T, A, a, mkFst(w));
  Term contr = mkApp(mkSnd(w), a);
  Name j = fresh("j");
  std::vector<Branch> br;
  for (const auto& e : branches)
    br.push_back(
        {e.face, mkPApp(mkApp(mkSnd(contr), mkPair(e.t, e.path)), iv(j))});
  Term res = mkComp(j, fib, std::move(br), mkFst(contr));
  return {mkFst(res), mkSnd(res)};
}

Term oCompGlue(const Name& i, const Term& glueTy,
               const std::vector<Branch>& sys, const Term& u0) {
  const auto& gb = glueTy->gsys;
  Term A = glueTy->sub[0];
  Face phi = Face::zero();
  for (const auto& g : gb) phi = faceJoin(phi, g.face);

  Term Tsys, wsys;
  if (gb.size() == 1) {
    Tsys = gb[0].ty;
    wsys = gb[0].eqv;
  } else {
    std::vector<Branch> ts, ws;
    for (const auto& g : gb) {
      ts.push_back({g.face, g.ty});
      ws.push_back({g.face, g.eqv});
    }
    Tsys = mkSysT(std::move(ts));
    wsys = mkSysE(std::move(ws));
  }

  std::vector<Branch> ann;
  for (const auto& g : gb) ann.push_back({g.face, g.eqv});
  auto unglued = [&](const Term& u) { return mkUnglue(ann, u); };

  std::vector<Branch> ann0;
  for (const auto& g : gb) {
    Face f0 = faceSubst(g.face, {{i, Interval::zero()}});
    if (!faceIsZero(f0)) ann0.push_back({f0, atEnd(g.eqv, i, false)});
  }
  Term a0 = mkUnglue(std::move(ann0), u0);

  Face delta = faceForall(i, phi);
  std::vector<Branch> aSys;
  for (const auto& b : sys) aSys.push_back({b.face, unglued(b.tm)});
  Term a1p = mkComp(i, A, aSys, a0);
  Term t1p = mkComp(i, Tsys, sys, u0);
  Term om = oPres(i, mkFst(wsys), Tsys, A, sys, u0);

  Term w1 = atEnd(wsys, i, true);
  Term T1 = atEnd(Tsys, i, true);
  Term A1 = atEnd(A, i, true);

  std::vector<ExtBranch> ebr;
  if (!faceIsZero(delta)) ebr.push_back({delta, t1p, om});
  for (const auto& b : sys)
    if (!faceIsZero(b.face))
      ebr.push_back({b.face, atEnd(b.tm, i, true), mkPLam(fresh("j"), a1p)});
  auto [t1, alpha] = oEquivExtend(w1, T1, A1, ebr, a1p);

  Name j2 = fresh("j");
  std::vector<Branch> abr;
  Face phi1 = faceSubst(phi, {{i, Interval::one()}});
  if (!faceIsZero(phi1)) abr.push_back({phi1, mkPApp(alpha, iv(j2))});
  for (const auto& b : sys)
    if (!faceIsZero(b.face))
      abr.push_back({b.face, atEnd(unglued(b.tm), i, true)});
  Term a1 = mkComp(j2, A1, std::move(abr), a1p);

  std::vector<Branch> gbr;
  for (const auto& g : gb) {
    Face f1 = faceSubst(g.face, {{i, Interval::one()}});
    if (!faceIsZero(f1)) gbr.push_back({f1, t1});
  }
  return mkGlue(std::move(gbr), a1);
}

Term hn(const NameCtx& I, const Term& t, long& fuel);

Term hnComp(const NameCtx& I, const Term& t, long& fuel) {
  const Name& i = t->dir;
  NameCtx Ii = I;
  Ii.push_back(i);
  Term line = hn(Ii, t->sub[0], fuel);
  const auto& sys = t->sys;
  const Term& u0 = t->sub[1];

  switch (line->tk) {
    case Tk::Nat: {
      Term b = hn(I, u0, fuel);
      if (b->tk == Tk::Zero) return mkZero();
      if (b->tk == Tk::Suc) {
        auto psys = mapTerms(
            sys, [&](const Term& u) { return mkApp(predFn(), u); });
        return mkSuc(mkComp(i, mkNat(), std::move(psys), b->sub[0]));
      }
      throw StuckError("oracle: comp N base is not a numeral head");
    }
    case Tk::Pi: {
      const Name& x = line->var;
      Term dom = line->sub[0], cod = line->sub[1];
      Name y = fresh("y");
      Term revDom = substName(dom, i, ivRev(iv(i)));
      Term yline = oFill(i, revDom, {}, mkVar(y));
      Term ybar = substName(yline, i, ivRev(iv(i)));
      auto br = mapTerms(sys, [&](const Term& u) { return mkApp(u, ybar); });
      return mkLam(y, atEnd(dom, i, true),
                   mkComp(i, termSubst(cod, x, ybar), std::move(br),
                          mkApp(u0, atEnd(ybar, i, false))));
    }
    case Tk::Sigma: {
      const Name& x = line->var;
      Term dom = line->sub[0], cod = line->sub[1];
      auto br1 = mapTerms(sys, [](const Term& u) { return mkFst(u); });
      Term v = oFill(i, dom, br1, mkFst(u0));
      auto br2 = mapTerms(sys, [](const Term& u) { return mkSnd(u); });
      return mkPair(atEnd(v, i, true),
                    mkComp(i, termSubst(cod, x, v), std::move(br2),
                           mkSnd(u0)));
    }
    case Tk::Path: {
      Name jp = fresh("j");
      Term inner = substName(line->sub[0], line->dir, iv(jp));
      std::vector<Branch> br;
      br.push_back({Face::atom(jp, false), line->sub[1]});
      br.push_back({Face::atom(jp, true), line->sub[2]});
      for (const auto& b : sys)
        br.push_back({b.face, mkPApp(b.tm, iv(jp))});
      return mkPLam(jp, mkComp(i, inner, std::move(br), mkPApp(u0, iv(jp))));
    }
    case Tk::GlueT:
      return hn(I, oCompGlue(i, line, sys, u0), fuel);
    case Tk::Univ: {
      std::vector<GlueBranch> gs;
      for (const auto& b : sys) {
        if (faceIsZero(b.face)) continue;
        gs.push_back({b.face, atEnd(b.tm, i, true),
                      oPtoeq(i, substName(b.tm, i, ivRev(iv(i))))});
      }
      return hn(I, mkGlueT(std::move(gs), u0), fuel);
    }
    case Tk::S1: {
      if (auto k = minTrueIndex(facesOf(sys)))
        return hn(I, atEnd(sys[*k].tm, i, true), fuel);
      return mkComp(i, line, sys, u0);
    }
    case Tk::Trunc: {
      Term inner = line->sub[0];
      Name jf = fresh("j");
      auto br = mapTerms(sys, [&](const Term& u) {
        return mkFwd(jf, substName(inner, i, iv(jf)), iv(i), u);
      });
      return hn(I,
                mkHcomp(mkTrunc(atEnd(inner, i, true)), i, std::move(br),
                        mkFwd(i, inner, Interval::zero(), u0)),
                fuel);
    }
    default:
      throw StuckError("oracle: comp over a non-type head");
  }
}

Term hn(const NameCtx& I, const Term& t, long& fuel) {
  if (--fuel < 0) throw FuelExhausted("oracle: out of fuel");
  switch (t->tk) {
    case Tk::Var:
      throw StuckError("oracle: open variable " + show(t->var));
    case Tk::Nat:
    case Tk::Zero:
    case Tk::Suc:
    case Tk::Pi:
    case Tk::Lam:
    case Tk::Sigma:
    case Tk::Pair:
    case Tk::Path:
    case Tk::PLam:
    case Tk::Univ:
    case Tk::S1:
    case Tk::Base:
    case Tk::Trunc:
    case Tk::Inc:
      return t;
    case Tk::Loop:
      return ivIsEnd(t->iv) == End::Neither ? t : mkBase();
    case Tk::Squash: {
      End e = ivIsEnd(t->iv);
      if (e == End::Is0) return hn(I, t->sub[0], fuel);
      if (e == End::Is1) return hn(I, t->sub[1], fuel);
      return t;
    }
    case Tk::SysT:
    case Tk::SysE: {
      if (auto k = minTrueIndex(facesOf(t->sys)))
        return hn(I, t->sys[*k].tm, fuel);
      throw StuckError("oracle: system without a true face");
    }
    case Tk::GlueT: {
      std::vector<Face> fs;
      for (const auto& g : t->gsys) fs.push_back(g.face);
      if (auto k = minTrueIndex(fs)) return hn(I, t->gsys[*k].ty, fuel);
      return t;
    }
    case Tk::Glue: {
      if (auto k = minTrueIndex(facesOf(t->sys)))
        return hn(I, t->sys[*k].tm, fuel);
      return t;
    }
    case Tk::Unglue: {
      if (auto k = minTrueIndex(facesOf(t->sys)))
        return hn(I, mkApp(mkFst(t->sys[*k].tm), t->sub[0]), fuel);
      Term u = hn(I, t->sub[0], fuel);
      if (u->tk == Tk::Glue) return hn(I, u->sub[0], fuel);
      throw StuckError("oracle: unglue of a non-glue");
    }
    case Tk::App: {
      Term f = hn(I, t->sub[0], fuel);
      if (f->tk == Tk::Lam)
        return hn(I, termSubst(f->sub[1], f->var, t->sub[1]), fuel);
      throw StuckError("oracle: application head is not a lambda");
    }
    case Tk::Fst: {
      Term p = hn(I, t->sub[0], fuel);
      if (p->tk == Tk::Pair) return hn(I, p->sub[0], fuel);
      throw StuckError("oracle: fst of a non-pair");
    }
    case Tk::Snd: {
      Term p = hn(I, t->sub[0], fuel);
      if (p->tk == Tk::Pair) return hn(I, p->sub[1], fuel);
      throw StuckError("oracle: snd of a non-pair");
    }
    case Tk::PApp: {
      Term p = hn(I, t->sub[0], fuel);
      if (p->tk == Tk::PLam)
        return hn(I, substName(p->sub[0], p->dir, t->iv), fuel);
      throw StuckError("oracle: path application head is not <i>");
    }
    case Tk::Natrec: {
      Term n = hn(I, t->sub[1], fuel);
      if (n->tk == Tk::Zero) return hn(I, t->sub[2], fuel);
      if (n->tk == Tk::Suc) {
        Term rec = mkNatrec(t->var, t->sub[0], n->sub[0], t->sub[2], t->sub[3]);
        return hn(I, mkApp(mkApp(t->sub[3], n->sub[0]), rec), fuel);
      }
      throw StuckError("oracle: natrec scrutinee is not a numeral head");
    }
    case Tk::Comp:
      return hnComp(I, t, fuel);
    case Tk::Hcomp: {
      if (auto k = minTrueIndex(facesOf(t->sys)))
        return hn(I, atEnd(t->sys[*k].tm, t->dir, true), fuel);
      return t;
    }
    case Tk::Fwd: {
      if (ivIsEnd(t->iv) == End::Is1) return hn(I, t->sub[1], fuel);
      const Name& i = t->dir;
      const Term& line = t->sub[0];
      const Interval& r = t->iv;
      Term u = hn(I, t->sub[1], fuel);
      if (u->tk == Tk::Inc) {
        Term shifted = substName(line, i, ivJoin(iv(i), r));
        std::vector<Branch> br;
        Face r1 = faceOfEq1(r);
        if (!faceIsZero(r1)) br.push_back({r1, u->sub[0]});
        return mkInc(mkComp(i, shifted, std::move(br), u->sub[0]));
      }
      if (u->tk == Tk::Squash)
        return mkSquash(mkFwd(i, line, r, u->sub[0]),
                        mkFwd(i, line, r, u->sub[1]), u->iv);
      if (u->tk == Tk::Hcomp) {
        Name j3 = fresh("j");
        auto br = mapTerms(u->sys, [&](const Term& w) {
          return mkFwd(i, line, r, substName(w, u->dir, iv(j3)));
        });
        return mkHcomp(mkTrunc(atEnd(line, i, true)), j3, std::move(br),
                       mkFwd(i, line, r, u->sub[1]));
      }
      throw StuckError("oracle: fwd of a non-truncation value");
    }
    case Tk::S1Elim: {
      Term s = hn(I, t->sub[1], fuel);
      if (s->tk == Tk::Base) return hn(I, t->sub[2], fuel);
      if (s->tk == Tk::Loop) return hn(I, mkPApp(t->sub[3], s->iv), fuel);
      if (s->tk == Tk::Comp) {
        const Name& i = s->dir;
        Term v = oFill(i, mkS1(), s->sys, s->sub[1]);
        auto br = mapTerms(s->sys, [&](const Term& u) {
          return mkS1Elim(t->var, t->sub[0], u, t->sub[2], t->sub[3]);
        });
        Term b0 = mkS1Elim(t->var, t->sub[0], s->sub[1], t->sub[2], t->sub[3]);
        return hn(I,
                  mkComp(i, termSubst(t->sub[0], t->var, v), std::move(br),
                         b0),
                  fuel);
      }
      throw StuckError("oracle: S1elim scrutinee is not a circle value");
    }
    case Tk::TruncElim: {
      Term s = hn(I, t->sub[1], fuel);
      if (s->tk == Tk::Inc) return hn(I, mkApp(t->sub[2], s->sub[0]), fuel);
      if (s->tk == Tk::Squash) {
        Term eu = mkTruncElim(t->var, t->sub[0], s->sub[0], t->sub[2],
                              t->sub[3]);
        Term ev = mkTruncElim(t->var, t->sub[0], s->sub[1], t->sub[2],
                              t->sub[3]);
        Term applied = mkApp(
            mkApp(mkApp(mkApp(t->sub[3], s->sub[0]), s->sub[1]), eu), ev);
        return hn(I, mkPApp(applied, s->iv), fuel);
      }
      if (s->tk == Tk::Hcomp) {
        const Name& j = s->dir;
        Name j2 = fresh("j");
        std::vector<Branch> wb;
        for (const auto& b : s->sys)
          wb.push_back(
              {b.face, substName(b.tm, j, ivMeet(iv(j), iv(j2)))});
        wb.push_back({Face::atom(j, false), s->sub[1]});
        Term w = mkHcomp(s->sub[0], j2, std::move(wb), s->sub[1]);
        auto br = mapTerms(s->sys, [&](const Term& u) {
          return mkTruncElim(t->var, t->sub[0], u, t->sub[2], t->sub[3]);
        });
        Term b0 =
            mkTruncElim(t->var, t->sub[0], s->sub[1], t->sub[2], t->sub[3]);
        return hn(I,
                  mkComp(j, termSubst(t->sub[0], t->var, w), std::move(br),
                         b0),
                  fuel);
      }
      throw StuckError("oracle: inhelim scrutinee is not a truncation value");
    }
  }
  throw StuckError("oracle: unhandled term");
}

}  // namespace

Term headNormal(const NameCtx& I, const Term& t, long& fuel) {
  return hn(I, t, fuel);
}

unsigned long long evalNat(const NameCtx& I, const Term& t, long fuel) {
  unsigned long long n = 0;
  Term cur = t;
  for (;;) {
    Term v = hn(I, cur, fuel);
    if (v->tk == Tk::Zero) return n;
    if (v->tk == Tk::Suc) {
      ++n;
      cur = v->sub[0];
      continue;
    }
    throw StuckError("oracle: evalNat reached a non-numeral value");
  }
}

Term witness(const NameCtx& I, const Term& t, long fuel) {
  Term cur = t;
  for (;;) {
    Term v = hn(I, cur, fuel);
    if (v->tk == Tk::Inc) return v->sub[0];
    if (v->tk == Tk::Squash) {
      cur = v->sub[0];
      continue;
    }
    if (v->tk == Tk::Hcomp) {
      cur = v->sub[1];
      continue;
    }
    throw StuckError("oracle: witness reached a non-truncation value");
  }
}

}  // namespace ctt::oracle

#include "ctt/subst.hpp"

#include <algorithm>

#include "ctt/errors.hpp"

namespace ctt {

namespace {

std::vector<Branch> mapSys(const std::vector<Branch>& sys, const Sub& faceSub,
                           const Sub& tmSub) {
  std::vector<Branch> out;
  out.reserve(sys.size());
  for (const auto& b : sys)
    out.push_back({faceSubst(b.face, faceSub.iv), applySub(b.tm, tmSub)});
  return out;
}

}  // namespace

Term applySub(const Term& t, const Sub& s) {
  switch (t->tk) {
    case Tk::Var: {
      auto it = s.tm.find(t->var);
      return it == s.tm.end() ? t : it->second;
    }
    case Tk::Nat:
    case Tk::Zero:
    case Tk::Univ:
    case Tk::S1:
    case Tk::Base:
      return t;
    case Tk::Loop:
      return mkLoop(ivSubst(t->iv, s.iv));
    case Tk::Suc:
      return mkSuc(applySub(t->sub[0], s));
    case Tk::App:
      return mkApp(applySub(t->sub[0], s), applySub(t->sub[1], s));
    case Tk::Pair:
      return mkPair(applySub(t->sub[0], s), applySub(t->sub[1], s));
    case Tk::Fst:
      return mkFst(applySub(t->sub[0], s));
    case Tk::Snd:
      return mkSnd(applySub(t->sub[0], s));
    case Tk::Trunc:
      return mkTrunc(applySub(t->sub[0], s));
    case Tk::Inc:
      return mkInc(applySub(t->sub[0], s));
    case Tk::PApp:
      return mkPApp(applySub(t->sub[0], s), ivSubst(t->iv, s.iv));
    case Tk::Squash:
      return mkSquash(applySub(t->sub[0], s), applySub(t->sub[1], s),
                      ivSubst(t->iv, s.iv));
    case Tk::Natrec: {
      Name x = fresh(t->var);
      Sub s2 = s;
      s2.tm[t->var] = mkVar(x);
      return mkNatrec(x, applySub(t->sub[0], s2), applySub(t->sub[1], s),
                      applySub(t->sub[2], s), applySub(t->sub[3], s));
    }
    case Tk::S1Elim: {
      Name x = fresh(t->var);
      Sub s2 = s;
      s2.tm[t->var] = mkVar(x);
      return mkS1Elim(x, applySub(t->sub[0], s2), applySub(t->sub[1], s),
                      applySub(t->sub[2], s), applySub(t->sub[3], s));
    }
    case Tk::TruncElim: {
      Name x = fresh(t->var);
      Sub s2 = s;
      s2.tm[t->var] = mkVar(x);
      return mkTruncElim(x, applySub(t->sub[0], s2), applySub(t->sub[1], s),
                         applySub(t->sub[2], s), applySub(t->sub[3], s));
    }
    case Tk::Pi:
    case Tk::Sigma:
    case Tk::Lam: {
      Name x = fresh(t->var);
      Sub s2 = s;
      s2.tm[t->var] = mkVar(x);
      Term dom = applySub(t->sub[0], s);
      Term body = applySub(t->sub[1], s2);
      if (t->tk == Tk::Pi) return mkPi(x, dom, body);
      if (t->tk == Tk::Sigma) return mkSigma(x, dom, body);
      return mkLam(x, dom, body);
    }
    case Tk::Path: {
      Name i = fresh(t->dir);
      Sub s2 = s;
      s2.iv[t->dir] = Interval::var(i);
      return mkPath(i, applySub(t->sub[0], s2), applySub(t->sub[1], s),
                    applySub(t->sub[2], s));
    }
    case Tk::PLam: {
      Name i = fresh(t->dir);
      Sub s2 = s;
      s2.iv[t->dir] = Interval::var(i);
      return mkPLam(i, applySub(t->sub[0], s2));
    }
    case Tk::SysT:
      return mkSysT(mapSys(t->sys, s, s));
    case Tk::SysE:
      return mkSysE(mapSys(t->sys, s, s));
    case Tk::Glue:
      return mkGlue(mapSys(t->sys, s, s), applySub(t->sub[0], s));
    case Tk::Unglue:
      return mkUnglue(mapSys(t->sys, s, s), applySub(t->sub[0], s));
    case Tk::GlueT: {
      std::vector<GlueBranch> gs;
      gs.reserve(t->gsys.size());
      for (const auto& g : t->gsys)
        gs.push_back({faceSubst(g.face, s.iv), applySub(g.ty, s),
                      applySub(g.eqv, s)});
      return mkGlueT(std::move(gs), applySub(t->sub[0], s));
    }
    case Tk::Comp: {
      Name i = fresh(t->dir);
      Sub s2 = s;
      s2.iv[t->dir] = Interval::var(i);
      return mkComp(i, applySub(t->sub[0], s2), mapSys(t->sys, s, s2),
                    applySub(t->sub[1], s));
    }
    case Tk::Hcomp: {
      Name i = fresh(t->dir);
      Sub s2 = s;
      s2.iv[t->dir] = Interval::var(i);
      return mkHcomp(applySub(t->sub[0], s), i, mapSys(t->sys, s, s2),
                     applySub(t->sub[1], s));
    }
    case Tk::Fwd: {
      Name i = fresh(t->dir);
      Sub s2 = s;
      s2.iv[t->dir] = Interval::var(i);
      return mkFwd(i, applySub(t->sub[0], s2), ivSubst(t->iv, s.iv),
                   applySub(t->sub[1], s));
    }
  }
  throw KernelError("applySub: unhandled tag");
}

NameSubst idSubst(const NameCtx& ctx) {
  NameSubst f;
  f.dom = ctx;
  f.cod = ctx;
  return f;
}

Term apply(const Term& t, const NameSubst& f) {
  return applySub(t, Sub{.iv = f.map});
}

Interval apply(const Interval& r, const NameSubst& f) {
  return ivSubst(r, f.map);
}

Face apply(const Face& phi, const NameSubst& f) {
  return faceSubst(phi, f.map);
}

NameSubst compose(const NameSubst& f, const NameSubst& g) {
  if (!f.cod.empty() && !g.dom.empty() && f.cod != g.dom)
    throw KernelError("compose: context mismatch");
  NameSubst h;
  h.dom = f.dom;
  h.cod = g.cod;
  for (const auto& [n, r] : f.map) h.map[n] = ivSubst(r, g.map);
  for (const auto& [n, r] : g.map)
    if (!h.map.count(n)) h.map[n] = r;
  return h;
}

Term termSubst(const Term& t, const Name& x, const Term& u) {
  Sub s;
  s.tm[x] = u;
  return applySub(t, s);
}

Term substName(const Term& t, const Name& i, const Interval& r) {
  Sub s;
  s.iv[i] = r;
  return applySub(t, s);
}

Term atEnd(const Term& t, const Name& i, bool end1) {
  return substName(t, i, end1 ? Interval::one() : Interval::zero());
}

FaceRestriction faceContextSubst(const Irreducible& alpha, const NameCtx& ctx) {
  FaceRestriction out;
  out.subst.dom = ctx;
  for (const auto& [n, e] : alpha) {
    if (std::find(ctx.begin(), ctx.end(), n) == ctx.end())
      throw KernelError("faceContextSubst: name " + show(n) +
                        " not in context");
    out.subst.map[n] = e ? Interval::one() : Interval::zero();
  }
  for (const auto& n : ctx)
    if (!alpha.count(n)) out.ctx.push_back(n);
  out.subst.cod = out.ctx;
  return out;
}

}  // namespace ctt

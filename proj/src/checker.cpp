#include "ctt/checker.hpp"

#include <algorithm>

#include "ctt/derived.hpp"
#include "ctt/errors.hpp"
#include "ctt/printer.hpp"
#include "ctt/reduction.hpp"

namespace ctt {

namespace {

[[noreturn]] void fail(const char* klass, const std::string& msg) {
  throw CheckError(klass, msg);
}

void spend(long& fuel, const char* where) {
  if (--fuel < 0) fail("Incomplete", std::string("fuel exhausted in ") + where);
}

// Weak-head normalization that treats open variables (and anything the
// engine cannot step) as neutral instead of failing.
Term neuWhnf(const Ctx& ctx, const Term& t, long& fuel) {
  Term cur = t;
  for (;;) {
    spend(fuel, "whnf");
    StepResult r = whnfStep(ctx.names, cur);
    if (r.k != StepResult::K::Stepped) return cur;
    cur = r.t;
  }
}

// A neutral path applied at an endpoint is judgmentally the endpoint of
// its type; resolving this needs the (synthesized) Path type.
Term refineEndpoint(const Ctx& ctx, const Term& v, long& fuel) {
  if (v->tk != Tk::PApp) return v;
  End e = ivIsEnd(v->iv);
  if (e == End::Neither) return v;
  try {
    Term ty = neuWhnf(ctx, infer(ctx, v->sub[0], fuel), fuel);
    if (ty->tk != Tk::Path) return v;
    return neuWhnf(ctx, e == End::Is0 ? ty->sub[1] : ty->sub[2], fuel);
  } catch (const CheckError&) {
    return v;  // leave the neutral as is
  }
}

Ctx bindVar(const Ctx& ctx, const Name& x, const Term& ty) {
  Ctx out = ctx;
  out.vars.emplace_back(x, ty);
  return out;
}

Ctx bindName(const Ctx& ctx, const Name& i) {
  Ctx out = ctx;
  out.names.push_back(i);
  return out;
}

// alpha-bar applied to every entry of the context.
Ctx restrictCtx(const Ctx& ctx, const Irreducible& alpha) {
  FaceRestriction fr = faceContextSubst(alpha, ctx.names);
  Ctx out;
  out.names = fr.ctx;
  for (const auto& [x, ty] : ctx.vars)
    out.vars.emplace_back(x, ctt::apply(ty, fr.subst));
  return out;
}

Term restrictTm(const Ctx& ctx, const Irreducible& alpha, const Term& t) {
  return ctt::apply(t, faceContextSubst(alpha, ctx.names).subst);
}

bool convertSys(const Ctx& ctx, const std::vector<Branch>& a,
                const std::vector<Branch>& b, long& fuel) {
  if (a.size() != b.size()) return false;
  for (std::size_t k = 0; k < a.size(); ++k) {
    if (!faceEq(a[k].face, b[k].face)) return false;
    if (!convert(ctx, a[k].tm, b[k].tm, fuel)) return false;
  }
  return true;
}

bool convertWh(const Ctx& ctx, Term a, Term b, long& fuel) {
  a = refineEndpoint(ctx, neuWhnf(ctx, a, fuel), fuel);
  b = refineEndpoint(ctx, neuWhnf(ctx, b, fuel), fuel);
  spend(fuel, "convert");

  // eta: mediate a binder head against a neutral of the same type.
  if (a->tk == Tk::Lam || b->tk == Tk::Lam) {
    if (a->tk != Tk::Lam) std::swap(a, b);
    Name x = a->var;
    Ctx c2 = bindVar(ctx, x, a->sub[0]);
    Term other = b->tk == Tk::Lam ? termSubst(b->sub[1], b->var, mkVar(x))
                                  : mkApp(b, mkVar(x));
    return convertWh(c2, a->sub[1], other, fuel);
  }
  if (a->tk == Tk::PLam || b->tk == Tk::PLam) {
    if (a->tk != Tk::PLam) std::swap(a, b);
    Name i = a->dir;
    Ctx c2 = bindName(ctx, i);
    Term other = b->tk == Tk::PLam
                     ? substName(b->sub[0], b->dir, Interval::var(i))
                     : mkPApp(b, Interval::var(i));
    return convertWh(c2, a->sub[0], other, fuel);
  }
  if (a->tk == Tk::Pair || b->tk == Tk::Pair) {
    if (a->tk != Tk::Pair) std::swap(a, b);
    Term bf = b->tk == Tk::Pair ? b->sub[0] : mkFst(b);
    Term bs = b->tk == Tk::Pair ? b->sub[1] : mkSnd(b);
    return convertWh(ctx, a->sub[0], bf, fuel) &&
           convertWh(ctx, a->sub[1], bs, fuel);
  }

  if (a->tk != b->tk) return false;
  switch (a->tk) {
    case Tk::Var:
      return a->var == b->var;
    case Tk::Nat:
    case Tk::Zero:
    case Tk::Univ:
    case Tk::S1:
    case Tk::Base:
      return true;
    case Tk::Suc:
    case Tk::Fst:
    case Tk::Snd:
    case Tk::Trunc:
    case Tk::Inc:
      return convertWh(ctx, a->sub[0], b->sub[0], fuel);
    case Tk::Loop:
      return ivEq(a->iv, b->iv);
    case Tk::Pi:
    case Tk::Sigma: {
      if (!convertWh(ctx, a->sub[0], b->sub[0], fuel)) return false;
      Name x = a->var;
      Ctx c2 = bindVar(ctx, x, a->sub[0]);
      return convertWh(c2, a->sub[1],
                       termSubst(b->sub[1], b->var, mkVar(x)), fuel);
    }
    case Tk::Path: {
      Name i = a->dir;
      Ctx c2 = bindName(ctx, i);
      return convertWh(c2, a->sub[0],
                       substName(b->sub[0], b->dir, Interval::var(i)),
                       fuel) &&
             convertWh(ctx, a->sub[1], b->sub[1], fuel) &&
             convertWh(ctx, a->sub[2], b->sub[2], fuel);
    }
    case Tk::PApp:
      return ivEq(a->iv, b->iv) &&
             convertWh(ctx, a->sub[0], b->sub[0], fuel);
    case Tk::App:
      return convertWh(ctx, a->sub[0], b->sub[0], fuel) &&
             convertWh(ctx, a->sub[1], b->sub[1], fuel);
    case Tk::Natrec:
    case Tk::S1Elim:
    case Tk::TruncElim: {
      Name x = a->var;
      Ctx c2 = bindVar(ctx, x, a->tk == Tk::Natrec
                                   ? mkNat()
                                   : a->tk == Tk::S1Elim
                                         ? mkS1()
                                         : mkTrunc(mkUniv()));
      if (!convertWh(c2, a->sub[0], termSubst(b->sub[0], b->var, mkVar(x)),
                     fuel))
        return false;
      for (std::size_t k = 1; k < a->sub.size(); ++k)
        if (!convertWh(ctx, a->sub[k], b->sub[k], fuel)) return false;
      return true;
    }
    case Tk::SysT:
    case Tk::SysE:
      return convertSys(ctx, a->sys, b->sys, fuel);
    case Tk::Glue:
    case Tk::Unglue:
      return convertSys(ctx, a->sys, b->sys, fuel) &&
             convertWh(ctx, a->sub[0], b->sub[0], fuel);
    case Tk::GlueT: {
      if (a->gsys.size() != b->gsys.size()) return false;
      for (std::size_t k = 0; k < a->gsys.size(); ++k) {
        if (!faceEq(a->gsys[k].face, b->gsys[k].face)) return false;
        if (!convertWh(ctx, a->gsys[k].ty, b->gsys[k].ty, fuel))
          return false;
        if (!convertWh(ctx, a->gsys[k].eqv, b->gsys[k].eqv, fuel))
          return false;
      }
      return convertWh(ctx, a->sub[0], b->sub[0], fuel);
    }
    case Tk::Squash:
      return ivEq(a->iv, b->iv) &&
             convertWh(ctx, a->sub[0], b->sub[0], fuel) &&
             convertWh(ctx, a->sub[1], b->sub[1], fuel);
    case Tk::Comp:
    case Tk::Hcomp:
    case Tk::Fwd: {
      Name i = a->dir;
      Ctx c2 = bindName(ctx, i);
      auto ren = [&](const Term& t) {
        return substName(t, b->dir, Interval::var(i));
      };
      if (a->tk == Tk::Fwd && !ivEq(a->iv, b->iv)) return false;
      bool lineBound = a->tk != Tk::Hcomp;
      if (!convertWh(lineBound ? c2 : ctx, a->sub[0],
                     lineBound ? ren(b->sub[0]) : b->sub[0], fuel))
        return false;
      if (!convertWh(ctx, a->sub[1], b->sub[1], fuel)) return false;
      if (a->sys.size() != b->sys.size()) return false;
      for (std::size_t k = 0; k < a->sys.size(); ++k) {
        if (!faceEq(a->sys[k].face, b->sys[k].face)) return false;
        if (!convertWh(c2, a->sys[k].tm, ren(b->sys[k].tm), fuel))
          return false;
      }
      return true;
    }
    default:
      return false;
  }
}

void checkType(const Ctx& ctx, const Term& t, long& fuel) {
  check(ctx, t, mkUniv(), fuel);
}

void checkFaceScope(const Ctx& ctx, const Face& phi) {
  for (const auto& n : faceNames(phi))
    if (std::find(ctx.names.begin(), ctx.names.end(), n) ==
        ctx.names.end())
      fail("Mismatch", "face mentions a name outside the context: " +
                           show(n));
}

// comp/hcomp constraint branch: under each irreducible alpha <= phi the
// term must inhabit the line and agree with the base at i0.
void checkCompBranch(const Ctx& ctx, const Name& i, const Term& line,
                     const Face& phi, const Term& u, const Term& u0,
                     long& fuel) {
  checkFaceScope(ctx, phi);
  for (const auto& alpha : irreduciblesUnder(phi)) {
    Ctx ca = restrictCtx(ctx, alpha);
    Ctx cai = bindName(ca, i);
    check(cai, restrictTm(ctx, alpha, u),
          ctt::apply(line, faceContextSubst(alpha, ctx.names).subst), fuel);
    if (!convert(ca, atEnd(restrictTm(ctx, alpha, u), i, false),
                 restrictTm(ctx, alpha, u0), fuel))
      fail("RestrictionUnsatisfied",
           "constraint disagrees with the base at " + pretty(phi));
  }
}

Term truncElimPType(const Term& A, const Term& C, const Name& z) {
  Name u = fresh("u"), v = fresh("v"), x = fresh("x"), y = fresh("y");
  Name r = fresh("r");
  Term TA = mkTrunc(A);
  Term Cu = termSubst(C, z, mkVar(u));
  Term Cv = termSubst(C, z, mkVar(v));
  Term Csq = termSubst(C, z, mkSquash(mkVar(u), mkVar(v), Interval::var(r)));
  return mkPi(
      u, TA,
      mkPi(v, TA,
           mkPi(x, Cu,
                mkPi(y, Cv, mkPath(r, Csq, mkVar(x), mkVar(y))))));
}

}  // namespace

Term infer(const Ctx& ctx, const Term& t, long& fuel) {
  spend(fuel, "infer");
  switch (t->tk) {
    case Tk::Var: {
      for (auto it = ctx.vars.rbegin(); it != ctx.vars.rend(); ++it)
        if (it->first == t->var) return it->second;
      fail("UnboundVariable", show(t->var));
    }
    case Tk::Nat:
    case Tk::Univ:
    case Tk::S1:
      return mkUniv();
    case Tk::Zero:
      return mkNat();
    case Tk::Suc:
      check(ctx, t->sub[0], mkNat(), fuel);
      return mkNat();
    case Tk::Natrec: {
      Ctx cx = bindVar(ctx, t->var, mkNat());
      checkType(cx, t->sub[0], fuel);
      check(ctx, t->sub[1], mkNat(), fuel);
      check(ctx, t->sub[2], termSubst(t->sub[0], t->var, mkZero()), fuel);
      Name x = fresh("x");
      Term sTy = mkPi(
          x, mkNat(),
          mkArrow(termSubst(t->sub[0], t->var, mkVar(x)),
                  termSubst(t->sub[0], t->var, mkSuc(mkVar(x)))));
      check(ctx, t->sub[3], sTy, fuel);
      return termSubst(t->sub[0], t->var, t->sub[1]);
    }
    case Tk::Pi:
    case Tk::Sigma: {
      checkType(ctx, t->sub[0], fuel);
      checkType(bindVar(ctx, t->var, t->sub[0]), t->sub[1], fuel);
      return mkUniv();
    }
    case Tk::Lam: {
      checkType(ctx, t->sub[0], fuel);
      Term cod = infer(bindVar(ctx, t->var, t->sub[0]), t->sub[1], fuel);
      return mkPi(t->var, t->sub[0], cod);
    }
    case Tk::App: {
      Term fty = neuWhnf(ctx, infer(ctx, t->sub[0], fuel), fuel);
      if (fty->tk != Tk::Pi)
        fail("Mismatch", "application head has type " + pretty(fty));
      check(ctx, t->sub[1], fty->sub[0], fuel);
      return termSubst(fty->sub[1], fty->var, t->sub[1]);
    }
    case Tk::SysT:
    case Tk::SysE: {
      // over a name context a well-typed system has a true face;
      // synthesis follows the selected branch
      std::vector<Face> fs;
      for (const auto& b : t->sys) fs.push_back(b.face);
      if (auto k = minTrueIndex(fs)) return infer(ctx, t->sys[*k].tm, fuel);
      fail("CannotSynthesize", "system without a true face");
    }
    case Tk::Glue: {
      std::vector<Face> fs;
      for (const auto& b : t->sys) fs.push_back(b.face);
      if (auto k = minTrueIndex(fs)) return infer(ctx, t->sys[*k].tm, fuel);
      fail("CannotSynthesize", "glue needs a checked position");
    }
    case Tk::Pair: {
      // non-dependent synthesis; dependent pairs need a checked position
      Term a = infer(ctx, t->sub[0], fuel);
      Term b = infer(ctx, t->sub[1], fuel);
      return mkSigma(fresh("_"), a, b);
    }
    case Tk::Fst: {
      Term pty = neuWhnf(ctx, infer(ctx, t->sub[0], fuel), fuel);
      if (pty->tk != Tk::Sigma)
        fail("Mismatch", "projection from type " + pretty(pty));
      return pty->sub[0];
    }
    case Tk::Snd: {
      Term pty = neuWhnf(ctx, infer(ctx, t->sub[0], fuel), fuel);
      if (pty->tk != Tk::Sigma)
        fail("Mismatch", "projection from type " + pretty(pty));
      return termSubst(pty->sub[1], pty->var, mkFst(t->sub[0]));
    }
    case Tk::Path: {
      checkType(bindName(ctx, t->dir), t->sub[0], fuel);
      check(ctx, t->sub[1], atEnd(t->sub[0], t->dir, false), fuel);
      check(ctx, t->sub[2], atEnd(t->sub[0], t->dir, true), fuel);
      return mkUniv();
    }
    case Tk::PLam: {
      Term line = infer(bindName(ctx, t->dir), t->sub[0], fuel);
      return mkPath(t->dir, line, atEnd(t->sub[0], t->dir, false),
                    atEnd(t->sub[0], t->dir, true));
    }
    case Tk::PApp: {
      Term pty = neuWhnf(ctx, infer(ctx, t->sub[0], fuel), fuel);
      if (pty->tk != Tk::Path)
        fail("Mismatch", "path application head has type " + pretty(pty));
      return substName(pty->sub[0], pty->dir, t->iv);
    }
    case Tk::GlueT: {
      checkType(ctx, t->sub[0], fuel);
      for (const auto& g : t->gsys)
        for (const auto& alpha : irreduciblesUnder(g.face)) {
          Ctx ca = restrictCtx(ctx, alpha);
          Term Ta = restrictTm(ctx, alpha, g.ty);
          checkType(ca, Ta, fuel);
          check(ca, restrictTm(ctx, alpha, g.eqv),
                equivType(Ta, restrictTm(ctx, alpha, t->sub[0])), fuel);
        }
      return mkUniv();
    }
    case Tk::Unglue: {
      Term uty = neuWhnf(ctx, infer(ctx, t->sub[0], fuel), fuel);
      if (uty->tk != Tk::GlueT)
        fail("Mismatch", "unglue of a value of type " + pretty(uty));
      return uty->sub[0];
    }
    case Tk::Comp: {
      Ctx ci = bindName(ctx, t->dir);
      checkType(ci, t->sub[0], fuel);
      check(ctx, t->sub[1], atEnd(t->sub[0], t->dir, false), fuel);
      for (const auto& b : t->sys) {
        for (const auto& n : faceNames(b.face))
          if (n == t->dir)
            fail("Mismatch", "comp constraint face mentions the direction");
        checkCompBranch(ctx, t->dir, t->sub[0], b.face, b.tm, t->sub[1],
                        fuel);
      }
      return atEnd(t->sub[0], t->dir, true);
    }
    case Tk::Base:
      return mkS1();
    case Tk::Loop:
      return mkS1();
    case Tk::S1Elim: {
      Ctx cx = bindVar(ctx, t->var, mkS1());
      checkType(cx, t->sub[0], fuel);
      check(ctx, t->sub[1], mkS1(), fuel);
      Term Cb = termSubst(t->sub[0], t->var, mkBase());
      check(ctx, t->sub[2], Cb, fuel);
      Name j = fresh("j");
      Term Cl = termSubst(t->sub[0], t->var, mkLoop(Interval::var(j)));
      check(ctx, t->sub[3], mkPath(j, Cl, t->sub[2], t->sub[2]), fuel);
      return termSubst(t->sub[0], t->var, t->sub[1]);
    }
    case Tk::Trunc:
      checkType(ctx, t->sub[0], fuel);
      return mkUniv();
    case Tk::Inc: {
      Term A = infer(ctx, t->sub[0], fuel);
      return mkTrunc(A);
    }
    case Tk::Squash: {
      Term T = neuWhnf(ctx, infer(ctx, t->sub[0], fuel), fuel);
      if (T->tk != Tk::Trunc)
        fail("Mismatch", "squash of a value of type " + pretty(T));
      check(ctx, t->sub[1], T, fuel);
      return T;
    }
    case Tk::Hcomp: {
      checkType(ctx, t->sub[0], fuel);
      check(ctx, t->sub[1], t->sub[0], fuel);
      for (const auto& b : t->sys) {
        for (const auto& n : faceNames(b.face))
          if (n == t->dir)
            fail("Mismatch", "hcomp constraint face mentions the direction");
        checkCompBranch(ctx, t->dir, t->sub[0], b.face, b.tm, t->sub[1],
                        fuel);
      }
      return t->sub[0];
    }
    case Tk::Fwd: {
      Ctx ci = bindName(ctx, t->dir);
      checkType(ci, t->sub[0], fuel);
      check(ctx, t->sub[1],
            mkTrunc(substName(t->sub[0], t->dir, t->iv)), fuel);
      return mkTrunc(atEnd(t->sub[0], t->dir, true));
    }
    case Tk::TruncElim: {
      Term T = neuWhnf(ctx, infer(ctx, t->sub[1], fuel), fuel);
      if (T->tk != Tk::Trunc)
        fail("Mismatch", "truncation eliminator scrutinee has type " +
                             pretty(T));
      Term A = T->sub[0];
      Ctx cz = bindVar(ctx, t->var, T);
      checkType(cz, t->sub[0], fuel);
      Name a = fresh("a");
      check(ctx, t->sub[2],
            mkPi(a, A, termSubst(t->sub[0], t->var, mkInc(mkVar(a)))),
            fuel);
      check(ctx, t->sub[3], truncElimPType(A, t->sub[0], t->var), fuel);
      return termSubst(t->sub[0], t->var, t->sub[1]);
    }
    default:
      fail("CannotSynthesize", pretty(t));
  }
}

void check(const Ctx& ctx, const Term& t, const Term& type, long& fuel) {
  spend(fuel, "check");
  Term ty = neuWhnf(ctx, type, fuel);
  switch (t->tk) {
    case Tk::Lam: {
      if (ty->tk != Tk::Pi)
        fail("Mismatch", "lambda against " + pretty(ty));
      if (!convert(ctx, t->sub[0], ty->sub[0], fuel))
        fail("Mismatch", "lambda domain " + pretty(t->sub[0]) + " vs " +
                             pretty(ty->sub[0]));
      Ctx cx = bindVar(ctx, t->var, ty->sub[0]);
      check(cx, t->sub[1],
            termSubst(ty->sub[1], ty->var, mkVar(t->var)), fuel);
      return;
    }
    case Tk::Pair: {
      if (ty->tk != Tk::Sigma)
        fail("Mismatch", "pair against " + pretty(ty));
      check(ctx, t->sub[0], ty->sub[0], fuel);
      check(ctx, t->sub[1], termSubst(ty->sub[1], ty->var, t->sub[0]),
            fuel);
      return;
    }
    case Tk::PLam: {
      if (ty->tk != Tk::Path)
        fail("Mismatch", "path abstraction against " + pretty(ty));
      Ctx ci = bindName(ctx, t->dir);
      check(ci, t->sub[0],
            substName(ty->sub[0], ty->dir, Interval::var(t->dir)), fuel);
      if (!convert(ctx, atEnd(t->sub[0], t->dir, false), ty->sub[1], fuel))
        fail("Mismatch", "left endpoint of " + pretty(t));
      if (!convert(ctx, atEnd(t->sub[0], t->dir, true), ty->sub[2], fuel))
        fail("Mismatch", "right endpoint of " + pretty(t));
      return;
    }
    case Tk::Glue: {
      if (ty->tk != Tk::GlueT) {
        // a true-faced glue reduces away; synthesize through selection
        Term got = infer(ctx, t, fuel);
        if (!convert(ctx, got, ty, fuel))
          fail("Mismatch",
               "expected " + pretty(ty) + ", synthesized " + pretty(got));
        return;
      }
      check(ctx, t->sub[0], ty->sub[0], fuel);
      if (t->sys.size() != ty->gsys.size())
        fail("Mismatch", "glue branch count");
      for (std::size_t k = 0; k < t->sys.size(); ++k) {
        if (!faceEq(t->sys[k].face, ty->gsys[k].face))
          fail("Mismatch", "glue branch face");
        for (const auto& alpha : irreduciblesUnder(t->sys[k].face)) {
          Ctx ca = restrictCtx(ctx, alpha);
          Term ta = restrictTm(ctx, alpha, t->sys[k].tm);
          check(ca, ta, restrictTm(ctx, alpha, ty->gsys[k].ty), fuel);
          Term lhs = mkApp(mkFst(restrictTm(ctx, alpha, ty->gsys[k].eqv)),
                           ta);
          if (!convert(ca, lhs, restrictTm(ctx, alpha, t->sub[0]), fuel))
            fail("RestrictionUnsatisfied",
                 "glued value disagrees with the base under " +
                     pretty(Face::fromConjs({alpha})));
        }
      }
      return;
    }
    case Tk::Inc: {
      if (ty->tk != Tk::Trunc)
        fail("Mismatch", "inc against " + pretty(ty));
      check(ctx, t->sub[0], ty->sub[0], fuel);
      return;
    }
    case Tk::Squash: {
      if (ty->tk != Tk::Trunc)
        fail("Mismatch", "squash against " + pretty(ty));
      check(ctx, t->sub[0], ty, fuel);
      check(ctx, t->sub[1], ty, fuel);
      return;
    }
    default: {
      Term got = infer(ctx, t, fuel);
      if (!convert(ctx, got, ty, fuel))
        fail("Mismatch",
             "expected " + pretty(ty) + ", synthesized " + pretty(got));
    }
  }
}

bool convert(const Ctx& ctx, const Term& a, const Term& b, long& fuel) {
  try {
    return convertWh(ctx, a, b, fuel);
  } catch (const StuckError&) {
    return false;
  } catch (const FuelExhausted&) {
    return false;
  }
}

void checkRestriction(const Ctx& ctx, const Face& phi, const Term& t,
                      const Term& u, long& fuel) {
  for (const auto& alpha : irreduciblesUnder(phi)) {
    Ctx ca = restrictCtx(ctx, alpha);
    if (!convert(ca, restrictTm(ctx, alpha, t), restrictTm(ctx, alpha, u),
                 fuel))
      fail("RestrictionUnsatisfied",
           "under " + pretty(Face::fromConjs({alpha})) + ": " + pretty(t) +
               " vs " + pretty(u));
  }
}

}  // namespace ctt

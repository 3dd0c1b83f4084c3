#include "ctt/syntax.hpp"

#include <utility>

namespace ctt {

namespace {

Term node(TermNode n) { return std::make_shared<const TermNode>(std::move(n)); }

}  // namespace

Term mkVar(const Name& x) { return node({.tk = Tk::Var, .var = x}); }
Term mkNat() { return node({.tk = Tk::Nat}); }
Term mkZero() { return node({.tk = Tk::Zero}); }
Term mkSuc(Term t) { return node({.tk = Tk::Suc, .sub = {std::move(t)}}); }

Term mkNatrec(const Name& x, Term motive, Term scrut, Term z, Term s) {
  return node({.tk = Tk::Natrec,
               .var = x,
               .sub = {std::move(motive), std::move(scrut), std::move(z),
                       std::move(s)}});
}

Term mkPi(const Name& x, Term dom, Term cod) {
  return node({.tk = Tk::Pi, .var = x, .sub = {std::move(dom), std::move(cod)}});
}

Term mkLam(const Name& x, Term dom, Term body) {
  return node(
      {.tk = Tk::Lam, .var = x, .sub = {std::move(dom), std::move(body)}});
}

Term mkApp(Term f, Term a) {
  return node({.tk = Tk::App, .sub = {std::move(f), std::move(a)}});
}

Term mkArrow(Term dom, Term cod) {
  return mkPi(Name{"_"}, std::move(dom), std::move(cod));
}

Term mkSigma(const Name& x, Term dom, Term cod) {
  return node(
      {.tk = Tk::Sigma, .var = x, .sub = {std::move(dom), std::move(cod)}});
}

Term mkPair(Term u, Term v) {
  return node({.tk = Tk::Pair, .sub = {std::move(u), std::move(v)}});
}

Term mkFst(Term t) { return node({.tk = Tk::Fst, .sub = {std::move(t)}}); }
Term mkSnd(Term t) { return node({.tk = Tk::Snd, .sub = {std::move(t)}}); }

Term mkPath(const Name& i, Term line, Term a0, Term a1) {
  return node({.tk = Tk::Path,
               .dir = i,
               .sub = {std::move(line), std::move(a0), std::move(a1)}});
}

Term mkPathND(Term ty, Term a0, Term a1) {
  return mkPath(Name{"_"}, std::move(ty), std::move(a0), std::move(a1));
}

Term mkPLam(const Name& i, Term body) {
  return node({.tk = Tk::PLam, .dir = i, .sub = {std::move(body)}});
}

Term mkPApp(Term t, const Interval& r) {
  return node({.tk = Tk::PApp, .iv = r, .sub = {std::move(t)}});
}

Term mkSysT(std::vector<Branch> sys) {
  return node({.tk = Tk::SysT, .sys = std::move(sys)});
}

Term mkSysE(std::vector<Branch> sys) {
  return node({.tk = Tk::SysE, .sys = std::move(sys)});
}

Term mkGlueT(std::vector<GlueBranch> gsys, Term a) {
  return node(
      {.tk = Tk::GlueT, .sub = {std::move(a)}, .gsys = std::move(gsys)});
}

Term mkGlue(std::vector<Branch> sys, Term a) {
  return node({.tk = Tk::Glue, .sub = {std::move(a)}, .sys = std::move(sys)});
}

Term mkUnglue(std::vector<Branch> sys, Term u) {
  return node({.tk = Tk::Unglue, .sub = {std::move(u)}, .sys = std::move(sys)});
}

Term mkUniv() { return node({.tk = Tk::Univ}); }

Term mkComp(const Name& i, Term line, std::vector<Branch> sys, Term u0) {
  return node({.tk = Tk::Comp,
               .dir = i,
               .sub = {std::move(line), std::move(u0)},
               .sys = std::move(sys)});
}

Term mkS1() { return node({.tk = Tk::S1}); }
Term mkBase() { return node({.tk = Tk::Base}); }
Term mkLoop(const Interval& r) { return node({.tk = Tk::Loop, .iv = r}); }

Term mkS1Elim(const Name& x, Term motive, Term scrut, Term b, Term l) {
  return node({.tk = Tk::S1Elim,
               .var = x,
               .sub = {std::move(motive), std::move(scrut), std::move(b),
                       std::move(l)}});
}

Term mkTrunc(Term a) { return node({.tk = Tk::Trunc, .sub = {std::move(a)}}); }
Term mkInc(Term a) { return node({.tk = Tk::Inc, .sub = {std::move(a)}}); }

Term mkSquash(Term u, Term v, const Interval& r) {
  return node({.tk = Tk::Squash, .iv = r, .sub = {std::move(u), std::move(v)}});
}

Term mkHcomp(Term ty, const Name& i, std::vector<Branch> sys, Term u0) {
  return node({.tk = Tk::Hcomp,
               .dir = i,
               .sub = {std::move(ty), std::move(u0)},
               .sys = std::move(sys)});
}

Term mkFwd(const Name& i, Term line, const Interval& r, Term u) {
  return node({.tk = Tk::Fwd,
               .dir = i,
               .iv = r,
               .sub = {std::move(line), std::move(u)}});
}

Term mkTruncElim(const Name& z, Term motive, Term scrut, Term t, Term p) {
  return node({.tk = Tk::TruncElim,
               .var = z,
               .sub = {std::move(motive), std::move(scrut), std::move(t),
                       std::move(p)}});
}

Term mkNumeral(unsigned long long n) {
  Term t = mkZero();
  for (unsigned long long k = 0; k < n; ++k) t = mkSuc(std::move(t));
  return t;
}

// ---------------------------------------------------------------------------
// Alpha-equivalence.

namespace {

// A name resolves to its binding level if bound, or to itself if free.
using Key = std::pair<long, Name>;
using Levels = std::map<Name, long>;

Key resolve(const Name& n, const Levels& lv) {
  auto it = lv.find(n);
  if (it != lv.end()) return {it->second, Name{}};
  return {-1, n};
}

std::set<std::set<std::pair<Key, bool>>> resolveIv(const Interval& iv,
                                                   const Levels& lv) {
  std::set<std::set<std::pair<Key, bool>>> out;
  for (const auto& m : iv.meets()) {
    std::set<std::pair<Key, bool>> rm;
    for (const auto& l : m) rm.insert({resolve(l.name, lv), l.neg});
    out.insert(std::move(rm));
  }
  return out;
}

std::set<std::map<Key, bool>> resolveFace(const Face& f, const Levels& lv) {
  std::set<std::map<Key, bool>> out;
  for (const auto& c : f.conjs()) {
    std::map<Key, bool> rc;
    for (const auto& [n, e] : c) rc[resolve(n, lv)] = e;
    out.insert(std::move(rc));
  }
  return out;
}

struct AlphaCmp {
  bool eq(const Term& a, const Term& b, Levels la, Levels lb, long lvl) const {
    if (a->tk != b->tk) return false;
    if (a->sub.size() != b->sub.size() || a->sys.size() != b->sys.size() ||
        a->gsys.size() != b->gsys.size())
      return false;

    auto bindVar = [&](Levels& l, const Name& n) { l[n] = lvl; };

    switch (a->tk) {
      case Tk::Var:
        return resolve(a->var, la) == resolve(b->var, lb);
      case Tk::Nat:
      case Tk::Zero:
      case Tk::Univ:
      case Tk::S1:
      case Tk::Base:
        return true;
      case Tk::Loop:
        return resolveIv(a->iv, la) == resolveIv(b->iv, lb);
      case Tk::Suc:
      case Tk::Fst:
      case Tk::Snd:
      case Tk::App:
      case Tk::Pair:
      case Tk::Trunc:
      case Tk::Inc: {
        for (std::size_t k = 0; k < a->sub.size(); ++k)
          if (!eq(a->sub[k], b->sub[k], la, lb, lvl)) return false;
        return true;
      }
      case Tk::PApp:
      case Tk::Squash: {
        if (resolveIv(a->iv, la) != resolveIv(b->iv, lb)) return false;
        for (std::size_t k = 0; k < a->sub.size(); ++k)
          if (!eq(a->sub[k], b->sub[k], la, lb, lvl)) return false;
        return true;
      }
      case Tk::Natrec:
      case Tk::S1Elim:
      case Tk::TruncElim: {
        Levels la2 = la, lb2 = lb;
        bindVar(la2, a->var);
        bindVar(lb2, b->var);
        if (!eq(a->sub[0], b->sub[0], la2, lb2, lvl + 1)) return false;
        for (std::size_t k = 1; k < a->sub.size(); ++k)
          if (!eq(a->sub[k], b->sub[k], la, lb, lvl)) return false;
        return true;
      }
      case Tk::Pi:
      case Tk::Sigma:
      case Tk::Lam: {
        if (!eq(a->sub[0], b->sub[0], la, lb, lvl)) return false;
        Levels la2 = la, lb2 = lb;
        bindVar(la2, a->var);
        bindVar(lb2, b->var);
        return eq(a->sub[1], b->sub[1], la2, lb2, lvl + 1);
      }
      case Tk::Path: {
        Levels la2 = la, lb2 = lb;
        bindVar(la2, a->dir);
        bindVar(lb2, b->dir);
        return eq(a->sub[0], b->sub[0], la2, lb2, lvl + 1) &&
               eq(a->sub[1], b->sub[1], la, lb, lvl) &&
               eq(a->sub[2], b->sub[2], la, lb, lvl);
      }
      case Tk::PLam: {
        Levels la2 = la, lb2 = lb;
        bindVar(la2, a->dir);
        bindVar(lb2, b->dir);
        return eq(a->sub[0], b->sub[0], la2, lb2, lvl + 1);
      }
      case Tk::SysT:
      case Tk::SysE:
      case Tk::Glue:
      case Tk::Unglue: {
        for (std::size_t k = 0; k < a->sys.size(); ++k) {
          if (resolveFace(a->sys[k].face, la) !=
              resolveFace(b->sys[k].face, lb))
            return false;
          if (!eq(a->sys[k].tm, b->sys[k].tm, la, lb, lvl)) return false;
        }
        for (std::size_t k = 0; k < a->sub.size(); ++k)
          if (!eq(a->sub[k], b->sub[k], la, lb, lvl)) return false;
        return true;
      }
      case Tk::GlueT: {
        for (std::size_t k = 0; k < a->gsys.size(); ++k) {
          if (resolveFace(a->gsys[k].face, la) !=
              resolveFace(b->gsys[k].face, lb))
            return false;
          if (!eq(a->gsys[k].ty, b->gsys[k].ty, la, lb, lvl)) return false;
          if (!eq(a->gsys[k].eqv, b->gsys[k].eqv, la, lb, lvl)) return false;
        }
        return eq(a->sub[0], b->sub[0], la, lb, lvl);
      }
      case Tk::Comp: {
        Levels la2 = la, lb2 = lb;
        bindVar(la2, a->dir);
        bindVar(lb2, b->dir);
        if (!eq(a->sub[0], b->sub[0], la2, lb2, lvl + 1)) return false;
        for (std::size_t k = 0; k < a->sys.size(); ++k) {
          if (resolveFace(a->sys[k].face, la) !=
              resolveFace(b->sys[k].face, lb))
            return false;
          if (!eq(a->sys[k].tm, b->sys[k].tm, la2, lb2, lvl + 1)) return false;
        }
        return eq(a->sub[1], b->sub[1], la, lb, lvl);
      }
      case Tk::Hcomp: {
        if (!eq(a->sub[0], b->sub[0], la, lb, lvl)) return false;
        Levels la2 = la, lb2 = lb;
        bindVar(la2, a->dir);
        bindVar(lb2, b->dir);
        for (std::size_t k = 0; k < a->sys.size(); ++k) {
          if (resolveFace(a->sys[k].face, la) !=
              resolveFace(b->sys[k].face, lb))
            return false;
          if (!eq(a->sys[k].tm, b->sys[k].tm, la2, lb2, lvl + 1)) return false;
        }
        return eq(a->sub[1], b->sub[1], la, lb, lvl);
      }
      case Tk::Fwd: {
        if (resolveIv(a->iv, la) != resolveIv(b->iv, lb)) return false;
        Levels la2 = la, lb2 = lb;
        bindVar(la2, a->dir);
        bindVar(lb2, b->dir);
        return eq(a->sub[0], b->sub[0], la2, lb2, lvl + 1) &&
               eq(a->sub[1], b->sub[1], la, lb, lvl);
      }
    }
    return false;
  }
};

}  // namespace

bool alphaEq(const Term& a, const Term& b) {
  return AlphaCmp{}.eq(a, b, {}, {}, 0);
}

// ---------------------------------------------------------------------------
// Free names / variables.

namespace {

void collectIv(const Interval& iv, const std::set<Name>& bound,
               std::set<Name>& out) {
  for (const auto& n : ivNames(iv))
    if (!bound.count(n)) out.insert(n);
}

void collectFace(const Face& f, const std::set<Name>& bound,
                 std::set<Name>& out) {
  for (const auto& n : faceNames(f))
    if (!bound.count(n)) out.insert(n);
}

void goNames(const Term& t, std::set<Name> bound, std::set<Name>& out);

void goNamesSys(const std::vector<Branch>& sys, const std::set<Name>& faceBound,
                const std::set<Name>& tmBound, std::set<Name>& out) {
  for (const auto& b : sys) {
    collectFace(b.face, faceBound, out);
    goNames(b.tm, tmBound, out);
  }
}

void goNames(const Term& t, std::set<Name> bound, std::set<Name>& out) {
  switch (t->tk) {
    case Tk::Loop:
      collectIv(t->iv, bound, out);
      return;
    case Tk::PApp:
    case Tk::Squash:
      collectIv(t->iv, bound, out);
      for (const auto& s : t->sub) goNames(s, bound, out);
      return;
    case Tk::Path:
    case Tk::PLam: {
      auto inner = bound;
      inner.insert(t->dir);
      goNames(t->sub[0], inner, out);
      for (std::size_t k = 1; k < t->sub.size(); ++k)
        goNames(t->sub[k], bound, out);
      return;
    }
    case Tk::SysT:
    case Tk::SysE:
    case Tk::Glue:
    case Tk::Unglue:
      goNamesSys(t->sys, bound, bound, out);
      for (const auto& s : t->sub) goNames(s, bound, out);
      return;
    case Tk::GlueT:
      for (const auto& g : t->gsys) {
        collectFace(g.face, bound, out);
        goNames(g.ty, bound, out);
        goNames(g.eqv, bound, out);
      }
      goNames(t->sub[0], bound, out);
      return;
    case Tk::Comp: {
      auto inner = bound;
      inner.insert(t->dir);
      goNames(t->sub[0], inner, out);
      goNamesSys(t->sys, bound, inner, out);
      goNames(t->sub[1], bound, out);
      return;
    }
    case Tk::Hcomp: {
      auto inner = bound;
      inner.insert(t->dir);
      goNames(t->sub[0], bound, out);
      goNamesSys(t->sys, bound, inner, out);
      goNames(t->sub[1], bound, out);
      return;
    }
    case Tk::Fwd: {
      collectIv(t->iv, bound, out);
      auto inner = bound;
      inner.insert(t->dir);
      goNames(t->sub[0], inner, out);
      goNames(t->sub[1], bound, out);
      return;
    }
    default:
      for (const auto& s : t->sub) goNames(s, bound, out);
      return;
  }
}

void goVars(const Term& t, std::set<Name> bound, std::set<Name>& out) {
  switch (t->tk) {
    case Tk::Var:
      if (!bound.count(t->var)) out.insert(t->var);
      return;
    case Tk::Natrec:
    case Tk::S1Elim:
    case Tk::TruncElim: {
      auto inner = bound;
      inner.insert(t->var);
      goVars(t->sub[0], inner, out);
      for (std::size_t k = 1; k < t->sub.size(); ++k)
        goVars(t->sub[k], bound, out);
      return;
    }
    case Tk::Pi:
    case Tk::Sigma:
    case Tk::Lam: {
      goVars(t->sub[0], bound, out);
      auto inner = bound;
      inner.insert(t->var);
      goVars(t->sub[1], inner, out);
      return;
    }
    default:
      for (const auto& s : t->sub) goVars(s, bound, out);
      for (const auto& b : t->sys) goVars(b.tm, bound, out);
      for (const auto& g : t->gsys) {
        goVars(g.ty, bound, out);
        goVars(g.eqv, bound, out);
      }
      return;
  }
}

}  // namespace

std::set<Name> freeNames(const Term& t) {
  std::set<Name> out;
  goNames(t, {}, out);
  return out;
}

std::set<Name> freeVars(const Term& t) {
  std::set<Name> out;
  goVars(t, {}, out);
  return out;
}

}  // namespace ctt

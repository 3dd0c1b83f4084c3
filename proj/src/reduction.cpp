#include "ctt/reduction.hpp"

#include "ctt/derived.hpp"
#include "ctt/errors.hpp"

namespace ctt {

namespace {

Interval iv(const Name& n) { return Interval::var(n); }

std::vector<Face> facesOf(const std::vector<Branch>& sys) {
  std::vector<Face> out;
  out.reserve(sys.size());
  for (const auto& b : sys) out.push_back(b.face);
  return out;
}

Face joinOf(const std::vector<Face>& fs) {
  Face out = Face::zero();
  for (const auto& f : fs) out = faceJoin(out, f);
  return out;
}

StepResult stepped(Term t, Rule r, std::string path = "") {
  return {StepResult::K::Stepped, std::move(t), r, std::move(path), ""};
}

StepResult whnfRes() { return {StepResult::K::Whnf, {}, Rule::None, "", ""}; }

StepResult stuck(std::string why) {
  return {StepResult::K::Stuck, {}, Rule::None, "", std::move(why)};
}

// Steps `inner`; on Stepped rebuilds via `wrap` and prefixes the redex
// path with `seg`. Whnf inside means no congruence applies: Stuck.
template <class Wrap>
StepResult congr(const NameCtx& I, const Term& inner, const char* seg,
                 Wrap wrap, const char* stuckMsg) {
  StepResult r = whnfStep(I, inner);
  switch (r.k) {
    case StepResult::K::Stepped: {
      std::string p = seg;
      if (!r.path.empty()) p += "." + r.path;
      return stepped(wrap(r.t), r.rule, std::move(p));
    }
    case StepResult::K::Whnf:
      return stuck(stuckMsg);
    case StepResult::K::Stuck:
      return r;
  }
  return stuck(stuckMsg);
}

StepResult stepComp(const NameCtx& I, const Term& t) {
  const Name& i = t->dir;
  NameCtx Ii = I;
  Ii.push_back(i);
  const Term& line = t->sub[0];
  const Term& u0 = t->sub[1];
  const auto& sys = t->sys;

  if (!isIntroduced(Ii, line)) {
    StepResult r = whnfStep(Ii, line);
    if (r.k != StepResult::K::Stepped)
      return r.k == StepResult::K::Stuck ? r : stuck("comp type line stuck");
    std::string p = "comp-line";
    if (!r.path.empty()) p += "." + r.path;
    return stepped(mkComp(i, r.t, sys, u0), Rule::CompTypeCong, std::move(p));
  }

  switch (line->tk) {
    case Tk::Nat: {
      if (u0->tk == Tk::Zero) return stepped(mkZero(), Rule::CompNZero);
      if (u0->tk == Tk::Suc) {
        std::vector<Branch> psys;
        psys.reserve(sys.size());
        for (const auto& b : sys)
          psys.push_back({b.face, mkApp(predTerm(), b.tm)});
        return stepped(
            mkSuc(mkComp(i, line, std::move(psys), u0->sub[0])),
            Rule::CompNSuc);
      }
      return congr(
          I, u0, "comp-base",
          [&](const Term& v) { return mkComp(i, line, sys, v); },
          "comp N base is not a numeral head");
    }
    case Tk::Pi: {
      const Name& x = line->var;
      const Term& dom = line->sub[0];
      const Term& cod = line->sub[1];
      Name y = fresh("y");
      Term revDom = substName(dom, i, ivRev(iv(i)));
      Term yline = fill(i, revDom, {}, mkVar(y));
      Term ybar = substName(yline, i, ivRev(iv(i)));
      std::vector<Branch> br;
      br.reserve(sys.size());
      for (const auto& b : sys) br.push_back({b.face, mkApp(b.tm, ybar)});
      return stepped(
          mkLam(y, atEnd(dom, i, true),
                mkComp(i, termSubst(cod, x, ybar), std::move(br),
                       mkApp(u0, atEnd(ybar, i, false)))),
          Rule::CompPi);
    }
    case Tk::Sigma: {
      const Name& x = line->var;
      std::vector<Branch> br1, br2;
      for (const auto& b : sys) br1.push_back({b.face, mkFst(b.tm)});
      for (const auto& b : sys) br2.push_back({b.face, mkSnd(b.tm)});
      Term v = fill(i, line->sub[0], br1, mkFst(u0));
      return stepped(
          mkPair(atEnd(v, i, true),
                 mkComp(i, termSubst(line->sub[1], x, v), std::move(br2),
                        mkSnd(u0))),
          Rule::CompSigma);
    }
    case Tk::Path: {
      Name j = fresh("j");
      Term inner = substName(line->sub[0], line->dir, iv(j));
      std::vector<Branch> br;
      br.push_back({Face::atom(j, false), line->sub[1]});
      br.push_back({Face::atom(j, true), line->sub[2]});
      for (const auto& b : sys) br.push_back({b.face, mkPApp(b.tm, iv(j))});
      return stepped(
          mkPLam(j, mkComp(i, inner, std::move(br), mkPApp(u0, iv(j)))),
          Rule::CompPath);
    }
    case Tk::GlueT: {
      auto [t1, a1] = glueCompParts(i, line, sys, u0);
      std::vector<Branch> gbr;
      for (const auto& g : line->gsys) {
        Face f1 = faceSubst(g.face, {{i, Interval::one()}});
        if (!faceIsZero(f1)) gbr.push_back({f1, t1});
      }
      return stepped(mkGlue(std::move(gbr), a1), Rule::CompGlue);
    }
    case Tk::Univ: {
      std::vector<GlueBranch> gs;
      for (const auto& b : sys) {
        if (faceIsZero(b.face)) continue;
        gs.push_back({b.face, atEnd(b.tm, i, true),
                      ptoeq(i, substName(b.tm, i, ivRev(iv(i))))});
      }
      return stepped(mkGlueT(std::move(gs), u0), Rule::CompUniv);
    }
    case Tk::S1: {
      if (auto k = minTrueIndex(facesOf(sys)))
        return stepped(atEnd(sys[*k].tm, i, true), Rule::CompS1Select);
      return whnfRes();
    }
    case Tk::Trunc: {
      const Term& inner = line->sub[0];
      Name jf = fresh("j");
      std::vector<Branch> br;
      br.reserve(sys.size());
      for (const auto& b : sys)
        br.push_back(
            {b.face, mkFwd(jf, substName(inner, i, iv(jf)), iv(i), b.tm)});
      return stepped(mkHcomp(mkTrunc(atEnd(inner, i, true)), i,
                             std::move(br),
                             mkFwd(i, inner, Interval::zero(), u0)),
                     Rule::CompTrunc);
    }
    default:
      return stuck("comp over a non-type head");
  }
}

}  // namespace

bool isIntroduced(const NameCtx& I, const Term& t) {
  (void)I;
  switch (t->tk) {
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
      return true;
    case Tk::Loop:
    case Tk::Squash:
      return ivIsEnd(t->iv) == End::Neither;
    case Tk::GlueT: {
      Face j = Face::zero();
      for (const auto& g : t->gsys) j = faceJoin(j, g.face);
      return !faceIsOne(j);
    }
    case Tk::Glue:
      return !faceIsOne(joinOf(facesOf(t->sys)));
    case Tk::SysT:
    case Tk::SysE: {
      auto fs = facesOf(t->sys);
      if (!faceIsOne(joinOf(fs))) return false;
      for (const auto& f : fs)
        if (faceIsOne(f)) return false;
      return true;
    }
    case Tk::Hcomp:
      return !minTrueIndex(facesOf(t->sys)).has_value();
    case Tk::Comp:
      return t->sub[0]->tk == Tk::S1 &&
             !minTrueIndex(facesOf(t->sys)).has_value();
    default:
      return false;
  }
}

StepResult whnfStep(const NameCtx& I, const Term& t) {
  switch (t->tk) {
    case Tk::Var:
      return stuck("open variable " + show(t->var));
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
      return whnfRes();
    case Tk::Loop: {
      End e = ivIsEnd(t->iv);
      if (e == End::Neither) return whnfRes();
      return stepped(mkBase(), Rule::LoopEnd);
    }
    case Tk::Squash: {
      End e = ivIsEnd(t->iv);
      if (e == End::Is0) return stepped(t->sub[0], Rule::SquashEnd);
      if (e == End::Is1) return stepped(t->sub[1], Rule::SquashEnd);
      return whnfRes();
    }
    case Tk::SysT:
    case Tk::SysE: {
      if (auto k = minTrueIndex(facesOf(t->sys)))
        return stepped(t->sys[*k].tm, Rule::SysSelect);
      return isIntroduced(I, t) ? whnfRes()
                                : stuck("system without a true face");
    }
    case Tk::GlueT: {
      std::vector<Face> fs;
      for (const auto& g : t->gsys) fs.push_back(g.face);
      if (auto k = minTrueIndex(fs))
        return stepped(t->gsys[*k].ty, Rule::GlueTSelect);
      if (faceIsOne(joinOf(fs)))
        return stuck("total Glue face without a true branch");
      return whnfRes();
    }
    case Tk::Glue: {
      if (auto k = minTrueIndex(facesOf(t->sys)))
        return stepped(t->sys[*k].tm, Rule::GlueSelect);
      if (faceIsOne(joinOf(facesOf(t->sys))))
        return stuck("total glue face without a true branch");
      return whnfRes();
    }
    case Tk::Unglue: {
      if (auto k = minTrueIndex(facesOf(t->sys)))
        return stepped(mkApp(mkFst(t->sys[*k].tm), t->sub[0]),
                       Rule::UnglueSelect);
      const Term& u = t->sub[0];
      if (u->tk == Tk::Glue && isIntroduced(I, u))
        return stepped(u->sub[0], Rule::UnglueBeta);
      StepResult r = congr(
          I, u, "unglue-arg",
          [&](const Term& v) { return mkUnglue(t->sys, v); },
          "unglue of a non-glue value");
      // guarded by the no-true-branch premise above: never subst-stable
      if (r.k == StepResult::K::Stepped) r.rule = Rule::UnglueCong;
      return r;
    }
    case Tk::App: {
      const Term& f = t->sub[0];
      if (f->tk == Tk::Lam)
        return stepped(termSubst(f->sub[1], f->var, t->sub[1]),
                       Rule::AppBeta);
      return congr(
          I, f, "app-head",
          [&](const Term& v) { return mkApp(v, t->sub[1]); },
          "application head is not a lambda");
    }
    case Tk::Fst: {
      const Term& p = t->sub[0];
      if (p->tk == Tk::Pair) return stepped(p->sub[0], Rule::FstPair);
      return congr(
          I, p, "fst-arg", [](const Term& v) { return mkFst(v); },
          "fst of a non-pair value");
    }
    case Tk::Snd: {
      const Term& p = t->sub[0];
      if (p->tk == Tk::Pair) return stepped(p->sub[1], Rule::SndPair);
      return congr(
          I, p, "snd-arg", [](const Term& v) { return mkSnd(v); },
          "snd of a non-pair value");
    }
    case Tk::PApp: {
      const Term& p = t->sub[0];
      if (p->tk == Tk::PLam)
        return stepped(substName(p->sub[0], p->dir, t->iv), Rule::PathBeta);
      return congr(
          I, p, "papp-head",
          [&](const Term& v) { return mkPApp(v, t->iv); },
          "path application head is not a path abstraction");
    }
    case Tk::Natrec: {
      const Term& n = t->sub[1];
      if (n->tk == Tk::Zero) return stepped(t->sub[2], Rule::NatrecZero);
      if (n->tk == Tk::Suc) {
        Term rec =
            mkNatrec(t->var, t->sub[0], n->sub[0], t->sub[2], t->sub[3]);
        return stepped(mkApp(mkApp(t->sub[3], n->sub[0]), rec),
                       Rule::NatrecSuc);
      }
      return congr(
          I, n, "natrec-scrut",
          [&](const Term& v) {
            return mkNatrec(t->var, t->sub[0], v, t->sub[2], t->sub[3]);
          },
          "natrec scrutinee is not a numeral head");
    }
    case Tk::Comp:
      return stepComp(I, t);
    case Tk::Hcomp: {
      if (auto k = minTrueIndex(facesOf(t->sys)))
        return stepped(atEnd(t->sys[*k].tm, t->dir, true), Rule::HcompTotal);
      return whnfRes();
    }
    case Tk::Fwd: {
      if (ivIsEnd(t->iv) == End::Is1)
        return stepped(t->sub[1], Rule::FwdEnd);
      const Name& i = t->dir;
      const Term& line = t->sub[0];
      const Interval& r = t->iv;
      const Term& u = t->sub[1];
      if (u->tk == Tk::Inc) {
        Term shifted = substName(line, i, ivJoin(iv(i), r));
        std::vector<Branch> br;
        Face r1 = faceOfEq1(r);
        if (!faceIsZero(r1)) br.push_back({r1, u->sub[0]});
        return stepped(mkInc(mkComp(i, shifted, std::move(br), u->sub[0])),
                       Rule::FwdInc);
      }
      if (u->tk == Tk::Squash && isIntroduced(I, u))
        return stepped(mkSquash(mkFwd(i, line, r, u->sub[0]),
                                mkFwd(i, line, r, u->sub[1]), u->iv),
                       Rule::FwdSquash);
      if (u->tk == Tk::Hcomp && isIntroduced(I, u)) {
        Name j = fresh("j");
        std::vector<Branch> br;
        for (const auto& b : u->sys)
          br.push_back(
              {b.face, mkFwd(i, line, r, substName(b.tm, u->dir, iv(j)))});
        return stepped(mkHcomp(mkTrunc(atEnd(line, i, true)), j,
                               std::move(br), mkFwd(i, line, r, u->sub[1])),
                       Rule::FwdHcomp);
      }
      StepResult res = congr(
          I, u, "fwd-arg",
          [&](const Term& v) { return mkFwd(i, line, r, v); },
          "fwd of a non-truncation value");
      // guarded by r != 1: never subst-stable
      if (res.k == StepResult::K::Stepped) res.rule = Rule::FwdCong;
      return res;
    }
    case Tk::S1Elim: {
      const Term& s = t->sub[1];
      if (s->tk == Tk::Base) return stepped(t->sub[2], Rule::S1ElimBase);
      if (s->tk == Tk::Loop && isIntroduced(I, s))
        return stepped(mkPApp(t->sub[3], s->iv), Rule::S1ElimLoop);
      if (s->tk == Tk::Comp && isIntroduced(I, s)) {
        const Name& i = s->dir;
        Term v = fill(i, mkS1(), s->sys, s->sub[1]);
        std::vector<Branch> br;
        for (const auto& b : s->sys)
          br.push_back({b.face, mkS1Elim(t->var, t->sub[0], b.tm, t->sub[2],
                                         t->sub[3])});
        Term b0 =
            mkS1Elim(t->var, t->sub[0], s->sub[1], t->sub[2], t->sub[3]);
        return stepped(mkComp(i, termSubst(t->sub[0], t->var, v),
                              std::move(br), b0),
                       Rule::S1ElimComp);
      }
      return congr(
          I, s, "s1elim-scrut",
          [&](const Term& v) {
            return mkS1Elim(t->var, t->sub[0], v, t->sub[2], t->sub[3]);
          },
          "circle eliminator scrutinee is not a circle value");
    }
    case Tk::TruncElim: {
      const Term& s = t->sub[1];
      if (s->tk == Tk::Inc)
        return stepped(mkApp(t->sub[2], s->sub[0]), Rule::TruncElimInc);
      if (s->tk == Tk::Squash && isIntroduced(I, s)) {
        Term eu = mkTruncElim(t->var, t->sub[0], s->sub[0], t->sub[2],
                              t->sub[3]);
        Term ev = mkTruncElim(t->var, t->sub[0], s->sub[1], t->sub[2],
                              t->sub[3]);
        Term applied = mkApp(
            mkApp(mkApp(mkApp(t->sub[3], s->sub[0]), s->sub[1]), eu), ev);
        return stepped(mkPApp(applied, s->iv), Rule::TruncElimSquash);
      }
      if (s->tk == Tk::Hcomp && isIntroduced(I, s)) {
        const Name& j = s->dir;
        Name j2 = fresh("j");
        std::vector<Branch> wb;
        for (const auto& b : s->sys)
          wb.push_back({b.face, substName(b.tm, j, ivMeet(iv(j), iv(j2)))});
        wb.push_back({Face::atom(j, false), s->sub[1]});
        Term w = mkHcomp(s->sub[0], j2, std::move(wb), s->sub[1]);
        std::vector<Branch> br;
        for (const auto& b : s->sys)
          br.push_back({b.face, mkTruncElim(t->var, t->sub[0], b.tm,
                                            t->sub[2], t->sub[3])});
        Term b0 =
            mkTruncElim(t->var, t->sub[0], s->sub[1], t->sub[2], t->sub[3]);
        return stepped(mkComp(j, termSubst(t->sub[0], t->var, w),
                              std::move(br), b0),
                       Rule::TruncElimHcomp);
      }
      return congr(
          I, s, "inhelim-scrut",
          [&](const Term& v) {
            return mkTruncElim(t->var, t->sub[0], v, t->sub[2], t->sub[3]);
          },
          "truncation eliminator scrutinee is not a truncation value");
    }
  }
  return stuck("unhandled term form");
}

Term whnf(const NameCtx& I, const Term& t, long& fuel,
          std::vector<TraceEntry>* trace) {
  Term cur = t;
  std::size_t idx = 0;
  for (;;) {
    if (--fuel < 0) throw FuelExhausted("out of fuel after " +
                                        std::to_string(idx) + " steps");
    StepResult r = whnfStep(I, cur);
    switch (r.k) {
      case StepResult::K::Whnf:
        return cur;
      case StepResult::K::Stuck:
        throw StuckError(r.reason);
      case StepResult::K::Stepped:
        cur = r.t;
        if (trace) trace->push_back({idx, r.rule, r.path, cur});
        ++idx;
        break;
    }
  }
}

const char* ruleName(Rule r) {
  switch (r) {
    case Rule::None: return "none";
    case Rule::NatrecZero: return "natrec-zero";
    case Rule::NatrecSuc: return "natrec-suc";
    case Rule::NatrecCong: return "natrec-cong";
    case Rule::AppBeta: return "beta";
    case Rule::AppCong: return "app-cong";
    case Rule::FstPair: return "fst-pair";
    case Rule::FstCong: return "fst-cong";
    case Rule::SndPair: return "snd-pair";
    case Rule::SndCong: return "snd-cong";
    case Rule::PathBeta: return "path-beta";
    case Rule::PAppCong: return "papp-cong";
    case Rule::SysSelect: return "system-select";
    case Rule::GlueTSelect: return "Glue-total";
    case Rule::GlueSelect: return "glue-total";
    case Rule::UnglueSelect: return "unglue-total";
    case Rule::UnglueBeta: return "unglue-glue";
    case Rule::UnglueCong: return "unglue-cong";
    case Rule::LoopEnd: return "loop-endpoint";
    case Rule::SquashEnd: return "squash-endpoint";
    case Rule::HcompTotal: return "hcomp-total";
    case Rule::FwdEnd: return "fwd-one";
    case Rule::FwdInc: return "fwd-inc";
    case Rule::FwdSquash: return "fwd-squash";
    case Rule::FwdHcomp: return "fwd-hcomp";
    case Rule::FwdCong: return "fwd-cong";
    case Rule::S1ElimBase: return "s1elim-base";
    case Rule::S1ElimLoop: return "s1elim-loop";
    case Rule::S1ElimComp: return "s1elim-comp";
    case Rule::S1ElimCong: return "s1elim-cong";
    case Rule::TruncElimInc: return "inhelim-inc";
    case Rule::TruncElimSquash: return "inhelim-squash";
    case Rule::TruncElimHcomp: return "inhelim-hcomp";
    case Rule::TruncElimCong: return "inhelim-cong";
    case Rule::CompTypeCong: return "comp-line-cong";
    case Rule::CompNZero: return "comp-nat-zero";
    case Rule::CompNSuc: return "comp-nat-suc";
    case Rule::CompNCong: return "comp-nat-cong";
    case Rule::CompPi: return "comp-pi";
    case Rule::CompSigma: return "comp-sigma";
    case Rule::CompPath: return "comp-path";
    case Rule::CompGlue: return "comp-glue";
    case Rule::CompUniv: return "comp-universe";
    case Rule::CompS1Select: return "comp-circle-total";
    case Rule::CompTrunc: return "comp-truncation";
  }
  return "?";
}

bool ruleSubstStable(Rule r) {
  switch (r) {
    case Rule::NatrecZero:
    case Rule::NatrecSuc:
    case Rule::AppBeta:
    case Rule::FstPair:
    case Rule::SndPair:
    case Rule::PathBeta:
    case Rule::LoopEnd:
    case Rule::SquashEnd:
    case Rule::FwdEnd:
    case Rule::S1ElimBase:
    case Rule::TruncElimInc:
    case Rule::CompNZero:
    case Rule::CompNSuc:
    case Rule::CompPi:
    case Rule::CompSigma:
    case Rule::CompPath:
    case Rule::CompUniv:
    case Rule::CompTrunc:
      return true;
    default:
      return false;
  }
}

}  // namespace ctt

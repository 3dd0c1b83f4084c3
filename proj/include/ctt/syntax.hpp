#pragma once

#include <memory>
#include <set>
#include <vector>

#include "ctt/face.hpp"
#include "ctt/interval.hpp"
#include "ctt/name.hpp"

namespace ctt {

enum class Tk {
  Var,
  Nat,
  Zero,
  Suc,
  Natrec,
  Pi,
  Lam,
  App,
  Sigma,
  Pair,
  Fst,
  Snd,
  Path,
  PLam,
  PApp,
  SysT,
  SysE,
  GlueT,
  Glue,
  Unglue,
  Univ,
  Comp,
  S1,
  Base,
  Loop,
  S1Elim,
  Trunc,
  Inc,
  Squash,
  Hcomp,
  Fwd,
  TruncElim,
};

struct TermNode;
using Term = std::shared_ptr<const TermNode>;

// Constraint entry [phi -> t]. Used by systems, glue/unglue annotations,
// comp and hcomp. Source order is significant ("k minimal" selection).
struct Branch {
  Face face;
  Term tm;
};

// Glue type entry [phi -> (T, w)].
struct GlueBranch {
  Face face;
  Term ty;
  Term eqv;
};

// One node kind for the whole calculus; the slot layout per tag is:
//
//   Var        var=x
//   Suc        sub={t}
//   Natrec     var=x binds sub[0];  sub={C, n, z, s}
//   Pi/Sigma   var=x binds sub[1];  sub={A, B}
//   Lam        var=x binds sub[1];  sub={A, body}
//   App        sub={f, a}
//   Pair       sub={u, v}
//   Fst/Snd    sub={t}
//   Path       dir=i binds sub[0];  sub={A, a0, a1}
//   PLam       dir=i binds sub[0];  sub={body}
//   PApp       sub={t}, iv=r
//   SysT/SysE  sys
//   GlueT      gsys, sub={A}
//   Glue       sys (values), sub={a}
//   Unglue     sys (equiv annotations), sub={u}
//   Comp       dir=i binds sub[0] and every sys term; sub={A, u0}; sys
//              faces live over the outer context and never mention dir
//   Loop       iv=r
//   S1Elim     var=x binds sub[0];  sub={C, t, b, l}
//   Trunc      sub={A}
//   Inc        sub={a}
//   Squash     sub={u, v}, iv=r
//   Hcomp      dir=i binds every sys term; sub={T, u0}; T is the
//              (truncation) type annotation, constant in dir
//   Fwd        dir=i binds sub[0];  sub={A, u}, iv=r
//   TruncElim  var=z binds sub[0];  sub={C, w, t, p}
struct TermNode {
  Tk tk;
  Name var;
  Name dir;
  Interval iv;
  std::vector<Term> sub;
  std::vector<Branch> sys;
  std::vector<GlueBranch> gsys;
};

// Constructors.
Term mkVar(const Name& x);
Term mkNat();
Term mkZero();
Term mkSuc(Term t);
Term mkNatrec(const Name& x, Term motive, Term scrut, Term z, Term s);
Term mkPi(const Name& x, Term dom, Term cod);
Term mkLam(const Name& x, Term dom, Term body);
Term mkApp(Term f, Term a);
Term mkArrow(Term dom, Term cod);
Term mkSigma(const Name& x, Term dom, Term cod);
Term mkPair(Term u, Term v);
Term mkFst(Term t);
Term mkSnd(Term t);
Term mkPath(const Name& i, Term line, Term a0, Term a1);
Term mkPathND(Term ty, Term a0, Term a1);  // non-dependent, vacuous binder
Term mkPLam(const Name& i, Term body);
Term mkPApp(Term t, const Interval& r);
Term mkSysT(std::vector<Branch> sys);
Term mkSysE(std::vector<Branch> sys);
Term mkGlueT(std::vector<GlueBranch> gsys, Term a);
Term mkGlue(std::vector<Branch> sys, Term a);
Term mkUnglue(std::vector<Branch> sys, Term u);
Term mkUniv();
Term mkComp(const Name& i, Term line, std::vector<Branch> sys, Term u0);
Term mkS1();
Term mkBase();
Term mkLoop(const Interval& r);
Term mkS1Elim(const Name& x, Term motive, Term scrut, Term b, Term l);
Term mkTrunc(Term a);
Term mkInc(Term a);
Term mkSquash(Term u, Term v, const Interval& r);
Term mkHcomp(Term ty, const Name& i, std::vector<Branch> sys, Term u0);
Term mkFwd(const Name& i, Term line, const Interval& r, Term u);
Term mkTruncElim(const Name& z, Term motive, Term scrut, Term t, Term p);

// Numeral suc^n 0.
Term mkNumeral(unsigned long long n);

// Alpha-equivalence: identity after consistent renaming of bound names
// and variables.
bool alphaEq(const Term& a, const Term& b);

// Free interval names (interval positions, face positions, and bodies
// minus binders).
std::set<Name> freeNames(const Term& t);

// Free term variables.
std::set<Name> freeVars(const Term& t);

}  // namespace ctt

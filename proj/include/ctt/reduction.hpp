#pragma once

#include <string>
#include <vector>

#include "ctt/subst.hpp"
#include "ctt/syntax.hpp"

// Deterministic weak-head reduction over name contexts. All face and
// interval side conditions are decided by the lattice normal forms.
namespace ctt {

enum class Rule {
  None,
  NatrecZero,
  NatrecSuc,
  NatrecCong,
  AppBeta,
  AppCong,
  FstPair,
  FstCong,
  SndPair,
  SndCong,
  PathBeta,
  PAppCong,
  SysSelect,
  GlueTSelect,
  GlueSelect,
  UnglueSelect,
  UnglueBeta,
  UnglueCong,
  LoopEnd,
  SquashEnd,
  HcompTotal,
  FwdEnd,
  FwdInc,
  FwdSquash,
  FwdHcomp,
  FwdCong,
  S1ElimBase,
  S1ElimLoop,
  S1ElimComp,
  S1ElimCong,
  TruncElimInc,
  TruncElimSquash,
  TruncElimHcomp,
  TruncElimCong,
  CompTypeCong,
  CompNZero,
  CompNSuc,
  CompNCong,
  CompPi,
  CompSigma,
  CompPath,
  CompGlue,
  CompUniv,
  CompS1Select,
  CompTrunc,
};

const char* ruleName(Rule r);

// True for rules closed under name substitution: no negated face or
// interval side condition, no minimal-branch selection, no reduction
// premise. The coherence audit checks these commute on the nose.
bool ruleSubstStable(Rule r);

struct StepResult {
  enum class K { Stepped, Whnf, Stuck };
  K k;
  Term t;                // the reduct when Stepped
  Rule rule = Rule::None;
  std::string path;      // redex position, e.g. "app-head.natrec-scrut"
  std::string reason;    // when Stuck
};

// Outer form is an introduction under the side conditions: Glue forms
// need total face != 1, loop/squash need r outside {0,1}, hcomp and
// comp at a literal S1 line need no selectable branch. Systems require
// join = 1 with every face != 1 — unsatisfiable over a name context.
bool isIntroduced(const NameCtx& I, const Term& t);

StepResult whnfStep(const NameCtx& I, const Term& t);

struct TraceEntry {
  std::size_t index;
  Rule rule;
  std::string path;
  Term snapshot;  // the whole term after the step
};

// Iterates whnfStep. Throws StuckError / FuelExhausted.
Term whnf(const NameCtx& I, const Term& t, long& fuel,
          std::vector<TraceEntry>* trace = nullptr);

}  // namespace ctt

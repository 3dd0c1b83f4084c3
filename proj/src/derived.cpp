#include "ctt/derived.hpp"

namespace ctt {

namespace {

Interval iv(const Name& n) { return Interval::var(n); }

Term fiber(const Term& T, const Term& A, const Term& a, const Term& fn) {
  Name x = fresh("x");
  return mkSigma(x, T, mkPathND(A, a, mkApp(fn, mkVar(x))));
}

Term isContr(const Term& C) {
  Name c = fresh("c"), y = fresh("y");
  return mkSigma(c, C, mkPi(y, C, mkPathND(C, mkVar(c), mkVar(y))));
}

// The GlueT branch list as one partial type/equivalence: single branches
// stay bare, several become systems (they only ever appear under face-1
// substitutions, where selection resolves them).
Term branchTypes(const Term& glueTy) {
  if (glueTy->gsys.size() == 1) return glueTy->gsys[0].ty;
  std::vector<Branch> ts;
  for (const auto& g : glueTy->gsys) ts.push_back({g.face, g.ty});
  return mkSysT(std::move(ts));
}

Term branchEquivs(const Term& glueTy) {
  if (glueTy->gsys.size() == 1) return glueTy->gsys[0].eqv;
  std::vector<Branch> ws;
  for (const auto& g : glueTy->gsys) ws.push_back({g.face, g.eqv});
  return mkSysE(std::move(ws));
}

}  // namespace

Term fill(const Name& i, const Term& A, const std::vector<Branch>& sys,
          const Term& u0) {
  Name j = fresh("j");
  Interval ij = ivMeet(iv(i), iv(j));
  std::vector<Branch> out;
  out.reserve(sys.size() + 1);
  for (const auto& b : sys) out.push_back({b.face, substName(b.tm, i, ij)});
  out.push_back({Face::atom(i, false), u0});
  return mkComp(j, substName(A, i, ij), std::move(out), u0);
}

Term predTerm() {
  Name n = fresh("n"), m = fresh("m"), x = fresh("x"), y = fresh("y");
  return mkLam(n, mkNat(),
               mkNatrec(m, mkNat(), mkVar(n), mkZero(),
                        mkLam(x, mkNat(), mkLam(y, mkNat(), mkVar(x)))));
}

Term transp(const Name& i, const Term& A, const Term& a) {
  return mkComp(i, A, {}, a);
}

Term equivType(const Term& T, const Term& A) {
  Name f = fresh("f"), a = fresh("a");
  return mkSigma(f, mkArrow(T, A),
                 mkPi(a, A, isContr(fiber(T, A, mkVar(a), mkVar(f)))));
}

Term idEquiv(const Term& A) {
  Name x = fresh("x"), a = fresh("a"), y = fresh("y");
  Name j = fresh("j"), j2 = fresh("j"), k = fresh("k");
  Term idf = mkLam(x, A, mkVar(x));
  Term center = mkPair(mkVar(a), mkPLam(j, mkVar(a)));
  Term contract = mkLam(
      y, fiber(A, A, mkVar(a), idf),
      mkPLam(k, mkPair(mkPApp(mkSnd(mkVar(y)), iv(k)),
                       mkPLam(j2, mkPApp(mkSnd(mkVar(y)),
                                         ivMeet(iv(j2), iv(k)))))));
  return mkPair(idf, mkLam(a, A, mkPair(center, contract)));
}

Term ptoeq(const Name& i, const Term& A) {
  Term A0 = atEnd(A, i, false);
  return mkComp(i, equivType(A0, A), {}, idEquiv(A0));
}

Term pres(const Name& i, const Term& f, const Term& T, const Term& A,
          const std::vector<Branch>& sys, const Term& u0) {
  Term v = fill(i, T, sys, u0);
  Name j = fresh("j");
  std::vector<Branch> br;
  br.reserve(sys.size() + 1);
  for (const auto& b : sys) br.push_back({b.face, mkApp(f, b.tm)});
  br.push_back({Face::atom(j, true), mkApp(f, v)});
  return mkPLam(j,
                mkComp(i, A, std::move(br), mkApp(atEnd(f, i, false), u0)));
}

std::pair<Term, Term> equivExtend(const Term& w, const Term& T, const Term& A,
                                  const std::vector<EquivBranch>& branches,
                                  const Term& a) {
  Term C = fiber(T, A, a, mkFst(w));
  Term contr = mkApp(mkSnd(w), a);
  Name j = fresh("j");
  std::vector<Branch> br;
  br.reserve(branches.size());
  for (const auto& e : branches)
    br.push_back(
        {e.face, mkPApp(mkApp(mkSnd(contr), mkPair(e.t, e.path)), iv(j))});
  Term res = mkComp(j, C, std::move(br), mkFst(contr));
  return {mkFst(res), mkSnd(res)};
}

std::pair<Term, Term> glueCompParts(const Name& i, const Term& glueTy,
                                    const std::vector<Branch>& sys,
                                    const Term& u0) {
  Term A = glueTy->sub[0];
  Face phi = Face::zero();
  for (const auto& g : glueTy->gsys) phi = faceJoin(phi, g.face);
  Term T = branchTypes(glueTy);
  Term w = branchEquivs(glueTy);

  std::vector<Branch> unglAnn;
  for (const auto& g : glueTy->gsys) unglAnn.push_back({g.face, g.eqv});
  auto aOf = [&](const Term& u) { return mkUnglue(unglAnn, u); };

  std::vector<Branch> ann0;
  for (const auto& g : glueTy->gsys) {
    Face f0 = faceSubst(g.face, {{i, Interval::zero()}});
    if (!faceIsZero(f0)) ann0.push_back({f0, atEnd(g.eqv, i, false)});
  }
  Term a0 = mkUnglue(std::move(ann0), u0);

  std::vector<Branch> aSys;
  for (const auto& b : sys) aSys.push_back({b.face, aOf(b.tm)});
  Term a1p = mkComp(i, A, std::move(aSys), a0);
  Term t1p = mkComp(i, T, sys, u0);
  Term omega = pres(i, mkFst(w), T, A, sys, u0);

  Face delta = faceForall(i, phi);
  Term w1 = atEnd(w, i, true);
  Term T1 = atEnd(T, i, true);
  Term A1 = atEnd(A, i, true);

  std::vector<EquivBranch> ebr;
  if (!faceIsZero(delta)) ebr.push_back({delta, t1p, omega});
  for (const auto& b : sys)
    if (!faceIsZero(b.face))
      ebr.push_back({b.face, atEnd(b.tm, i, true), mkPLam(fresh("j"), a1p)});
  auto [t1, alpha] = equivExtend(w1, T1, A1, ebr, a1p);

  Name j = fresh("j");
  std::vector<Branch> abr;
  Face phi1 = faceSubst(phi, {{i, Interval::one()}});
  if (!faceIsZero(phi1)) abr.push_back({phi1, mkPApp(alpha, iv(j))});
  for (const auto& b : sys)
    if (!faceIsZero(b.face)) abr.push_back({b.face, atEnd(aOf(b.tm), i, true)});
  Term a1 = mkComp(j, A1, std::move(abr), a1p);

  return {t1, a1};
}

}  // namespace ctt

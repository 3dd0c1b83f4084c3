#include "doctest.h"

#include "ctt/checker.hpp"
#include "ctt/derived.hpp"
#include "ctt/evaluator.hpp"
#include "ctt/printer.hpp"
#include "gen.hpp"

using namespace ctt;

namespace {
const Name ni{"i"}, nj{"j"};
}

TEST_SUITE("derived") {

TEST_CASE("pred computes the predecessor") {
  NameCtx I{};
  CHECK(evalNat(I, mkApp(predTerm(), mkNumeral(0))) == 0);
  for (unsigned long long n = 1; n <= 12; ++n)
    CHECK(evalNat(I, mkApp(predTerm(), mkNumeral(n))) == n - 1);
}

TEST_CASE("fill endpoints") {
  NameCtx I{nj};
  Face fj0 = Face::atom(nj, false);
  // at i = 0 the filler is the base, at i = 1 it is the composition
  Term f = fill(ni, mkNat(), {{fj0, mkNumeral(2)}}, mkNumeral(2));
  CHECK(evalNat(I, substName(f, ni, Interval::zero())) == 2);
  Term c = mkComp(ni, mkNat(), {{fj0, mkNumeral(2)}}, mkNumeral(2));
  CHECK(evalNat(I, substName(f, ni, Interval::one())) == evalNat(I, c));
  // the fill direction must not leak into the comp's fresh binder
  REQUIRE(f->tk == Tk::Comp);
  CHECK_FALSE(f->dir == ni);
}

TEST_CASE("fill satisfies its own constraints") {
  NameCtx I{nj};
  Face fj0 = Face::atom(nj, false);
  Term f = fill(ni, mkNat(), {{fj0, mkNumeral(3)}}, mkNumeral(3));
  // under (j=0) the filler equals the constraint for any i
  FaceRestriction fr = faceContextSubst({{nj, false}}, NameCtx{ni, nj});
  CHECK(evalNat(fr.ctx, ctt::apply(f, fr.subst)) == 3);
}

TEST_CASE("transport along a constant line is computed away") {
  NameCtx I{};
  CHECK(evalNat(I, transp(ni, mkNat(), mkNumeral(5))) == 5);
}

TEST_CASE("identity equivalence") {
  NameCtx I{};
  long fuel = 100000;
  // is a well-typed inhabitant of Equiv N N
  Ctx ctx;
  CHECK_NOTHROW(check(ctx, idEquiv(mkNat()), equivType(mkNat(), mkNat()),
                      fuel));
  // its function part is the identity
  CHECK(evalNat(I, mkApp(mkFst(idEquiv(mkNat())), mkNumeral(4))) == 4);
}

TEST_CASE("path-to-equivalence along a constant line") {
  NameCtx I{};
  // transporting the identity equivalence along a degenerate line in U
  // still applies as the identity
  Term e = ptoeq(ni, mkNat());
  CHECK(evalNat(I, mkApp(mkFst(e), mkNumeral(3))) == 3);
}

TEST_CASE("equivalence extension respects its branches") {
  NameCtx I{nj};
  // total branch: under 1F the extension must return the given pair
  Term w = idEquiv(mkNat());
  std::vector<EquivBranch> br{
      {Face::one(), mkNumeral(2), mkPLam(ni, mkNumeral(2))}};
  auto [t1, path] = equivExtend(w, mkNat(), mkNat(), br, mkNumeral(2));
  CHECK(evalNat(I, t1) == 2);
  // the path starts at a
  CHECK(evalNat(I, mkPApp(path, Interval::zero())) == 2);
}

TEST_CASE("preservation path endpoints") {
  NameCtx I{nj};
  Term idf = mkLam(Name{"x"}, mkNat(), mkVar(Name{"x"}));
  Term p = pres(ni, idf, mkNat(), mkNat(), {}, mkNumeral(2));
  // <j> ... from comp (f u0) to f (comp u0); both ends are 2 here
  CHECK(evalNat(I, mkPApp(p, Interval::zero())) == 2);
  CHECK(evalNat(I, mkPApp(p, Interval::one())) == 2);
}

}  // TEST_SUITE

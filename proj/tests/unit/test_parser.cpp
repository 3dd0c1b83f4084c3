#include <string>

#include "doctest.h"

#include "ctt/errors.hpp"
#include "ctt/parser.hpp"
#include "ctt/printer.hpp"
#include "gen.hpp"

using namespace ctt;

TEST_SUITE("parser") {

TEST_CASE("corpus round-trips through the printer") {
  SourceFile sf =
      parseFile(gen::slurp(std::string(CORPUS_DIR) + "/corpus.ctt"));
  for (const auto& d : sf.defs) {
    CAPTURE(d.name);
    Term again = parseTerm(pretty(d.body), sf.names);
    if (!alphaEq(again, d.body)) {
      CAPTURE(pretty(d.body));
      CAPTURE(pretty(again));
      CHECK(false);
    }
    CHECK(alphaEq(parseTerm(pretty(d.type), sf.names), d.type));
  }
}

TEST_CASE("random terms round-trip through the printer") {
  gen::Rng rng(20260841);
  NameCtx names = gen::baseNames();
  for (int t = 0; t < 2000; ++t) {
    Term a = gen::randomTerm(rng, 4);
    if (!freeVars(a).empty()) continue;  // printer output must be closed
    CAPTURE(pretty(a));
    Term again = parseTerm(pretty(a), names);
    CHECK(alphaEq(again, a));
  }
}

TEST_CASE("definitions unfold transparently") {
  SourceFile sf = parseFile("two : N = suc (suc Z)\nfour : N = suc (suc two)");
  REQUIRE(sf.defs.size() == 2);
  CHECK(alphaEq(sf.defs[1].body, mkNumeral(4)));
}

TEST_CASE("application stops at the next definition") {
  SourceFile sf = parseFile(
      "f : N -> N = \\(x:N) -> x\n"
      "a : N = f\n  Z\n"
      "b : N = f a");
  REQUIRE(sf.defs.size() == 3);
  CHECK(sf.defs[1].name == "a");
  CHECK(sf.defs[1].body->tk == Tk::App);
}

TEST_CASE("parse errors carry a position") {
  try {
    parseFile("x : N = )");
    CHECK(false);
  } catch (const ParseError& e) {
    CHECK(e.line >= 1);
    CHECK(e.col >= 1);
  }
  CHECK_THROWS_AS(parseFile("x : N ="), ParseError);
  CHECK_THROWS_AS(parseTerm("comp N [] Z", {}), ParseError);
}

TEST_CASE("faces and intervals in the surface syntax") {
  NameCtx names{Name{"j"}};
  CHECK(alphaEq(parseTerm("loop (~j)", names),
                mkLoop(ivRev(Interval::var(Name{"j"})))));
  Face f = parseFace("(i=0) \\/ (j=1)");
  CHECK(faceEq(f, faceJoin(Face::atom(Name{"i"}, false),
                           Face::atom(Name{"j"}, true))));
  CHECK(faceIsZero(parseFace("0F")));
  CHECK(faceIsOne(parseFace("1F")));
}

}  // TEST_SUITE

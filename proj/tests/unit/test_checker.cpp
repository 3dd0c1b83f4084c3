#include <map>
#include <string>

#include "doctest.h"

#include "ctt/checker.hpp"
#include "ctt/errors.hpp"
#include "ctt/parser.hpp"
#include "gen.hpp"

using namespace ctt;

namespace {

SourceFile loadCorpus(const char* file) {
  return parseFile(gen::slurp(std::string(CORPUS_DIR) + "/" + file));
}

bool accepts(const SourceFile& sf, const Definition& d,
             std::string* klass = nullptr) {
  Ctx ctx;
  ctx.names = sf.names;
  long fuel = 1000000;
  try {
    check(ctx, d.type, mkUniv(), fuel);
    check(ctx, d.body, d.type, fuel);
    return true;
  } catch (const CheckError& e) {
    if (klass) *klass = e.errClass;
    return false;
  }
}

}  // namespace

TEST_SUITE("checker") {

TEST_CASE("every corpus definition is accepted") {
  SourceFile sf = loadCorpus("corpus.ctt");
  for (const auto& d : sf.defs) {
    CAPTURE(d.name);
    CHECK(accepts(sf, d));
  }
}

TEST_CASE("every mutant is rejected with the right error class") {
  SourceFile sf = loadCorpus("mutants.ctt");
  const std::map<std::string, std::string> expect{
      {"mSucU", "Mismatch"},       {"mLam", "Mismatch"},
      {"mFun", "Mismatch"},        {"mPApp", "Mismatch"},
      {"mVar", "UnboundVariable"}, {"mPathEnd", "Mismatch"},
      {"mCompBase", "RestrictionUnsatisfied"},
      {"mFace", "Mismatch"},       {"mGlueSwap", "Mismatch"},
      {"mPair", "Mismatch"},
  };
  std::size_t mutants = 0;
  for (const auto& d : sf.defs) {
    CAPTURE(d.name);
    auto it = expect.find(d.name);
    if (it == expect.end()) {
      CHECK(accepts(sf, d));  // helper definitions stay well typed
      continue;
    }
    ++mutants;
    std::string klass;
    CHECK_FALSE(accepts(sf, d, &klass));
    CHECK(klass == it->second);
  }
  CHECK(mutants == expect.size());
}

TEST_CASE("no candidate proof of 0 = 1 is accepted") {
  SourceFile sf = loadCorpus("noninhabitants.ctt");
  std::size_t seen = 0;
  for (const auto& d : sf.defs) {
    CAPTURE(d.name);
    ++seen;
    CHECK_FALSE(accepts(sf, d));
  }
  CHECK(seen == 3);
}

TEST_CASE("synthesis on basic forms") {
  Ctx ctx;
  long fuel = 100000;
  CHECK(alphaEq(infer(ctx, mkNumeral(2), fuel), mkNat()));
  CHECK(alphaEq(infer(ctx, mkNat(), fuel), mkUniv()));
  CHECK(alphaEq(infer(ctx, mkBase(), fuel), mkS1()));
  CHECK_THROWS_AS(infer(ctx, mkVar(Name{"nope"}), fuel), CheckError);
}

TEST_CASE("conversion includes eta") {
  NameCtx names{};
  Ctx ctx;
  Name f{"f"}, x{"x"}, i{"i"};
  ctx.vars.emplace_back(f, mkArrow(mkNat(), mkNat()));
  long fuel = 100000;
  Term etaF = mkLam(x, mkNat(), mkApp(mkVar(f), mkVar(x)));
  CHECK(convert(ctx, etaF, mkVar(f), fuel));
  Ctx ctx2;
  Name p{"p"};
  ctx2.vars.emplace_back(p, mkPathND(mkNat(), mkZero(), mkZero()));
  Term etaP = mkPLam(i, mkPApp(mkVar(p), Interval::var(i)));
  CHECK(convert(ctx2, etaP, mkVar(p), fuel));
}

TEST_CASE("path endpoints refine applications at 0 and 1") {
  Ctx ctx;
  Name p{"p"};
  ctx.vars.emplace_back(
      p, mkPathND(mkNat(), mkNumeral(1), mkNumeral(2)));
  long fuel = 100000;
  CHECK(convert(ctx, mkPApp(mkVar(p), Interval::zero()), mkNumeral(1),
                fuel));
  CHECK(convert(ctx, mkPApp(mkVar(p), Interval::one()), mkNumeral(2),
                fuel));
  CHECK_FALSE(convert(ctx, mkPApp(mkVar(p), Interval::zero()),
                      mkNumeral(2), fuel));
}

}  // TEST_SUITE

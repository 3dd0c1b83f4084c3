#include <map>
#include <sstream>
#include <string>

#include "doctest.h"

#include "ctt/evaluator.hpp"
#include "ctt/parser.hpp"
#include "ctt/printer.hpp"
#include "gen.hpp"
#include "oracle.hpp"

using namespace ctt;

namespace {

struct Expected {
  std::string kind;
  unsigned long long value;
};

std::map<std::string, Expected> loadExpected() {
  std::istringstream in(
      gen::slurp(std::string(CORPUS_DIR) + "/expected.txt"));
  std::map<std::string, Expected> out;
  std::string name, kind;
  unsigned long long v;
  while (in >> name >> kind >> v) out[name] = {kind, v};
  return out;
}

SourceFile corpus() {
  return parseFile(gen::slurp(std::string(CORPUS_DIR) + "/corpus.ctt"));
}

}  // namespace

TEST_SUITE("evaluator") {

TEST_CASE("corpus values match the frozen table") {
  SourceFile sf = corpus();
  auto expected = loadExpected();
  std::size_t covered = 0;
  for (const auto& d : sf.defs) {
    auto it = expected.find(d.name);
    if (it == expected.end()) continue;
    ++covered;
    CAPTURE(d.name);
    if (it->second.kind == "nat") {
      CHECK(evalNat(sf.names, d.body) == it->second.value);
    } else {
      Term w = extractWitness(sf.names, d.body);
      CHECK(evalNat(sf.names, w) == it->second.value);
    }
  }
  CHECK(covered == expected.size());
  CHECK(covered >= 40);
}

TEST_CASE("engine and reference interpreter agree on the corpus") {
  SourceFile sf = corpus();
  for (const auto& d : sf.defs) {
    CAPTURE(d.name);
    if (d.type->tk == Tk::Nat) {
      CHECK(evalNat(sf.names, d.body) ==
            oracle::evalNat(sf.names, d.body));
    } else if (d.type->tk == Tk::Trunc && d.type->sub[0]->tk == Tk::Nat) {
      CHECK(evalNat(sf.names, extractWitness(sf.names, d.body)) ==
            oracle::evalNat(sf.names, oracle::witness(sf.names, d.body)));
    }
  }
}

TEST_CASE("evaluation is deterministic across runs") {
  SourceFile sf = corpus();
  for (const auto& d : sf.defs) {
    if (d.type->tk != Tk::Nat) continue;
    std::size_t s1 = 0, s2 = 0;
    unsigned long long v1 = evalNat(sf.names, d.body, kDefaultFuel, &s1);
    unsigned long long v2 = evalNat(sf.names, d.body, kDefaultFuel, &s2);
    CHECK(v1 == v2);
    CHECK(s1 == s2);
  }
}

TEST_CASE("numeral values are invariant under name substitution") {
  SourceFile sf = corpus();
  for (const auto& d : sf.defs) {
    if (d.type->tk != Tk::Nat) continue;
    CAPTURE(d.name);
    AuditReport rep = coherenceAudit(sf.names, d.body, 25, 7);
    CHECK(rep.samples == 25);
    CHECK(rep.violations.empty());
  }
}

TEST_CASE("witness policy: left disjunct and base") {
  NameCtx I{Name{"j"}};
  Interval vj = Interval::var(Name{"j"});
  Term sq = mkSquash(mkInc(mkNumeral(1)), mkInc(mkNumeral(2)), vj);
  CHECK(evalNat(I, extractWitness(I, sq)) == 1);
  Term hc = mkHcomp(mkTrunc(mkNat()), Name{"i"},
                    {{Face::atom(Name{"j"}, false), sq}},
                    mkInc(mkNumeral(2)));
  CHECK(evalNat(I, extractWitness(I, hc)) == 2);
}

TEST_CASE("trace ends in the reported numeral") {
  NameCtx I{};
  Term t = parseTerm("(\\(x:N) -> suc (suc x)) (suc Z)", I);
  TraceReport tr = traceEval(I, t);
  CHECK(tr.numeral == 3);
  CHECK_FALSE(tr.trace.empty());
}

TEST_CASE("reports serialize to one structured line") {
  EvalReport r;
  r.name = "two";
  r.numeral = 2;
  r.steps = 5;
  std::string s = serializeReport(r);
  CHECK(s.find("\"two\"") != std::string::npos);
  CHECK(s.find("\"numeral\":2") != std::string::npos);
  CHECK(s.find('\n') == std::string::npos);
}

}  // TEST_SUITE

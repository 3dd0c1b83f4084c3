#include "ctt/evaluator.hpp"

#include <random>
#include <sstream>

#include "json.hpp"

#include "ctt/errors.hpp"
#include "ctt/printer.hpp"

namespace ctt {

namespace {

unsigned long long evalNatTraced(const NameCtx& I, const Term& u, long fuel,
                                 std::size_t* stepsOut,
                                 std::vector<TraceEntry>* trace) {
  unsigned long long n = 0;
  Term cur = u;
  long start = fuel;
  for (;;) {
    Term v = whnf(I, cur, fuel, trace);
    if (v->tk == Tk::Zero) {
      if (stepsOut) *stepsOut = static_cast<std::size_t>(start - fuel);
      return n;
    }
    if (v->tk == Tk::Suc) {
      ++n;
      cur = v->sub[0];
      continue;
    }
    throw StuckError("value of type N is not a numeral: " + pretty(v));
  }
}

Interval randomInterval(std::mt19937_64& rng, const NameCtx& J, int depth) {
  std::uniform_int_distribution<int> pick(0, J.empty() || depth <= 0 ? 2 : 5);
  switch (pick(rng)) {
    case 0:
      return Interval::zero();
    case 1:
      return Interval::one();
    case 2: {
      if (J.empty()) return Interval::zero();
      std::uniform_int_distribution<std::size_t> v(0, J.size() - 1);
      return Interval::var(J[v(rng)]);
    }
    case 3:
      return ivRev(randomInterval(rng, J, depth - 1));
    case 4:
      return ivMeet(randomInterval(rng, J, depth - 1),
                    randomInterval(rng, J, depth - 1));
    default:
      return ivJoin(randomInterval(rng, J, depth - 1),
                    randomInterval(rng, J, depth - 1));
  }
}

}  // namespace

unsigned long long evalNat(const NameCtx& I, const Term& u, long fuel,
                           std::size_t* stepsOut) {
  return evalNatTraced(I, u, fuel, stepsOut, nullptr);
}

Term extractWitness(const NameCtx& I, const Term& u, long fuel) {
  Term cur = u;
  for (;;) {
    Term v = whnf(I, cur, fuel, nullptr);
    switch (v->tk) {
      case Tk::Inc:
        return v->sub[0];
      case Tk::Squash:
        cur = v->sub[0];  // left-disjunct policy
        break;
      case Tk::Hcomp:
        cur = v->sub[1];  // base-first policy
        break;
      default:
        throw StuckError("value of truncation type has unexpected head: " +
                         pretty(v));
    }
  }
}

AuditReport coherenceAudit(const NameCtx& I, const Term& u,
                           std::size_t samples, std::uint64_t seed,
                           long fuel) {
  AuditReport rep;
  rep.samples = samples;
  unsigned long long expected = evalNat(I, u, fuel);
  std::mt19937_64 rng(seed);
  for (std::size_t s = 0; s < samples; ++s) {
    std::uniform_int_distribution<std::size_t> nj(0, 3);
    NameCtx J;
    std::size_t jn = nj(rng);
    for (std::size_t k = 0; k < jn; ++k) J.push_back(fresh("m"));
    NameSubst f;
    f.dom = I;
    f.cod = J;
    std::ostringstream desc;
    for (const auto& n : I) {
      f.map[n] = randomInterval(rng, J, 2);
      desc << show(n) << " := " << pretty(f.map[n]) << "; ";
    }
    long budget = fuel;
    try {
      unsigned long long got = evalNat(J, ctt::apply(u, f), budget);
      if (got != expected)
        rep.violations.push_back(
            {desc.str(), expected, std::to_string(got)});
    } catch (const KernelError& e) {
      rep.violations.push_back({desc.str(), expected, e.what()});
    }
  }
  return rep;
}

TraceReport traceEval(const NameCtx& I, const Term& u, long fuel) {
  TraceReport rep;
  rep.numeral = evalNatTraced(I, u, fuel, nullptr, &rep.trace);
  return rep;
}

std::string serializeReport(const EvalReport& r) {
  nlohmann::json j;
  j["name"] = r.name;
  if (r.numeral) j["numeral"] = *r.numeral;
  if (r.witness) j["witness"] = *r.witness;
  j["steps"] = r.steps;
  j["wall_ms"] = r.wallMs;
  return j.dump();
}

}  // namespace ctt

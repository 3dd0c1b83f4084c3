#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ctt/reduction.hpp"
#include "ctt/subst.hpp"
#include "ctt/syntax.hpp"

// Deep evaluation entry points: numerals, truncation witnesses, and the
// substitution-coherence audit.
namespace ctt {

inline constexpr long kDefaultFuel = 1000000;

struct EvalReport {
  std::string name;
  std::optional<unsigned long long> numeral;
  std::optional<std::string> witness;  // pretty-printed
  std::size_t steps = 0;
  double wallMs = 0.0;
};

// Repeated whnf, recursing through suc; the unique numeral value.
unsigned long long evalNat(const NameCtx& I, const Term& u,
                           long fuel = kDefaultFuel,
                           std::size_t* stepsOut = nullptr);

// Truncation witness. Policy: squash takes the left disjunct, hcomp
// takes the base.
Term extractWitness(const NameCtx& I, const Term& u, long fuel = kDefaultFuel);

struct AuditViolation {
  std::string subst;  // human-readable assignment
  unsigned long long expected = 0;
  std::string got;  // numeral or error text
};

struct AuditReport {
  std::size_t samples = 0;
  std::vector<AuditViolation> violations;
};

// Draws random name substitutions f : J -> I and checks that the
// numeral value of u is invariant under each.
AuditReport coherenceAudit(const NameCtx& I, const Term& u,
                           std::size_t samples, std::uint64_t seed,
                           long fuel = kDefaultFuel);

struct TraceReport {
  unsigned long long numeral = 0;
  std::vector<TraceEntry> trace;
};

TraceReport traceEval(const NameCtx& I, const Term& u,
                      long fuel = kDefaultFuel);

// One line-delimited structured record per report.
std::string serializeReport(const EvalReport& r);

}  // namespace ctt

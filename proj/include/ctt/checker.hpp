#pragma once

#include <string>
#include <utility>
#include <vector>

#include "ctt/subst.hpp"
#include "ctt/syntax.hpp"

// Best-effort bidirectional checker for closed definitions over name
// contexts. Incomplete by design: conversion is weak-head comparison
// with eta, restrictions are checked per irreducible face by
// substituting into the whole context. Rejections never mean semantic
// falsehood, only that this checker could not verify the judgment.
namespace ctt {

struct Ctx {
  NameCtx names;
  std::vector<std::pair<Name, Term>> vars;  // telescope order
};

// Error classes (CheckError::errClass): UnboundVariable,
// CannotSynthesize, Mismatch, RestrictionUnsatisfied, Incomplete.

Term infer(const Ctx& ctx, const Term& t, long& fuel);
void check(const Ctx& ctx, const Term& t, const Term& type, long& fuel);
bool convert(const Ctx& ctx, const Term& a, const Term& b, long& fuel);

// t = u on phi: conversion under alpha-bar for each irreducible
// alpha <= phi, with the substitution applied to the whole context.
void checkRestriction(const Ctx& ctx, const Face& phi, const Term& t,
                      const Term& u, long& fuel);

}  // namespace ctt

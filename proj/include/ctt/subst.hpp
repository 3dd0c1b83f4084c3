#pragma once

#include <map>
#include <vector>

#include "ctt/syntax.hpp"

namespace ctt {

// An ordered name context i1 : I, ..., in : I.
using NameCtx = std::vector<Name>;

// Combined substitution: interval names to interval elements and term
// variables to terms. Names/variables missing from the maps are fixed.
struct Sub {
  std::map<Name, Interval> iv;
  std::map<Name, Term> tm;
};

// Homomorphic application; every binder is freshened before descending,
// so capture is impossible by construction.
Term applySub(const Term& t, const Sub& s);

// A substitution f : cod -> dom assigning an interval element over cod to
// each name of dom.
struct NameSubst {
  NameCtx dom;
  NameCtx cod;
  std::map<Name, Interval> map;
};

NameSubst idSubst(const NameCtx& ctx);

Term apply(const Term& t, const NameSubst& f);
Interval apply(const Interval& r, const NameSubst& f);
Face apply(const Face& phi, const NameSubst& f);

// Acts as f then g; for all t, apply(t, compose(f, g)) is alpha-equal to
// apply(apply(t, f), g). Throws KernelError on a context mismatch when
// both contexts are declared.
NameSubst compose(const NameSubst& f, const NameSubst& g);

// Capture-avoiding replacement of a term variable.
Term termSubst(const Term& t, const Name& x, const Term& u);

// Single-name conveniences.
Term substName(const Term& t, const Name& i, const Interval& r);
Term atEnd(const Term& t, const Name& i, bool end1);

// The substitution associated with an irreducible face: the restricted
// context skips the names of alpha, each of alpha's names goes to its
// endpoint, everything else is fixed. Throws if alpha mentions a name
// not in ctx.
struct FaceRestriction {
  NameCtx ctx;      // I_alpha
  NameSubst subst;  // alpha-bar : I_alpha -> I
};

FaceRestriction faceContextSubst(const Irreducible& alpha, const NameCtx& ctx);

}  // namespace ctt

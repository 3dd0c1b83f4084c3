#pragma once

#include <utility>
#include <vector>

#include "ctt/subst.hpp"
#include "ctt/syntax.hpp"

// Term-level macro constructions invoked by the reduction rules. All
// builders return plain core terms; none of them reduce anything.
namespace ctt {

// fill^i A [phi -> u] u0 = comp^j A[i/i/\j] [phi -> u[i/i/\j], (i=0) -> u0] u0
// with j fresh. Constraint faces must be i-free.
Term fill(const Name& i, const Term& A, const std::vector<Branch>& sys,
          const Term& u0);

// \(n:N) -> natrec n 0 (\x.\_. x)
Term predTerm();

// comp^i A [] a
Term transp(const Name& i, const Term& A, const Term& a);

// (f : T -> A) * ((a : A) -> isContr((x : T) * Path A a (f x)))
Term equivType(const Term& T, const Term& A);

// The identity equivalence of A; second component contracts the fiber
// via the connection j/\k.
Term idEquiv(const Term& A);

// comp^i (Equiv A(i0) A) [] (idEquiv A(i0)) : Equiv A(i0) A(i1)
Term ptoeq(const Name& i, const Term& A);

// <j> comp^i A [psi_k -> f u_k, (j=1) -> f v] (f(i0) u0), v = fill.
// A path from comp^i A [psi -> f u] (f(i0) u0) to f(i1) (comp^i T ...).
Term pres(const Name& i, const Term& f, const Term& T, const Term& A,
          const std::vector<Branch>& sys, const Term& u0);

struct EquivBranch {
  Face face;
  Term t;     // candidate preimage
  Term path;  // Path A a (w.1 t)
};

// Extends a partial preimage of a along w : Equiv T A to a total one,
// via one comp in the contractible fiber. Returns (preimage, path).
std::pair<Term, Term> equivExtend(const Term& w, const Term& T, const Term& A,
                                  const std::vector<EquivBranch>& branches,
                                  const Term& a);

// The a1/t1 assembly for composition at a Glue type line. glueTy is the
// GlueT node (over I, i with total face != 1); sys/u0 are the comp's
// constraints and base. The caller wraps the result as
// glue [phi(i1) -> t1] a1.
std::pair<Term, Term> glueCompParts(const Name& i, const Term& glueTy,
                                    const std::vector<Branch>& sys,
                                    const Term& u0);

}  // namespace ctt

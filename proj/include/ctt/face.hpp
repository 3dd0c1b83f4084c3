#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <vector>

#include "ctt/interval.hpp"
#include "ctt/name.hpp"

namespace ctt {

// Conjunction of atoms (i=0)/(i=1): one polarity per name (true = (i=1)).
// The empty conjunct is the top face.
using Conj = std::map<Name, bool>;

// An irreducible face: a single nonzero conjunct.
using Irreducible = Conj;

// Element of the face lattice in irredundant disjunctive normal form.
// The empty join is 0 and {empty conjunct} is 1. A conjunct mentioning
// both (i=0) and (i=1) is annihilated during normalization; this is the
// defining relation of the lattice.
class Face {
 public:
  static Face zero();
  static Face one();
  static Face atom(const Name& n, bool endpoint);
  static Face fromConjs(std::set<Conj> conjs);

  const std::set<Conj>& conjs() const { return dnf_; }

  bool operator==(const Face&) const = default;
  auto operator<=>(const Face&) const = default;

 private:
  std::set<Conj> dnf_;
};

Face faceMeet(const Face& a, const Face& b);
Face faceJoin(const Face& a, const Face& b);

// phi <= psi iff every conjunct of phi is below some conjunct of psi,
// where c <= d iff atoms(d) is a subset of atoms(c). This decision
// procedure relies on nonzero conjuncts being join-prime in this
// presentation: a conjunct below a join of conjuncts is below one of the
// disjuncts (its consistent atom set satisfies exactly the disjuncts
// whose atoms it contains).
bool faceLeq(const Face& a, const Face& b);
bool faceEq(const Face& a, const Face& b);
bool faceIsOne(const Face& a);
bool faceIsZero(const Face& a);

enum class Split { Left, Right, Neither };

// If a \/ b = 1 the disjunction property yields a = 1 or b = 1.
Split disjunctionSplit(const Face& a, const Face& b);

// Least index whose face is 1 ("k minimal"), if any.
std::optional<std::size_t> minTrueIndex(const std::vector<Face>& faces);

// Right adjoint to weakening by i: drops the conjuncts mentioning i.
Face faceForall(const Name& i, const Face& phi);

// The conjuncts of phi, as irreducible faces; empty for phi = 0.
std::vector<Irreducible> irreduciblesUnder(const Face& phi);

// Structural image of "r = 1" (resp. "r = 0") in the face lattice.
Face faceOfEq1(const Interval& r);
Face faceOfEq0(const Interval& r);

std::set<Name> faceNames(const Face& a);

// Lattice homomorphism induced by a name assignment; missing names are
// kept fixed.
Face faceSubst(const Face& a, const std::map<Name, Interval>& f);

}  // namespace ctt

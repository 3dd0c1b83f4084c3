#pragma once

#include <map>
#include <set>

#include "ctt/name.hpp"

namespace ctt {

// A literal is a name i or its reversal 1-i.
struct IvLit {
  Name name;
  bool neg = false;
  auto operator<=>(const IvLit&) const = default;
};

// Meet of literals; the set keeps literals sorted and deduplicated.
using IvMeet = std::set<IvLit>;

// Element of the free De Morgan algebra on interval names, kept as an
// irredundant join of meets of literals. The empty join is 0 and the
// join containing the empty meet is 1; normalization guarantees no other
// meet is empty and no meet's literal set contains another's.
//
// There is deliberately no complement law: i /\ ~i is a genuine nonzero
// element, which is what makes connections work.
class Interval {
 public:
  static Interval zero();
  static Interval one();
  static Interval var(const Name& n);
  static Interval lit(const Name& n, bool neg);

  // Normalizes the given join-of-meets.
  static Interval fromMeets(std::set<IvMeet> meets);

  const std::set<IvMeet>& meets() const { return dnf_; }

  bool operator==(const Interval&) const = default;
  auto operator<=>(const Interval&) const = default;

 private:
  std::set<IvMeet> dnf_;
};

enum class End { Is0, Is1, Neither };

Interval ivMeet(const Interval& a, const Interval& b);
Interval ivJoin(const Interval& a, const Interval& b);
Interval ivRev(const Interval& a);
bool ivEq(const Interval& a, const Interval& b);
End ivIsEnd(const Interval& a);

std::set<Name> ivNames(const Interval& a);

// Homomorphic extension of a name assignment; names missing from the map
// are kept fixed.
Interval ivSubst(const Interval& a, const std::map<Name, Interval>& f);

}  // namespace ctt

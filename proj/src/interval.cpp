#include "ctt/interval.hpp"

#include <algorithm>

namespace ctt {

namespace {

bool subsumes(const IvMeet& small, const IvMeet& big) {
  return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

std::set<IvMeet> irredundant(std::set<IvMeet> meets) {
  // A join containing the empty meet is 1.
  if (meets.count(IvMeet{})) return {IvMeet{}};
  std::set<IvMeet> out;
  for (const auto& m : meets) {
    bool keep = true;
    for (const auto& m2 : meets) {
      if (m2 == m) continue;
      if (subsumes(m2, m)) {
        // Strict subset always wins; equal sets cannot occur in a std::set.
        keep = false;
        break;
      }
    }
    if (keep) out.insert(m);
  }
  return out;
}

}  // namespace

Interval Interval::zero() { return Interval{}; }

Interval Interval::one() {
  Interval r;
  return fromMeets({IvMeet{}});
}

Interval Interval::var(const Name& n) { return lit(n, false); }

Interval Interval::lit(const Name& n, bool neg) {
  return fromMeets({IvMeet{IvLit{n, neg}}});
}

Interval Interval::fromMeets(std::set<IvMeet> meets) {
  Interval r;
  r.dnf_ = irredundant(std::move(meets));
  return r;
}

Interval ivMeet(const Interval& a, const Interval& b) {
  std::set<IvMeet> out;
  for (const auto& ma : a.meets())
    for (const auto& mb : b.meets()) {
      IvMeet m = ma;
      m.insert(mb.begin(), mb.end());
      out.insert(std::move(m));
    }
  return Interval::fromMeets(std::move(out));
}

Interval ivJoin(const Interval& a, const Interval& b) {
  std::set<IvMeet> out = a.meets();
  out.insert(b.meets().begin(), b.meets().end());
  return Interval::fromMeets(std::move(out));
}

Interval ivRev(const Interval& a) {
  // De Morgan: rev distributes join to meet and meet to join.
  Interval acc = Interval::one();
  for (const auto& m : a.meets()) {
    Interval lits = Interval::zero();
    for (const auto& l : m) lits = ivJoin(lits, Interval::lit(l.name, !l.neg));
    acc = ivMeet(acc, lits);
  }
  return acc;
}

bool ivEq(const Interval& a, const Interval& b) { return a == b; }

End ivIsEnd(const Interval& a) {
  if (a.meets().empty()) return End::Is0;
  if (a == Interval::one()) return End::Is1;
  return End::Neither;
}

std::set<Name> ivNames(const Interval& a) {
  std::set<Name> out;
  for (const auto& m : a.meets())
    for (const auto& l : m) out.insert(l.name);
  return out;
}

Interval ivSubst(const Interval& a, const std::map<Name, Interval>& f) {
  Interval acc = Interval::zero();
  for (const auto& m : a.meets()) {
    Interval prod = Interval::one();
    for (const auto& l : m) {
      auto it = f.find(l.name);
      Interval img = it == f.end() ? Interval::var(l.name) : it->second;
      prod = ivMeet(prod, l.neg ? ivRev(img) : img);
    }
    acc = ivJoin(acc, prod);
  }
  return acc;
}

}  // namespace ctt

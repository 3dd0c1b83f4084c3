#include "ctt/face.hpp"

#include <algorithm>

namespace ctt {

namespace {

// atoms(d) subset of atoms(c), i.e. c <= d as faces.
bool conjBelow(const Conj& c, const Conj& d) {
  return std::includes(c.begin(), c.end(), d.begin(), d.end());
}

std::set<Conj> irredundant(std::set<Conj> conjs) {
  if (conjs.count(Conj{})) return {Conj{}};
  std::set<Conj> out;
  for (const auto& c : conjs) {
    bool keep = true;
    for (const auto& d : conjs) {
      if (d == c) continue;
      if (conjBelow(c, d)) {
        keep = false;
        break;
      }
    }
    if (keep) out.insert(c);
  }
  return out;
}

}  // namespace

Face Face::zero() { return Face{}; }

Face Face::one() { return fromConjs({Conj{}}); }

Face Face::atom(const Name& n, bool endpoint) {
  return fromConjs({Conj{{n, endpoint}}});
}

Face Face::fromConjs(std::set<Conj> conjs) {
  Face r;
  r.dnf_ = irredundant(std::move(conjs));
  return r;
}

Face faceMeet(const Face& a, const Face& b) {
  std::set<Conj> out;
  for (const auto& ca : a.conjs())
    for (const auto& cb : b.conjs()) {
      Conj c = ca;
      bool clash = false;
      for (const auto& [n, e] : cb) {
        auto it = c.find(n);
        if (it != c.end() && it->second != e) {
          clash = true;  // (i=0) /\ (i=1) annihilates
          break;
        }
        c[n] = e;
      }
      if (!clash) out.insert(std::move(c));
    }
  return Face::fromConjs(std::move(out));
}

Face faceJoin(const Face& a, const Face& b) {
  std::set<Conj> out = a.conjs();
  out.insert(b.conjs().begin(), b.conjs().end());
  return Face::fromConjs(std::move(out));
}

bool faceLeq(const Face& a, const Face& b) {
  for (const auto& c : a.conjs()) {
    bool below = false;
    for (const auto& d : b.conjs())
      if (conjBelow(c, d)) {
        below = true;
        break;
      }
    if (!below) return false;
  }
  return true;
}

bool faceEq(const Face& a, const Face& b) { return a == b; }

bool faceIsOne(const Face& a) { return a == Face::one(); }

bool faceIsZero(const Face& a) { return a.conjs().empty(); }

Split disjunctionSplit(const Face& a, const Face& b) {
  if (!faceIsOne(faceJoin(a, b))) return Split::Neither;
  return faceIsOne(a) ? Split::Left : Split::Right;
}

std::optional<std::size_t> minTrueIndex(const std::vector<Face>& faces) {
  for (std::size_t k = 0; k < faces.size(); ++k)
    if (faceIsOne(faces[k])) return k;
  return std::nullopt;
}

Face faceForall(const Name& i, const Face& phi) {
  std::set<Conj> out;
  for (const auto& c : phi.conjs())
    if (!c.count(i)) out.insert(c);
  return Face::fromConjs(std::move(out));
}

std::vector<Irreducible> irreduciblesUnder(const Face& phi) {
  return {phi.conjs().begin(), phi.conjs().end()};
}

Face faceOfEq1(const Interval& r) {
  Face acc = Face::zero();
  for (const auto& m : r.meets()) {
    Face prod = Face::one();
    for (const auto& l : m)
      prod = faceMeet(prod, Face::atom(l.name, !l.neg));
    acc = faceJoin(acc, prod);
  }
  return acc;
}

Face faceOfEq0(const Interval& r) { return faceOfEq1(ivRev(r)); }

std::set<Name> faceNames(const Face& a) {
  std::set<Name> out;
  for (const auto& c : a.conjs())
    for (const auto& [n, e] : c) out.insert(n);
  return out;
}

Face faceSubst(const Face& a, const std::map<Name, Interval>& f) {
  Face acc = Face::zero();
  for (const auto& c : a.conjs()) {
    Face prod = Face::one();
    for (const auto& [n, e] : c) {
      auto it = f.find(n);
      if (it == f.end()) {
        prod = faceMeet(prod, Face::atom(n, e));
      } else {
        prod = faceMeet(prod, e ? faceOfEq1(it->second) : faceOfEq0(it->second));
      }
    }
    acc = faceJoin(acc, prod);
  }
  return acc;
}

}  // namespace ctt

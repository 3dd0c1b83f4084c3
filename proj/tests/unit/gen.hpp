#pragma once

#include <fstream>
#include <map>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "ctt/face.hpp"
#include "ctt/interval.hpp"
#include "ctt/subst.hpp"
#include "ctt/syntax.hpp"

// Shared generators for the fuzz suites. Everything is seeded
// explicitly so failures reproduce.
namespace gen {

using Rng = std::mt19937_64;

inline std::vector<ctt::Name> baseNames() {
  return {ctt::Name{"i"}, ctt::Name{"j"}, ctt::Name{"k"}};
}

inline ctt::Interval randomInterval(Rng& rng, int depth = 3) {
  const auto ns = baseNames();
  std::uniform_int_distribution<int> pick(0, depth > 0 ? 5 : 2);
  switch (pick(rng)) {
    case 0: return ctt::Interval::zero();
    case 1: return ctt::Interval::one();
    case 2: {
      std::uniform_int_distribution<std::size_t> v(0, ns.size() - 1);
      return ctt::Interval::var(ns[v(rng)]);
    }
    case 3: return ctt::ivRev(randomInterval(rng, depth - 1));
    case 4:
      return ctt::ivMeet(randomInterval(rng, depth - 1),
                         randomInterval(rng, depth - 1));
    default:
      return ctt::ivJoin(randomInterval(rng, depth - 1),
                         randomInterval(rng, depth - 1));
  }
}

inline ctt::Face randomFace(Rng& rng, int depth = 3) {
  const auto ns = baseNames();
  std::uniform_int_distribution<int> pick(0, depth > 0 ? 4 : 2);
  switch (pick(rng)) {
    case 0: return ctt::Face::zero();
    case 1: return ctt::Face::one();
    case 2: {
      std::uniform_int_distribution<std::size_t> v(0, ns.size() - 1);
      std::uniform_int_distribution<int> e(0, 1);
      return ctt::Face::atom(ns[v(rng)], e(rng) == 1);
    }
    case 3:
      return ctt::faceMeet(randomFace(rng, depth - 1),
                           randomFace(rng, depth - 1));
    default:
      return ctt::faceJoin(randomFace(rng, depth - 1),
                           randomFace(rng, depth - 1));
  }
}

// Random substitution between the base name context and itself.
inline ctt::NameSubst randomSubst(Rng& rng) {
  ctt::NameSubst f;
  f.dom = baseNames();
  f.cod = baseNames();
  for (const auto& n : f.dom) f.map[n] = randomInterval(rng, 2);
  return f;
}

// Three-valued Kleene evaluation, the semantic oracle for the interval
// algebra: 0, 1, 2 stand for 0, 1/2, 1.
using IvAsg = std::map<ctt::Name, int>;

inline int evalIv(const ctt::Interval& a, const IvAsg& asg) {
  int jn = 0;
  for (const auto& m : a.meets()) {
    int mt = 2;
    for (const auto& lit : m) {
      int v = asg.at(lit.name);
      if (lit.neg) v = 2 - v;
      if (v < mt) mt = v;
    }
    if (mt > jn) jn = mt;
  }
  return jn;
}

// Face assignment: each name is 0, 1, or indeterminate (2); the atom
// (i=e) holds only under the definite value e.
using FcAsg = std::map<ctt::Name, int>;

inline bool evalFace(const ctt::Face& f, const FcAsg& asg) {
  for (const auto& c : f.conjs()) {
    bool all = true;
    for (const auto& [n, e] : c)
      if (asg.at(n) != (e ? 1 : 0)) {
        all = false;
        break;
      }
    if (all) return true;
  }
  return false;
}

template <typename Fn>
void forEachAssignment(int radix, Fn fn) {
  const auto ns = baseNames();
  int total = 1;
  for (std::size_t t = 0; t < ns.size(); ++t) total *= radix;
  for (int a = 0; a < total; ++a) {
    std::map<ctt::Name, int> asg;
    int x = a;
    for (const auto& n : ns) {
      asg[n] = x % radix;
      x /= radix;
    }
    fn(asg);
  }
}

// Small well-scoped terms for the substitution fuzz; v counts bound
// term variables in scope.
inline ctt::Term randomTerm(Rng& rng, int depth, int v = 0) {
  using namespace ctt;
  std::uniform_int_distribution<int> pick(0, depth > 0 ? 10 : 3);
  auto var = [&](int bound) {
    std::uniform_int_distribution<int> d(0, bound - 1);
    return mkVar(Name{"x" + std::to_string(d(rng))});
  };
  switch (pick(rng)) {
    case 0: return mkZero();
    case 1: return mkBase();
    case 2: return mkLoop(randomInterval(rng, 2));
    case 3: return v > 0 ? var(v) : mkZero();
    case 4: return mkSuc(randomTerm(rng, depth - 1, v));
    case 5: {
      Name x{"x" + std::to_string(v)};
      return mkLam(x, mkNat(), randomTerm(rng, depth - 1, v + 1));
    }
    case 6:
      return mkApp(randomTerm(rng, depth - 1, v),
                   randomTerm(rng, depth - 1, v));
    case 7: {
      Name i{"p" + std::to_string(depth)};
      return mkPLam(i, randomTerm(rng, depth - 1, v));
    }
    case 8:
      return mkPApp(randomTerm(rng, depth - 1, v),
                    randomInterval(rng, 2));
    case 9:
      return mkPair(randomTerm(rng, depth - 1, v),
                    randomTerm(rng, depth - 1, v));
    default: {
      Name i{"q" + std::to_string(depth)};
      std::vector<Branch> sys;
      sys.push_back({randomFace(rng, 2), randomTerm(rng, depth - 1, v)});
      return mkComp(i, mkNat(), std::move(sys),
                    randomTerm(rng, depth - 1, v));
    }
  }
}

inline std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace gen

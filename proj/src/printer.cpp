#include "ctt/printer.hpp"

#include <sstream>

namespace ctt {

namespace {

// Levels: 0 binders/arrows, 1 sigma product, 2 path application,
// 3 application, 4 atoms.
std::string tm(const Term& t, int lvl);

std::string ivAtom(const Interval& r);

std::string wrap(bool need, const std::string& s) {
  return need ? "(" + s + ")" : s;
}

std::string ivPr(const Interval& r, int lvl) {
  if (r.meets().empty()) return "0";
  if (r == Interval::one()) return "1";
  std::ostringstream os;
  bool firstMeet = true;
  for (const auto& m : r.meets()) {
    if (!firstMeet) os << " \\/ ";
    firstMeet = false;
    bool firstLit = true;
    std::ostringstream ms;
    for (const auto& l : m) {
      if (!firstLit) ms << " /\\ ";
      firstLit = false;
      ms << (l.neg ? "~" : "") << show(l.name);
    }
    os << (m.size() > 1 && r.meets().size() > 1 ? "(" + ms.str() + ")"
                                                : ms.str());
  }
  bool need = (lvl >= 1 && r.meets().size() > 1) ||
              (lvl >= 2 && r.meets().begin()->size() > 1);
  return wrap(need, os.str());
}

std::string ivAtom(const Interval& r) { return ivPr(r, 2); }

std::string facePr(const Face& phi) {
  if (phi.conjs().empty()) return "0F";
  if (phi == Face::one()) return "1F";
  std::ostringstream os;
  bool firstConj = true;
  for (const auto& c : phi.conjs()) {
    if (!firstConj) os << " \\/ ";
    firstConj = false;
    bool firstAtom = true;
    std::ostringstream cs;
    for (const auto& [n, e] : c) {
      if (!firstAtom) cs << " /\\ ";
      firstAtom = false;
      cs << "(" << show(n) << "=" << (e ? "1" : "0") << ")";
    }
    os << (c.size() > 1 && phi.conjs().size() > 1 ? "(" + cs.str() + ")"
                                                  : cs.str());
  }
  return os.str();
}

std::string sysPr(const std::vector<Branch>& sys) {
  std::ostringstream os;
  os << "[";
  bool first = true;
  for (const auto& b : sys) {
    if (!first) os << ", ";
    first = false;
    os << facePr(b.face) << " -> " << tm(b.tm, 0);
  }
  os << "]";
  return os.str();
}

std::string gsysPr(const std::vector<GlueBranch>& gsys) {
  std::ostringstream os;
  os << "[";
  bool first = true;
  for (const auto& g : gsys) {
    if (!first) os << ", ";
    first = false;
    os << facePr(g.face) << " -> (" << tm(g.ty, 0) << ", " << tm(g.eqv, 0)
       << ")";
  }
  os << "]";
  return os.str();
}

std::string motivePr(const Name& x, const Term& c) {
  return "(" + show(x) + ". " + tm(c, 0) + ")";
}

std::string tm(const Term& t, int lvl) {
  switch (t->tk) {
    case Tk::Var:
      return show(t->var);
    case Tk::Nat:
      return "N";
    case Tk::Zero:
      return "0";
    case Tk::Univ:
      return "U";
    case Tk::S1:
      return "S1";
    case Tk::Base:
      return "base";
    case Tk::Suc:
      return wrap(lvl > 3, "suc " + tm(t->sub[0], 4));
    case Tk::Natrec:
      return wrap(lvl > 3, "natrec " + motivePr(t->var, t->sub[0]) + " " +
                               tm(t->sub[1], 4) + " " + tm(t->sub[2], 4) + " " +
                               tm(t->sub[3], 4));
    case Tk::Pi: {
      std::string s = "(" + show(t->var) + ":" + tm(t->sub[0], 0) + ") -> " +
                      tm(t->sub[1], 0);
      return wrap(lvl > 0, s);
    }
    case Tk::Lam:
      return wrap(lvl > 0, "\\(" + show(t->var) + ":" + tm(t->sub[0], 0) +
                               ") -> " + tm(t->sub[1], 0));
    case Tk::App:
      return wrap(lvl > 3, tm(t->sub[0], 3) + " " + tm(t->sub[1], 4));
    case Tk::Sigma:
      return wrap(lvl > 0, "(" + show(t->var) + ":" + tm(t->sub[0], 0) +
                               ") * " + tm(t->sub[1], 1));
    case Tk::Pair:
      return "(" + tm(t->sub[0], 0) + ", " + tm(t->sub[1], 0) + ")";
    case Tk::Fst:
      return tm(t->sub[0], 4) + ".1";
    case Tk::Snd:
      return tm(t->sub[0], 4) + ".2";
    case Tk::Path: {
      std::string head = freeNames(t->sub[0]).count(t->dir)
                             ? "Path^" + show(t->dir)
                             : "Path";
      // the non-dependent reading drops the vacuous binder
      return wrap(lvl > 3, head + " " + tm(t->sub[0], 4) + " " +
                               tm(t->sub[1], 4) + " " + tm(t->sub[2], 4));
    }
    case Tk::PLam:
      return wrap(lvl > 0, "<" + show(t->dir) + "> " + tm(t->sub[0], 0));
    case Tk::PApp:
      return wrap(lvl > 2, tm(t->sub[0], 2) + " @ " + ivAtom(t->iv));
    case Tk::SysT:
    case Tk::SysE:
      return sysPr(t->sys);
    case Tk::GlueT:
      return wrap(lvl > 3, "Glue " + gsysPr(t->gsys) + " " + tm(t->sub[0], 4));
    case Tk::Glue:
      return wrap(lvl > 3, "glue " + sysPr(t->sys) + " " + tm(t->sub[0], 4));
    case Tk::Unglue:
      return wrap(lvl > 3, "unglue " + sysPr(t->sys) + " " + tm(t->sub[0], 4));
    case Tk::Comp:
      return wrap(lvl > 3, "comp^" + show(t->dir) + " " + tm(t->sub[0], 4) +
                               " " + sysPr(t->sys) + " " + tm(t->sub[1], 4));
    case Tk::Loop:
      return wrap(lvl > 3, "loop " + ivAtom(t->iv));
    case Tk::S1Elim:
      return wrap(lvl > 3, "S1elim " + motivePr(t->var, t->sub[0]) + " " +
                               tm(t->sub[1], 4) + " " + tm(t->sub[2], 4) + " " +
                               tm(t->sub[3], 4));
    case Tk::Trunc:
      return wrap(lvl > 3, "inh " + tm(t->sub[0], 4));
    case Tk::Inc:
      return wrap(lvl > 3, "inc " + tm(t->sub[0], 4));
    case Tk::Squash:
      return wrap(lvl > 3, "squash " + tm(t->sub[0], 4) + " " +
                               tm(t->sub[1], 4) + " " + ivAtom(t->iv));
    case Tk::Hcomp:
      return wrap(lvl > 3, "hcomp^" + show(t->dir) + " " + tm(t->sub[0], 4) +
                               " " + sysPr(t->sys) + " " + tm(t->sub[1], 4));
    case Tk::Fwd:
      return wrap(lvl > 3, "fwd^" + show(t->dir) + " " + tm(t->sub[0], 4) +
                               " " + ivAtom(t->iv) + " " + tm(t->sub[1], 4));
    case Tk::TruncElim:
      return wrap(lvl > 3, "inhelim " + motivePr(t->var, t->sub[0]) + " " +
                               tm(t->sub[1], 4) + " " + tm(t->sub[2], 4) + " " +
                               tm(t->sub[3], 4));
  }
  return "?";
}

}  // namespace

std::string pretty(const Term& t) { return tm(t, 0); }

std::string pretty(const Interval& r) { return ivPr(r, 0); }

std::string pretty(const Face& phi) { return facePr(phi); }

}  // namespace ctt

#include "ctt/parser.hpp"

#include <cctype>
#include <map>
#include <optional>

#include "ctt/derived.hpp"
#include "ctt/errors.hpp"

namespace ctt {

namespace {

enum class TokK {
  Ident,
  Number,
  LParen,
  RParen,
  LBrack,
  RBrack,
  Comma,
  Dot,
  Arrow,
  Star,
  At,
  Lt,
  Gt,
  Backslash,
  Colon,
  Eq,
  Caret,
  Tilde,
  And,   // conjunction
  Or,    // disjunction
  Leq,   // <= (face queries)
  Eof,
};

struct Tok {
  TokK k;
  std::string text;
  int line;
  int col;
};

std::vector<Tok> lex(const std::string& s) {
  std::vector<Tok> out;
  int line = 1, col = 1;
  std::size_t i = 0;
  auto push = [&](TokK k, std::string t) {
    out.push_back({k, std::move(t), line, col});
  };
  while (i < s.size()) {
    char c = s[i];
    if (c == '\n') {
      ++line;
      col = 1;
      ++i;
      continue;
    }
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++col;
      ++i;
      continue;
    }
    if (c == '-' && i + 1 < s.size() && s[i + 1] == '-') {
      while (i < s.size() && s[i] != '\n') ++i;
      continue;
    }
    auto two = [&](char a, char b) {
      return c == a && i + 1 < s.size() && s[i + 1] == b;
    };
    if (two('-', '>')) {
      push(TokK::Arrow, "->");
      i += 2;
      col += 2;
      continue;
    }
    if (two('/', '\\')) {
      push(TokK::And, "/\\");
      i += 2;
      col += 2;
      continue;
    }
    if (two('\\', '/')) {
      push(TokK::Or, "\\/");
      i += 2;
      col += 2;
      continue;
    }
    if (two('<', '=')) {
      push(TokK::Leq, "<=");
      i += 2;
      col += 2;
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j])))
        ++j;
      // 0F / 1F face constants lex as one identifier-like token
      if (j < s.size() && s[j] == 'F') {
        push(TokK::Ident, s.substr(i, j - i + 1));
        col += static_cast<int>(j - i + 1);
        i = j + 1;
        continue;
      }
      push(TokK::Number, s.substr(i, j - i));
      col += static_cast<int>(j - i);
      i = j;
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i;
      while (j < s.size() &&
             (std::isalnum(static_cast<unsigned char>(s[j])) ||
              s[j] == '_' || s[j] == '\''))
        ++j;
      push(TokK::Ident, s.substr(i, j - i));
      col += static_cast<int>(j - i);
      i = j;
      continue;
    }
    TokK k;
    switch (c) {
      case '(': k = TokK::LParen; break;
      case ')': k = TokK::RParen; break;
      case '[': k = TokK::LBrack; break;
      case ']': k = TokK::RBrack; break;
      case ',': k = TokK::Comma; break;
      case '.': k = TokK::Dot; break;
      case '*': k = TokK::Star; break;
      case '@': k = TokK::At; break;
      case '<': k = TokK::Lt; break;
      case '>': k = TokK::Gt; break;
      case '\\': k = TokK::Backslash; break;
      case ':': k = TokK::Colon; break;
      case '=': k = TokK::Eq; break;
      case '^': k = TokK::Caret; break;
      case '~': k = TokK::Tilde; break;
      default:
        throw ParseError(line, col, std::string("unexpected character '") +
                                        c + "'");
    }
    push(k, std::string(1, c));
    ++i;
    ++col;
  }
  out.push_back({TokK::Eof, "", line, col});
  return out;
}

const char* kKeywords[] = {"N",     "U",      "S1",     "base",  "loop",
                           "S1elim", "suc",   "Z",      "natrec", "comp",
                           "fill",  "hcomp",  "fwd",    "Glue",  "glue",
                           "unglue", "inh",   "inc",    "squash", "inhelim",
                           "names", "Path",   "forall"};

bool isKeyword(const std::string& s) {
  for (const char* k : kKeywords)
    if (s == k) return true;
  return false;
}

struct Scope {
  std::vector<std::pair<std::string, Name>> ivs;   // interval names
  std::vector<std::pair<std::string, Name>> vars;  // term variables
  std::map<std::string, Term> defs;                // transparent bodies
};

class Parser {
 public:
  Parser(std::string text) : toks_(lex(text)) {}

  SourceFile file() {
    SourceFile out;
    if (at(TokK::Ident) && cur().text == "names") {
      next();
      while (at(TokK::Ident) && !isKeyword(cur().text) &&
             !(peekIs(1, TokK::Colon))) {
        Name n{cur().text};
        out.names.push_back(n);
        sc_.ivs.emplace_back(cur().text, n);
        next();
      }
    }
    while (!at(TokK::Eof)) {
      Tok nameTok = expect(TokK::Ident, "definition name");
      expect(TokK::Colon, "':' after definition name");
      Term ty = term();
      expect(TokK::Eq, "'=' after definition type");
      Term body = term();
      out.defs.push_back({nameTok.text, ty, body});
      sc_.defs[nameTok.text] = body;
    }
    return out;
  }

  Term termOnly(const NameCtx& names) {
    for (const auto& n : names) sc_.ivs.emplace_back(show(n), n);
    Term t = term();
    expect(TokK::Eof, "end of input");
    return t;
  }

  Face faceOnly() {
    Face f = face();
    expect(TokK::Eof, "end of input");
    return f;
  }

 private:
  std::vector<Tok> toks_;
  std::size_t pos_ = 0;
  Scope sc_;

  const Tok& cur() const { return toks_[pos_]; }
  bool at(TokK k) const { return cur().k == k; }
  bool peekIs(std::size_t d, TokK k) const {
    return pos_ + d < toks_.size() && toks_[pos_ + d].k == k;
  }
  const Tok& next() { return toks_[pos_++]; }
  [[noreturn]] void err(const std::string& msg) const {
    throw ParseError(cur().line, cur().col, msg);
  }
  Tok expect(TokK k, const char* what) {
    if (!at(k)) err(std::string("expected ") + what);
    return next();
  }
  bool eat(TokK k) {
    if (!at(k)) return false;
    next();
    return true;
  }
  bool atIdent(const char* s) const {
    return at(TokK::Ident) && cur().text == s;
  }
  bool eatIdent(const char* s) {
    if (!atIdent(s)) return false;
    next();
    return true;
  }

  Name lookupIv(const std::string& s) {
    for (auto it = sc_.ivs.rbegin(); it != sc_.ivs.rend(); ++it)
      if (it->first == s) return it->second;
    return Name{s};
  }

  // ---- intervals ----

  Interval ivAtom() {
    if (at(TokK::Number)) {
      const std::string& n = next().text;
      if (n == "0") return Interval::zero();
      if (n == "1") return Interval::one();
      err("interval endpoint must be 0 or 1");
    }
    if (eat(TokK::Tilde)) return ivRev(ivAtom());
    if (eat(TokK::LParen)) {
      Interval r = ivExpr();
      expect(TokK::RParen, "')'");
      return r;
    }
    if (at(TokK::Ident) && !isKeyword(cur().text))
      return Interval::var(lookupIv(next().text));
    err("expected an interval");
  }

  Interval ivExpr() {
    Interval r = ivMeetExpr();
    while (eat(TokK::Or)) r = ivJoin(r, ivMeetExpr());
    return r;
  }

  Interval ivMeetExpr() {
    Interval r = ivAtom();
    while (eat(TokK::And)) r = ivMeet(r, ivAtom());
    return r;
  }

  // ---- faces ----

  Face faceAtom() {
    if (eatIdent("0F")) return Face::zero();
    if (eatIdent("1F")) return Face::one();
    if (eat(TokK::LParen)) {
      if (at(TokK::Ident) && peekIs(1, TokK::Eq)) {
        Name n = lookupIv(next().text);
        next();  // '='
        Tok e = expect(TokK::Number, "0 or 1 in a face atom");
        if (e.text != "0" && e.text != "1") err("face endpoint must be 0 or 1");
        expect(TokK::RParen, "')'");
        return Face::atom(n, e.text == "1");
      }
      Face f = face();
      expect(TokK::RParen, "')'");
      return f;
    }
    err("expected a face");
  }

  Face faceMeetExpr() {
    Face f = faceAtom();
    while (eat(TokK::And)) f = faceMeet(f, faceAtom());
    return f;
  }

  Face face() {
    Face f = faceMeetExpr();
    while (eat(TokK::Or)) f = faceJoin(f, faceMeetExpr());
    return f;
  }

  // ---- systems ----

  std::vector<Branch> system() {
    expect(TokK::LBrack, "'['");
    std::vector<Branch> out;
    if (!at(TokK::RBrack)) {
      do {
        Face f = face();
        expect(TokK::Arrow, "'->' in a system entry");
        out.push_back({f, term()});
      } while (eat(TokK::Comma));
    }
    expect(TokK::RBrack, "']'");
    return out;
  }

  std::vector<GlueBranch> glueSystem() {
    expect(TokK::LBrack, "'['");
    std::vector<GlueBranch> out;
    if (!at(TokK::RBrack)) {
      do {
        Face f = face();
        expect(TokK::Arrow, "'->' in a Glue entry");
        expect(TokK::LParen, "'(' before a Glue pair");
        Term ty = term();
        expect(TokK::Comma, "',' in a Glue pair");
        Term eqv = term();
        expect(TokK::RParen, "')' after a Glue pair");
        out.push_back({f, ty, eqv});
      } while (eat(TokK::Comma));
    }
    expect(TokK::RBrack, "']'");
    return out;
  }

  // (x. C) motive
  std::pair<Name, Term> motive() {
    expect(TokK::LParen, "'(' before a motive");
    Tok x = expect(TokK::Ident, "motive variable");
    expect(TokK::Dot, "'.' in a motive");
    Name n = fresh(x.text);
    sc_.vars.emplace_back(x.text, n);
    Term c = term();
    sc_.vars.pop_back();
    expect(TokK::RParen, "')' after a motive");
    return {n, c};
  }

  // ---- terms ----

  Term term() {
    if (eat(TokK::Backslash)) {
      expect(TokK::LParen, "'(' after '\\'");
      Tok x = expect(TokK::Ident, "binder variable");
      expect(TokK::Colon, "':' in a binder");
      Term dom = term();
      expect(TokK::RParen, "')'");
      expect(TokK::Arrow, "'->'");
      Name n = fresh(x.text);
      sc_.vars.emplace_back(x.text, n);
      Term body = term();
      sc_.vars.pop_back();
      return mkLam(n, dom, body);
    }
    if (at(TokK::Lt)) {
      next();
      Tok i = expect(TokK::Ident, "path binder");
      expect(TokK::Gt, "'>'");
      Name n = fresh(i.text);
      sc_.ivs.emplace_back(i.text, n);
      Term body = term();
      sc_.ivs.pop_back();
      return mkPLam(n, body);
    }
    if (at(TokK::LParen) && peekIs(1, TokK::Ident) &&
        peekIs(2, TokK::Colon)) {
      next();
      Tok x = next();
      next();  // ':'
      Term dom = term();
      expect(TokK::RParen, "')'");
      Name n = fresh(x.text);
      sc_.vars.emplace_back(x.text, n);
      Term out;
      if (eat(TokK::Arrow)) {
        out = mkPi(n, dom, term());
      } else if (eat(TokK::Star)) {
        out = mkSigma(n, dom, sigmaExpr());
      } else {
        err("expected '->' or '*' after a binder");
      }
      sc_.vars.pop_back();
      return out;
    }
    Term e = sigmaExpr();
    if (eat(TokK::Arrow)) return mkArrow(e, term());
    return e;
  }

  Term sigmaExpr() {
    Term e = pathAppExpr();
    if (eat(TokK::Star)) return mkSigma(fresh("_"), e, sigmaExpr());
    return e;
  }

  Term pathAppExpr() {
    Term e = appExpr();
    while (eat(TokK::At)) e = mkPApp(e, ivAtom());
    return e;
  }

  Name dirBinder() {
    expect(TokK::Caret, "'^' before a direction");
    Tok i = expect(TokK::Ident, "direction name");
    return fresh(i.text);
  }

  Term appExpr() {
    std::optional<Term> kh = keywordHead();
    Term e = kh ? *kh : atom();
    while (startsAtom()) e = mkApp(e, atom());
    return e;
  }

  // Parses one keyword-headed form (without a trailing application
  // spine), or returns nullopt leaving the input untouched.
  std::optional<Term> keywordHead() {
    if (at(TokK::Ident)) {
      const std::string& kw = cur().text;
      if (kw == "suc") {
        next();
        return mkSuc(atom());
      }
      if (kw == "natrec") {
        next();
        auto [x, c] = motive();
        Term n = atom(), z = atom(), s = atom();
        return mkNatrec(x, c, n, z, s);
      }
      if (kw == "loop") {
        next();
        return mkLoop(ivAtom());
      }
      if (kw == "S1elim") {
        next();
        auto [x, c] = motive();
        Term t = atom(), b = atom(), l = atom();
        return mkS1Elim(x, c, t, b, l);
      }
      if (kw == "inh") {
        next();
        return mkTrunc(atom());
      }
      if (kw == "inc") {
        next();
        return mkInc(atom());
      }
      if (kw == "squash") {
        next();
        Term u = atom(), v = atom();
        return mkSquash(u, v, ivAtom());
      }
      if (kw == "inhelim") {
        next();
        auto [z, c] = motive();
        Term w = atom(), t = atom(), p = atom();
        return mkTruncElim(z, c, w, t, p);
      }
      if (kw == "Path") {
        next();
        // optional ^i for a dependent line
        if (at(TokK::Caret)) {
          Name i = dirBinder();
          sc_.ivs.emplace_back(i.base, i);
          Term line = atom();
          sc_.ivs.pop_back();
          Term a0 = atom(), a1 = atom();
          return mkPath(i, line, a0, a1);
        }
        Term line = atom();
        Term a0 = atom(), a1 = atom();
        return mkPathND(line, a0, a1);
      }
      if (kw == "comp") {
        next();
        Name i = dirBinder();
        sc_.ivs.emplace_back(i.base, i);
        Term line = atom();
        std::vector<Branch> sys = system();
        sc_.ivs.pop_back();
        Term u0 = atom();
        return mkComp(i, line, std::move(sys), u0);
      }
      if (kw == "fill") {
        // fill's direction is a name already in scope: the built term
        // is the whole line in it
        next();
        expect(TokK::Caret, "'^' before a direction");
        Name i = lookupIv(expect(TokK::Ident, "direction name").text);
        Term line = atom();
        std::vector<Branch> sys = system();
        Term u0 = atom();
        return fill(i, line, sys, u0);
      }
      if (kw == "hcomp") {
        next();
        Name i = dirBinder();
        Term ty = atom();
        sc_.ivs.emplace_back(i.base, i);
        std::vector<Branch> sys = system();
        sc_.ivs.pop_back();
        Term u0 = atom();
        return mkHcomp(ty, i, std::move(sys), u0);
      }
      if (kw == "fwd") {
        next();
        Name i = dirBinder();
        sc_.ivs.emplace_back(i.base, i);
        Term line = atom();
        sc_.ivs.pop_back();
        Interval r = ivAtom();
        Term u = atom();
        return mkFwd(i, line, r, u);
      }
      if (kw == "Glue") {
        next();
        std::vector<GlueBranch> gs = glueSystem();
        return mkGlueT(std::move(gs), atom());
      }
      if (kw == "glue") {
        next();
        std::vector<Branch> sys = system();
        return mkGlue(std::move(sys), atom());
      }
      if (kw == "unglue") {
        next();
        std::vector<Branch> sys = system();
        return mkUnglue(std::move(sys), atom());
      }
    }
    return std::nullopt;
  }

  bool startsAtom() const {
    switch (cur().k) {
      case TokK::LParen:
      case TokK::Number:
        return true;
      case TokK::Ident:
        // an identifier followed by ':' opens the next definition
        if (peekIs(1, TokK::Colon)) return false;
        return !isKeyword(cur().text) || cur().text == "N" ||
               cur().text == "U" || cur().text == "S1" ||
               cur().text == "base" || cur().text == "Z";
      default:
        return false;
    }
  }

  Term atom() {
    Term e = atomNoProj();
    while (at(TokK::Dot)) {
      next();
      Tok n = expect(TokK::Number, "1 or 2 after '.'");
      if (n.text == "1")
        e = mkFst(e);
      else if (n.text == "2")
        e = mkSnd(e);
      else
        err("projection must be .1 or .2");
    }
    return e;
  }

  Term atomNoProj() {
    if (at(TokK::LBrack)) return mkSysE(system());
    if (at(TokK::Number)) {
      if (cur().text == "0") {
        next();
        return mkZero();
      }
      err("numeric literals other than 0 are not terms; use suc");
    }
    if (at(TokK::LParen)) {
      // a parenthesized binder type is handled by term()
      if (peekIs(1, TokK::Ident) && peekIs(2, TokK::Colon)) return term();
      next();
      Term e = term();
      if (eat(TokK::Comma)) {
        Term v = term();
        expect(TokK::RParen, "')'");
        return mkPair(e, v);
      }
      expect(TokK::RParen, "')'");
      return e;
    }
    if (at(TokK::Ident)) {
      const std::string& s = cur().text;
      if (s == "N") {
        next();
        return mkNat();
      }
      if (s == "U") {
        next();
        return mkUniv();
      }
      if (s == "S1") {
        next();
        return mkS1();
      }
      if (s == "base") {
        next();
        return mkBase();
      }
      if (s == "Z") {
        next();
        return mkZero();
      }
      if (isKeyword(s)) {
        // keyword form used as an atom: no trailing application spine
        std::optional<Term> kh = keywordHead();
        if (!kh) err("unexpected keyword " + s);
        return *kh;
      }
      next();
      for (auto it = sc_.vars.rbegin(); it != sc_.vars.rend(); ++it)
        if (it->first == s) return mkVar(it->second);
      auto d = sc_.defs.find(s);
      if (d != sc_.defs.end()) return d->second;
      return mkVar(Name{s});
    }
    err("expected a term");
  }
};

}  // namespace

SourceFile parseFile(const std::string& text) {
  return Parser(text).file();
}

Term parseTerm(const std::string& text, const NameCtx& names) {
  return Parser(text).termOnly(names);
}

Face parseFace(const std::string& text) { return Parser(text).faceOnly(); }

}  // namespace ctt

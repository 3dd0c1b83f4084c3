#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "ctt/checker.hpp"
#include "ctt/errors.hpp"
#include "ctt/evaluator.hpp"
#include "ctt/parser.hpp"
#include "ctt/printer.hpp"
#include "ctt/reduction.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitRejected = 2;
constexpr int kExitKernel = 3;

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

const ctt::Definition* findDef(const ctt::SourceFile& sf,
                               const std::string& name) {
  for (const auto& d : sf.defs)
    if (d.name == name) return &d;
  return nullptr;
}

int checkDef(const ctt::SourceFile& sf, const ctt::Definition& def,
             long fuel) {
  ctt::Ctx ctx;
  ctx.names = sf.names;
  long f = fuel;
  try {
    ctt::check(ctx, def.type, ctt::mkUniv(), f);
    ctt::check(ctx, def.body, def.type, f);
    return kExitOk;
  } catch (const ctt::CheckError& e) {
    std::cout << def.name << ": REJECTED " << e.what() << "\n";
    return kExitRejected;
  }
}

int cmdEval(const std::string& file, const std::string& defname, long fuel,
            bool trace, std::size_t audit, std::uint64_t seed,
            bool noCheck) {
  ctt::SourceFile sf = ctt::parseFile(slurp(file));
  const ctt::Definition* def = findDef(sf, defname);
  if (!def) {
    std::cerr << "no definition named " << defname << "\n";
    return kExitUsage;
  }
  if (!noCheck) {
    int rc = checkDef(sf, *def, fuel);
    if (rc != kExitOk) return rc;
  }
  try {
    long f = fuel;
    ctt::Term ty = ctt::whnf(sf.names, def->type, f);
    if (ty->tk == ctt::Tk::Nat) {
      if (trace) {
        ctt::TraceReport tr = ctt::traceEval(sf.names, def->body, fuel);
        for (const auto& e : tr.trace)
          std::cout << "# step " << e.index << " "
                    << ctt::ruleName(e.rule)
                    << (e.path.empty() ? "" : " at " + e.path) << "\n";
      }
      std::size_t steps = 0;
      unsigned long long n = ctt::evalNat(sf.names, def->body, fuel, &steps);
      std::cout << defname << " = "
                << ctt::pretty(ctt::mkNumeral(n)) << " (" << n << ")\n";
      if (audit > 0) {
        ctt::AuditReport rep =
            ctt::coherenceAudit(sf.names, def->body, audit, seed, fuel);
        std::cout << "audit: " << rep.samples << " samples, "
                  << rep.violations.size() << " violations\n";
        for (const auto& v : rep.violations)
          std::cout << "  violation [" << v.subst << "] expected "
                    << v.expected << " got " << v.got << "\n";
        if (!rep.violations.empty()) return kExitKernel;
      }
      return kExitOk;
    }
    if (ty->tk == ctt::Tk::Trunc) {
      ctt::Term w = ctt::extractWitness(sf.names, def->body, fuel);
      long f3 = fuel;
      ctt::Term inner = ctt::whnf(sf.names, ty->sub[0], f3);
      if (inner->tk == ctt::Tk::Nat) {
        unsigned long long n = ctt::evalNat(sf.names, w, fuel);
        std::cout << defname << " = " << ctt::pretty(ctt::mkNumeral(n))
                  << " (witness " << n << ")\n";
      } else {
        std::cout << defname << " = " << ctt::pretty(w) << " (witness)\n";
      }
      return kExitOk;
    }
    long f2 = fuel;
    ctt::Term v = ctt::whnf(sf.names, def->body, f2);
    std::cout << defname << " = " << ctt::pretty(v) << "\n";
    return kExitOk;
  } catch (const ctt::CheckError& e) {
    std::cout << defname << ": REJECTED " << e.what() << "\n";
    return kExitRejected;
  } catch (const ctt::KernelError& e) {
    std::cerr << "kernel failure: " << e.what() << "\n";
    return kExitKernel;
  }
}

int cmdCheck(const std::string& file, long fuel) {
  ctt::SourceFile sf = ctt::parseFile(slurp(file));
  int rc = kExitOk;
  for (const auto& def : sf.defs) {
    int r = checkDef(sf, def, fuel);
    if (r == kExitOk)
      std::cout << def.name << ": ok\n";
    else
      rc = kExitRejected;
  }
  return rc;
}

int cmdFaces(const std::string& expr) {
  std::istringstream in(expr);
  std::string first;
  in >> first;
  if (first == "forall") {
    std::string name, dot;
    in >> name >> dot;
    std::string rest;
    if (dot != ".") {
      if (name.size() > 1 && name.back() == '.') {
        name.pop_back();
        rest = dot;
      } else if (dot.size() > 1 && dot[0] == '.') {
        rest = dot.substr(1);
      } else {
        std::cerr << "expected: forall i. <face>\n";
        return kExitUsage;
      }
    }
    std::getline(in, dot);
    rest += " " + dot;
    ctt::Face f = ctt::parseFace(rest);
    std::cout << ctt::pretty(ctt::faceForall(ctt::Name{name}, f)) << "\n";
    return kExitOk;
  }
  auto pos = expr.find("<=");
  if (pos != std::string::npos) {
    ctt::Face a = ctt::parseFace(expr.substr(0, pos));
    ctt::Face b = ctt::parseFace(expr.substr(pos + 2));
    std::cout << (ctt::faceLeq(a, b) ? "true" : "false") << "\n";
    return kExitOk;
  }
  std::cout << ctt::pretty(ctt::parseFace(expr)) << "\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"kernel for a cubical type theory over name contexts"};
  app.require_subcommand(1);

  long fuel = ctt::kDefaultFuel;
  bool trace = false;
  std::size_t audit = 0;
  std::uint64_t seed = 1;
  bool noCheck = false;
  std::string file, defname, expr;

  auto* eval = app.add_subcommand("eval", "evaluate a definition");
  eval->add_option("file", file)->required();
  eval->add_option("def", defname)->required();
  eval->add_option("--fuel", fuel, "step budget");
  eval->add_flag("--trace", trace, "print the step log");
  eval->add_option("--audit", audit, "substitution-coherence samples");
  eval->add_option("--seed", seed, "audit RNG seed");
  eval->add_flag("--no-check", noCheck, "skip the type checker");

  auto* check = app.add_subcommand("check", "check every definition");
  check->add_option("file", file)->required();
  check->add_option("--fuel", fuel, "step budget");

  auto* faces = app.add_subcommand("faces", "face lattice queries");
  faces->add_option("expr", expr)->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (eval->parsed())
      return cmdEval(file, defname, fuel, trace, audit, seed, noCheck);
    if (check->parsed()) return cmdCheck(file, fuel);
    if (faces->parsed()) return cmdFaces(expr);
  } catch (const ctt::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ctt::KernelError& e) {
    std::cerr << "kernel failure: " << e.what() << "\n";
    return kExitKernel;
  } catch (const std::exception& e) {
    std::cerr << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

#pragma once

#include <string>
#include <vector>

#include "ctt/subst.hpp"
#include "ctt/syntax.hpp"

namespace ctt {

// `name : Type = term`, with earlier definitions inlined transparently.
struct Definition {
  std::string name;
  Term type;
  Term body;
};

// Optional `names i j k` preamble followed by definitions.
struct SourceFile {
  NameCtx names;
  std::vector<Definition> defs;
};

// Throws ParseError with line/column on bad input.
SourceFile parseFile(const std::string& text);

// Standalone term over the given names (no definitions in scope).
Term parseTerm(const std::string& text, const NameCtx& names);

// Standalone face expression; unknown identifiers become names.
Face parseFace(const std::string& text);

}  // namespace ctt

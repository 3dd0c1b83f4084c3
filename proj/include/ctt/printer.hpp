#pragma once

#include <string>

#include "ctt/syntax.hpp"

namespace ctt {

// Surface syntax; parse(pretty(t)) is alpha-equal to t.
std::string pretty(const Term& t);
std::string pretty(const Interval& r);
std::string pretty(const Face& phi);

}  // namespace ctt

#pragma once

#include <compare>
#include <cstdint>
#include <string>

namespace ctt {

// Interval names and term variables. Source-level names have id == 0;
// fresh() hands out ids from a process-wide atomic counter, so a fresh
// name can never collide with any name already in scope.
struct Name {
  std::string base;
  std::uint64_t id = 0;

  auto operator<=>(const Name&) const = default;
};

Name fresh(const Name& like);
Name fresh(const std::string& base);

// Reset the freshness counter (CLI startup; keeps output reproducible).
void resetFreshCounter();

std::string show(const Name& n);

}  // namespace ctt

#include "ctt/name.hpp"

#include <atomic>

namespace ctt {

namespace {
std::atomic<std::uint64_t> counter{0};
}

Name fresh(const Name& like) { return Name{like.base, ++counter}; }

Name fresh(const std::string& base) { return Name{base, ++counter}; }

void resetFreshCounter() { counter = 0; }

std::string show(const Name& n) {
  if (n.id == 0) return n.base;
  return n.base + "_" + std::to_string(n.id);
}

}  // namespace ctt

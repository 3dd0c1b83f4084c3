#pragma once

#include <stdexcept>
#include <string>

namespace ctt {

struct KernelError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// No rule applies: open term variable or ill-typed/out-of-scope input.
struct StuckError : KernelError {
  using KernelError::KernelError;
};

// Step budget ran out. For checker-accepted naturals this is a kernel
// bug, not a user error.
struct FuelExhausted : KernelError {
  using KernelError::KernelError;
};

struct CheckError : KernelError {
  std::string errClass;
  CheckError(std::string klass, const std::string& msg)
      : KernelError(klass + ": " + msg), errClass(std::move(klass)) {}
};

struct ParseError : KernelError {
  int line;
  int col;
  ParseError(int line_, int col_, const std::string& msg)
      : KernelError(std::to_string(line_) + ":" + std::to_string(col_) +
                    ": " + msg),
        line(line_),
        col(col_) {}
};

}  // namespace ctt

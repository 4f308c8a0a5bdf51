#pragma once

#include <stdexcept>
#include <string>

namespace fitt {

// A deterministic resource cap was hit (minor enumeration, search trees,
// Betti multidegree counts). Callers may retry with a larger budget.
struct BudgetExceeded : std::runtime_error {
  explicit BudgetExceeded(const std::string& what) : std::runtime_error(what) {}
};

struct PreconditionViolated : std::invalid_argument {
  explicit PreconditionViolated(const std::string& what)
      : std::invalid_argument(what) {}
};

// Truncated-series comparison could not certify the tail at the chosen bound.
struct InsufficientBound : std::runtime_error {
  explicit InsufficientBound(const std::string& what)
      : std::runtime_error(what) {}
};

struct ParseError : std::runtime_error {
  int line;
  int column;
  ParseError(const std::string& what, int line_, int column_)
      : std::runtime_error(what + " (line " + std::to_string(line_) +
                           ", column " + std::to_string(column_) + ")"),
        line(line_),
        column(column_) {}
};

}  // namespace fitt

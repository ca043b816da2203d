#pragma once

#include <stdexcept>
#include <string>

#include "tudim/numbers.hpp"

namespace tudim {

// Enumeration ceilings were hit; partial results are reported by the caller.
struct BudgetError : std::runtime_error {
  explicit BudgetError(const std::string& what) : std::runtime_error(what) {}
};

// A condition guaranteed by theory failed at runtime. Deliberately distinct
// from input validation: reaching this means a bug, not a bad input.
struct InternalError : std::logic_error {
  explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

struct UnboundedError : std::runtime_error {
  RatVector direction;
  explicit UnboundedError(RatVector dir)
      : std::runtime_error("polyhedron is unbounded"), direction(std::move(dir)) {}
};

inline void internal_check(bool ok, const char* what) {
  if (!ok) throw InternalError(what);
}

}  // namespace tudim

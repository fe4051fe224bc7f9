#pragma once

#include <stdexcept>
#include <string>

namespace repcensus {

// A family was passed to an operation that does not support it.
class UnsupportedFamilyError : public std::invalid_argument {
 public:
  explicit UnsupportedFamilyError(const std::string& what)
      : std::invalid_argument(what) {}
};

// Input violates a documented type invariant (dominance, strict decrease, ...).
class InvariantViolationError : public std::invalid_argument {
 public:
  explicit InvariantViolationError(const std::string& what)
      : std::invalid_argument(what) {}
};

// Index or value outside the valid range of an operation.
class RangeError : public std::out_of_range {
 public:
  explicit RangeError(const std::string& what) : std::out_of_range(what) {}
};

// A dimension product did not reduce to an integer. This is never a data
// error: it signals an implementation bug and must abort the computation.
class IntegralityFault : public std::logic_error {
 public:
  explicit IntegralityFault(const std::string& what) : std::logic_error(what) {}
};

}  // namespace repcensus

#pragma once

#include <stdexcept>
#include <string>

namespace amzv {

/// Malformed textual input (words, elements, field literals, series).
class ParseError : public std::invalid_argument {
 public:
  explicit ParseError(const std::string& what) : std::invalid_argument(what) {}
};

/// An enumeration would exceed the configured budget.
class BudgetExceeded : public std::runtime_error {
 public:
  explicit BudgetExceeded(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace amzv

#pragma once

#include <stdexcept>

namespace silverstern {

/// A requested computation exceeds a configured cap or enumeration budget.
class BudgetError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An input document failed schema validation; the message names the field.
class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace silverstern

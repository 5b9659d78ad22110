#pragma once

#include <stdexcept>
#include <string>

namespace cyclerad {

/// Malformed or inconsistent input data (files, point sets, cycles).
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An exhaustive reference computation would exceed its configured budget.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace cyclerad

#pragma once

#include <stdexcept>
#include <string>

namespace symbreak {

// Base of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A caller-side precondition does not hold (bad vertex, bad parameter, ...).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

// An enumeration would exceed its configured budget. Never a silent truncation.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

// Exact integer arithmetic left the 64-bit range.
class OverflowError : public Error {
 public:
  using Error::Error;
};

}  // namespace symbreak

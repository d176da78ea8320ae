#ifndef DIFUN_ERRORS_HPP_
#define DIFUN_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace difun {

// Base class so callers can catch everything thrown by this library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Mismatched or out-of-range ground-set sizes.
struct DimensionError : Error {
  using Error::Error;
};

// A relation is not difunctional, or a canonical form is malformed.
struct FormError : Error {
  FormError(const std::string& msg, int witness_x, int witness_y)
      : Error(msg), x(witness_x), y(witness_y) {}
  int x;
  int y;
};

// An argument violates an operation's precondition (bad partition, bad rank).
struct DomainError : Error {
  using Error::Error;
};

// Malformed JSON input.
struct ParseError : Error {
  using Error::Error;
};

// A search or verification run would exceed its configured budget.
struct BudgetError : Error {
  using Error::Error;
};

}  // namespace difun

#endif  // DIFUN_ERRORS_HPP_

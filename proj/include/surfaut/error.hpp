// surfaut - group actions on compact Riemann surfaces of genus g with 4g-4
// automorphisms.
//
// Error hierarchy shared by every module.  The CLI maps each kind onto a
// distinct exit code.

#pragma once

#include <stdexcept>
#include <string>

namespace surfaut {

  /// Base class of every error raised by the library.
  class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  /// A caller-supplied parameter violates an operation's precondition
  /// (congruence, primality, range, malformed spec string).
  class InvalidArgument : public Error {
   public:
    using Error::Error;
  };

  /// An exhaustive search would exceed its configured work budget.
  class BudgetExceeded : public Error {
   public:
    using Error::Error;
  };

  /// A computed object failed a mathematical consistency check.  Seeing one
  /// of these means a bug, not bad input.
  class InvariantViolation : public Error {
   public:
    using Error::Error;
  };

  namespace detail {
    [[noreturn]] inline void fail_invalid(std::string const& msg) {
      throw InvalidArgument(msg);
    }
    [[noreturn]] inline void fail_invariant(std::string const& msg) {
      throw InvariantViolation(msg);
    }
  }  // namespace detail

}  // namespace surfaut

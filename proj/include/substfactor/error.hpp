#pragma once

#include <stdexcept>
#include <string>

namespace substfactor {

//! Malformed input: parse failures, unknown letters, out-of-range arguments.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

//! An operation was called on a substitution that violates its precondition
//! (not primitive, not aperiodic, nontrivial height, ...).
class PreconditionError : public InputError {
 public:
  using InputError::InputError;
};

//! A configured budget (semigroup size, degree, overflow guard) was exceeded.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

//! An internal consistency check failed. Always a bug.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

#define SUBSTFACTOR_CHECK(cond, msg)                                     \
  do {                                                                   \
    if (!(cond)) {                                                       \
      throw ::substfactor::InternalError(std::string(__func__) + ": " + \
                                         (msg));                         \
    }                                                                    \
  } while (false)

}  // namespace substfactor

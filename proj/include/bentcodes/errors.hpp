#ifndef BENTCODES_ERRORS_HPP
#define BENTCODES_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace bentcodes {

// Bad user input: non-prime p, malformed element syntax, out-of-range parameters.
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Field too large for exhaustive enumeration without an explicit override.
class GuardExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Operands drawn from two different fields.
class FieldMismatch : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class NotQuadratic : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A family specification whose validity predicate fails. The message names
// the violated condition.
class InvalidFamily : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A computed quantity contradicts a closed-form result that must hold for the
// input (e.g. a Bent form whose zero count fits neither sign).
class TheoryViolation : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace bentcodes

#endif  // BENTCODES_ERRORS_HPP

#pragma once

#include <stdexcept>
#include <string>

namespace schubert {

// Bad user input: malformed permutation, shape, flag values.
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Well-formed input that violates an operation's precondition.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Requested truncation too small to represent the answer faithfully.
class FidelityError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Case outside what the formulas cover.
class UnsupportedError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A broken internal invariant, e.g. a division that should be exact.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace schubert

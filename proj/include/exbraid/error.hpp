#pragma once

#include <stdexcept>
#include <string>

namespace exbraid {

// Base for every error the library raises on purpose.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DivisionByZero : public Error {
 public:
  using Error::Error;
};

// A documented precondition of an operation does not hold.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// A weight system or tensor product would exceed the configured size bound.
class SizeBoundExceeded : public Error {
 public:
  using Error::Error;
};

// Internal consistency check failed, e.g. a truncated multiplicity went
// negative or two equivalent definitions disagreed. Never clamped or ignored.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace exbraid

#pragma once

#include <stdexcept>
#include <string>

namespace latpoly {

// Base of every error the library reports. Each subclass maps to a
// distinct CLI exit status (see tools/latpoly.cpp).
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Intermediate result does not fit the exact integer type.
class OverflowError : public Error {
 public:
  using Error::Error;
};

// A documented precondition of an operation does not hold.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// Operation needs a 2-dimensional polygon (or non-coplanar tetrahedron).
class DegenerateError : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

// Raised when a proven invariant fails at runtime. Always a bug.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace latpoly

#pragma once

#include <stdexcept>
#include <string>

namespace torikit {

// Base of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Operands live in lattices of different rank.
class DimensionError : public Error {
 public:
  using Error::Error;
};

// A mathematical precondition of an operation does not hold
// (e.g. a non-strongly-convex cone, a torus fan, a non-extremal ray).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// An invariant that the mathematics guarantees was found violated.
class IntegrityError : public Error {
 public:
  using Error::Error;
};

// Cones that do not assemble into a fan.
class FanError : public Error {
 public:
  using Error::Error;
};

// Bad user-supplied argument (non-prime p, radius < 1, ...).
class InputError : public Error {
 public:
  using Error::Error;
};

class NilpotencyCapExceeded : public Error {
 public:
  using Error::Error;
};

// Malformed fan document text.
class ParseError : public Error {
 public:
  using Error::Error;
};

// Well-formed document whose contents are inconsistent.
class ValidationError : public Error {
 public:
  using Error::Error;
};

}  // namespace torikit

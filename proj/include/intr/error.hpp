#pragma once

#include <stdexcept>
#include <string>

namespace intr {

// Base class for every error raised by the library. Callers that only care
// about "the operation was rejected" can catch this one type.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Operands that live in different value groups (e.g. Q(sqrt2) vs Q(sqrt3)).
class DescriptorMismatch : public Error {
 public:
  using Error::Error;
};

// A documented precondition of an operation does not hold.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// Malformed textual input (monoid specs, element strings, group descriptors).
class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace intr

#pragma once

#include <stdexcept>
#include <string>

namespace donaldson {

/// Base for every domain error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Classes or series taken from different lattices.
class LatticeMismatch : public Error {
 public:
  using Error::Error;
};

/// An integrality or parity condition failed (non-characteristic class,
/// half-integral exponent, d0 not an integer, ...).
class ParityError : public Error {
 public:
  using Error::Error;
};

/// A precondition on the inputs of an operation does not hold.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// Reference data does not determine the requested quantity.
class InsufficientData : public Error {
 public:
  using Error::Error;
};

/// Exponential-polynomial division left a non-zero remainder.
class InexactDivision : public Error {
 public:
  using Error::Error;
};

/// Lookup of a catalog name or recipe failed.
class UnknownEntry : public Error {
 public:
  using Error::Error;
};

}  // namespace donaldson

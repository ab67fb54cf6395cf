#pragma once

#include <stdexcept>
#include <string>

namespace m2z {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed textual input (matrices, integers).
class ParseError : public Error {
 public:
  using Error::Error;
};

/// An operation's precondition does not hold. The message names the
/// violated condition.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// The discriminant e^2 + 4fg of a commutant frame is a perfect square, so
/// the commutant has integer eigenvalues and no quadratic-field embedding.
class SquareDiscriminantError : public Error {
 public:
  SquareDiscriminantError() : Error("square discriminant") {}
};

/// A quadratic element has no integral preimage in the commutant.
class NotRepresentableError : public Error {
 public:
  using Error::Error;
};

/// Binary quadratic-field operation on elements of different fields.
class FieldMismatchError : public Error {
 public:
  using Error::Error;
};

}  // namespace m2z

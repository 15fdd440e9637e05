#pragma once

#include <stdexcept>
#include <string>

namespace isocay {

/// Base class of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A caller-supplied argument violates an operation's precondition.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// Division by zero, inversion of zero, evaluation at a pole.
class ArithmeticError : public Error {
 public:
  using Error::Error;
};

/// A memory or size budget would be exceeded. Nothing partial is returned.
class ResourceError : public Error {
 public:
  using Error::Error;
};

/// A computed fact contradicts what the construction guarantees.
class VerificationError : public Error {
 public:
  using Error::Error;
};

/// Malformed, truncated or corrupted serialized data.
class FormatError : public Error {
 public:
  using Error::Error;
};

}  // namespace isocay

#pragma once

#include <stdexcept>
#include <string>

namespace qcat {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Exact and float values met in the same operation.
class ModeMismatch : public Error {
 public:
  ModeMismatch() : Error("mode mismatch: exact and float values cannot be mixed") {}
};

/// The requested operation has no exact rational result.
class ExactUnsupported : public Error {
 public:
  using Error::Error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

/// An enumeration or saturation would exceed its configured bound.
class BoundExceeded : public Error {
 public:
  using Error::Error;
};

}  // namespace qcat

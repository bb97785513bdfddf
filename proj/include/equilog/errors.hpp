#pragma once

#include <stdexcept>
#include <string>

namespace equilog {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input or a violated precondition (wrong quantale, size mismatch, ...).
class InputError : public Error {
 public:
  using Error::Error;
};

/// An enumeration would exceed its configured bound.
class BoundExceeded : public Error {
 public:
  using Error::Error;
};

/// A construction was built but its universal property failed the oracle.
class ConstructionRejected : public Error {
 public:
  using Error::Error;
};

}  // namespace equilog

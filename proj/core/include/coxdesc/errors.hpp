#pragma once

#include <stdexcept>
#include <string>

namespace coxdesc {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A Coxeter type, subset, or word that violates its constraints.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// Two operands belong to different Coxeter systems.
class SystemMismatch : public Error {
 public:
  using Error::Error;
};

/// A computation would need to enumerate more elements than the configured cap.
class EnumerationRefused : public Error {
 public:
  using Error::Error;
};

/// A computed result disagrees with an asserted mathematical statement.
class VerificationFailure : public Error {
 public:
  using Error::Error;
};

}  // namespace coxdesc

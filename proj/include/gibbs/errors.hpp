#pragma once

#include <stdexcept>
#include <string>

namespace gibbs {

/// Root of the library's exception hierarchy. The C API maps each subclass
/// onto a distinct status code.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Precondition violated by the caller (bad parameter, unsupported scenario).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// A numeric result left the representable or certified range.
class RangeError : public Error {
 public:
  using Error::Error;
};

/// Two inputs that must describe the same physical point do not.
class MismatchError : public Error {
 public:
  using Error::Error;
};

/// Oracle truncation too small for the requested tolerance.
class CutoffError : public Error {
 public:
  using Error::Error;
};

/// Least-squares fit could not be performed on the supplied data.
class FitError : public Error {
 public:
  using Error::Error;
};

}  // namespace gibbs

namespace gibbs {

/// Output could not be written.
class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace gibbs

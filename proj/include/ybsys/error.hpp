#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ybsys {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DivisionByZero : public Error {
 public:
  using Error::Error;
};

/// Malformed scalar text. `position()` is a 0-based offset into the input.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " at position " + std::to_string(position)), position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// Domain/codomain or arity mismatch between linear maps or spaces.
class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

class SingularMap : public Error {
 public:
  using Error::Error;
};

/// Bad user-supplied argument: unknown example, out-of-range parameter, malformed file.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// An operation's mathematical precondition (an axiom check) did not hold.
class PreconditionFailed : public Error {
 public:
  using Error::Error;
};

}  // namespace ybsys

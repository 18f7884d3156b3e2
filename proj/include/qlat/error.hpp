#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace qlat {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& message) : std::runtime_error(message) {}
};

/// Operands live in incompatible shapes (matrix sizes, ambient dimensions).
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// A documented precondition on an argument was violated.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t position)
      : Error(message + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

class UnboundVariable : public Error {
 public:
  explicit UnboundVariable(const std::string& name)
      : Error("unbound variable '" + name + "'"), name_(name) {}

  const std::string& name() const { return name_; }

 private:
  std::string name_;
};

/// Malformed external input (JSON documents, assignment files).
class FormatError : public Error {
 public:
  using Error::Error;
};

/// A runtime self-check failed. Indicates a bug, never bad input.
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

/// A rational function was evaluated at one of its poles.
class PoleError : public Error {
 public:
  using Error::Error;
};

}  // namespace qlat

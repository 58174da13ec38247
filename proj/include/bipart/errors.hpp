#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace bipart {

// Base of every recoverable error raised by the library. The CLI maps the
// concrete subclasses onto exit codes.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
  virtual const char* kind() const noexcept = 0;
};

// Malformed arguments: out-of-range vertex ids, non-bipartite input, ...
class InputError : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "input"; }
};

// A value violates its type's invariants (non-clique weighting key, ...).
class ValidationError : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "validation"; }
};

// An operation was called outside the hypotheses it is defined for.
class PreconditionError : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "precondition"; }
};

// The instance is larger than an exact solver or enumerator accepts.
class SizeLimitError : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "size-limit"; }
};

// Text input could not be decoded. line is 1-based, offset is the 0-based
// byte offset within that line.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::size_t offset, const std::string& what)
      : Error("line " + std::to_string(line) + ", byte " +
              std::to_string(offset) + ": " + what),
        line_(line),
        offset_(offset) {}

  const char* kind() const noexcept override { return "parse"; }
  std::size_t line() const noexcept { return line_; }
  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t line_;
  std::size_t offset_;
};

// Raised when a checked mathematical identity fails. Indicates a bug, never
// bad input.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace bipart

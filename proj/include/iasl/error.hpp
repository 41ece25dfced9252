#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace iasl {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Exact arithmetic left the configured element range.
class OverflowError : public Error {
 public:
  using Error::Error;
};

/// A caller violated an operation precondition (bad id, missing edge, ...).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// Malformed textual input. Carries the 1-based line and 0-based byte offset.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line, std::size_t offset)
      : Error("line " + std::to_string(line) + ", byte " + std::to_string(offset) + ": " + what),
        line_(line),
        offset_(offset) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t line_;
  std::size_t offset_;
};

}  // namespace iasl

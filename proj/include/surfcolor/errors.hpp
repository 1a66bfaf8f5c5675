#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace surfcolor {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An operation was called on input that violates its stated precondition.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// The requested fixture or size is outside what the library ships.
class UnsupportedError : public Error {
 public:
  using Error::Error;
};

/// A text file failed to parse. Line and column are 1-based.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& what)
      : Error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// A step that the underlying theorems guarantee to succeed did not. Always a bug.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace surfcolor

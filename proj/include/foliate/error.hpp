#pragma once

#include <stdexcept>
#include <string>

namespace foliate {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Shape or arity mismatch: wrong variable count, non-square matrix, mixed ring modes.
class StructuralError : public Error {
 public:
  using Error::Error;
};

/// A computation exceeded one of its configured size or step guards.
class ResourceError : public Error {
 public:
  using Error::Error;
};

/// Malformed problem text. Line and column are 1-based.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, int line, int column)
      : Error(std::to_string(line) + ":" + std::to_string(column) + ": " + what),
        message_(what),
        line_(line),
        column_(column) {}

  /// The message without the position prefix.
  const std::string& message() const { return message_; }
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  std::string message_;
  int line_;
  int column_;
};

}  // namespace foliate

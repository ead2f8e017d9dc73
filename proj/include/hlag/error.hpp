#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hlag {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A value violates the documented precondition of an operation.
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// Malformed `.hg` or JSON input. Line and column are 1-based; 0 means unknown.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t line, std::size_t column)
      : Error(format(message, line, column)), line_(line), column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  static std::string format(const std::string& message, std::size_t line, std::size_t column) {
    if (line == 0) return message;
    return std::to_string(line) + ":" + std::to_string(column) + ": " + message;
  }

  std::size_t line_;
  std::size_t column_;
};

/// A checkpoint file is corrupt or was written for a different search space.
class CheckpointError : public Error {
 public:
  using Error::Error;
};

}  // namespace hlag

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace fcadr {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input text. Line and column are 1-based; column 0 means the
/// whole line.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line, std::size_t column)
      : Error("line " + std::to_string(line) + (column ? ", column " + std::to_string(column) : std::string{}) +
              ": " + what),
        line_(line),
        column_(column) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// Arguments that violate an operation's precondition (unknown labels,
/// empty attribute subsets, mismatched universes, ...).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// A computation refused to run because its input exceeds a documented size
/// guard.
class LimitExceeded : public Error {
 public:
  using Error::Error;
};

}  // namespace fcadr

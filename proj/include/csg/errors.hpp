#pragma once

#include <stdexcept>
#include <string>

namespace csg {

/// Input rejected because an operation's precondition does not hold.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class DivisionByZero : public PreconditionError {
 public:
  DivisionByZero() : PreconditionError("division by zero") {}
};

/// A mathematically excluded state was reached. Always indicates a bug in
/// exact arithmetic or in a certificate, never bad input.
class InternalInconsistency : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class ParseError : public PreconditionError {
 public:
  ParseError(const std::string& message, int line, int column)
      : PreconditionError(std::to_string(line) + ":" + std::to_string(column) + ": " + message),
        line_(line),
        column_(column) {}

  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

}  // namespace csg

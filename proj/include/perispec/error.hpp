#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace perispec {

/// A caller broke a documented precondition (shape, symmetry, range).
class ContractViolation : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// The inputs are well-formed but the requested quantity does not exist
/// (divisibility failure, index of a non-Fredholm symbol, degenerate crossing).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Malformed problem file or command-line value.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t line, std::size_t column)
      : std::runtime_error(what + " (line " + std::to_string(line) + ", column " +
                           std::to_string(column) + ")"),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// A command-line value outside its accepted range.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace perispec

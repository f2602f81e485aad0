#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace groundeq {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised by substitute() when a variable of the term has no binding.
class MissingBinding : public Error {
 public:
  explicit MissingBinding(unsigned var)
      : Error("no binding for variable x" + std::to_string(var)), var_(var) {}
  unsigned var() const { return var_; }

 private:
  unsigned var_;
};

class NotVariablePreserving : public Error {
 public:
  explicit NotVariablePreserving(std::size_t equation)
      : Error("equation " + std::to_string(equation + 1) +
              " is not variable preserving"),
        equation_(equation) {}
  std::size_t equation() const { return equation_; }

 private:
  std::size_t equation_;
};

/// Some state of an automaton is not reachable by any ground term.
class NotConnected : public Error {
 public:
  using Error::Error;
};

/// A procedure step would enumerate more instances than its budget allows.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& what)
      : Error(std::to_string(line) + ":" + std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace groundeq

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ncsat {

enum class ErrorKind {
  malformed_input,  // variable index out of range, bad generator spec, ...
  parse,            // DIMACS syntax
  cap_exceeded,     // enumeration/expansion refused for the given n
  term_budget,      // inclusion-exclusion exceeded its term budget
  generation,       // generator could not satisfy its regime constraint
  contract,         // caller broke a precondition
};

class Error : public std::runtime_error {
public:
  Error(ErrorKind kind, const std::string &what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

private:
  ErrorKind kind_;
};

class ParseError : public Error {
public:
  ParseError(std::size_t line, const std::string &what)
      : Error(ErrorKind::parse,
              "line " + std::to_string(line) + ": " + what),
        line_(line) {}

  std::size_t line() const noexcept { return line_; }

private:
  std::size_t line_;
};

} // namespace ncsat

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace galois {

class ParseError : public std::runtime_error {
public:
  ParseError(std::size_t line, std::size_t column, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) +
                           ": " + what),
        line_(line), column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

private:
  std::size_t line_;
  std::size_t column_;
};

// Unknown identifier (property, individual, term, concept or rule id).
class LookupError : public std::out_of_range {
public:
  using std::out_of_range::out_of_range;
};

// Structurally invalid input: duplicate names, cycles, bad taxonomy leaves.
class ValidationError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class CapacityError : public std::length_error {
public:
  using std::length_error::length_error;
};

class ArgumentError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

} // namespace galois

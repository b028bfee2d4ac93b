#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace qcomp {

/// Violated structural precondition: mismatched sizes, foreign letters,
/// out-of-range states.
class StructuralError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A parameter outside the range a construction is defined for.
class RangeError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

/// A closure or subset construction grew past its hard cap.
class CapacityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ", column " +
                           std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace qcomp

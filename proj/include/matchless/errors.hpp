#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace matchless {

// Malformed FAMILY v1 text. line() is 1-based.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

// A parameter outside the documented range of an operation.
class RangeError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Inequality checks whose hypothesis does not hold at the given parameters.
class OutOfRegime : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Hard resource caps (ground-set size, search nodes, enumeration size).
class CapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace matchless

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace kcausal {

// Malformed input values: negative weights, sizes that disagree, families
// that are empty, relations that break a stated hypothesis.
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Raised by the subset-enumeration routines when the ground exceeds the cap.
class CapacityError : public std::length_error {
 public:
  CapacityError(std::size_t n, std::size_t cap)
      : std::length_error("ground of size " + std::to_string(n) +
                          " exceeds enumeration cap " + std::to_string(cap)),
        size_(n),
        cap_(cap) {}

  std::size_t size() const noexcept { return size_; }
  std::size_t cap() const noexcept { return cap_; }

 private:
  std::size_t size_;
  std::size_t cap_;
};

// K+ of the ground is not antisymmetric, so no time function exists.
class NotStablyCausal : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Document-level failure while reading one of the text file formats.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t line = 0, std::size_t column = 0)
      : std::runtime_error(line == 0 ? message
                                     : "line " + std::to_string(line) + ", column " +
                                           std::to_string(column) + ": " + message),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace kcausal

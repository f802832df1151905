#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>

namespace cy3 {

// Operands live in different rings (variable count or characteristic differ).
class RingMismatch : public std::invalid_argument {
 public:
  explicit RingMismatch(const std::string& what) : std::invalid_argument(what) {}
};

// Text input could not be parsed. Carries the 1-based line and the field name
// so command-line tools can point at the offending spot.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, std::string field, const std::string& message)
      : std::runtime_error("line " + std::to_string(line) + ": " + field + ": " + message),
        line_(line),
        field_(std::move(field)) {}

  std::size_t line() const noexcept { return line_; }
  const std::string& field() const noexcept { return field_; }

 private:
  std::size_t line_;
  std::string field_;
};

}  // namespace cy3

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cosr {

/// Malformed instance text. `line()` is 1-based within the input.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// A caller broke a documented precondition (e.g. passed a permutation that
/// fails verification where one that passes is required).
class ContractViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// An exhaustive oracle was asked to run outside its size guard.
class OracleRefusal : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace cosr

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace maxsub {

/// A caller broke a documented precondition (out-of-range vertex, wrong
/// property class, restricted solver on a graph that does not almost
/// satisfy the property, ...).
class ContractError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Malformed graph text. `line()` is 1-based.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what),
        line_(line) {}

  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// The brute-force oracle refuses inputs above its size limit.
class OracleLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace maxsub

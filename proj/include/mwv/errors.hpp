#pragma once

#include <stdexcept>
#include <string>

namespace mwv {

// Bad distribution/rule parameters or out-of-range k.
class ParameterError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Caller misuse: empty tie-break sets, mismatched k, unknown names.
class UsageError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Exhaustive enumeration guard exceeded.
class CapacityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed or inconsistent input data (files, records, lengths).
class DataError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public DataError {
 public:
  ParseError(std::size_t line, const std::string& what)
      : DataError("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace mwv

#ifndef DDISC_ERRORS_HPP
#define DDISC_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace ddisc {

// Caller violated a precondition (bad degree, unknown variable, mismatched
// variable sets, ...). Maps to CLI exit status 2.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A computation contradicted a claimed identity or divisibility.
// Maps to CLI exit status 1.
class FalsificationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InexactDivisionError : public FalsificationError {
 public:
  using FalsificationError::FalsificationError;
};

class NotASquareError : public FalsificationError {
 public:
  using FalsificationError::FalsificationError;
};

class ParseError : public UsageError {
 public:
  ParseError(const std::string& what, std::size_t line)
      : UsageError("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

// Broken internal invariant (e.g. interpolation validation mismatch).
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace ddisc

#endif  // DDISC_ERRORS_HPP

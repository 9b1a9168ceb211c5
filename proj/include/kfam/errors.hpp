#pragma once

#include <stdexcept>
#include <string>

namespace kfam {

/// An argument lies outside the domain of an operation (element not in the
/// ground set, i >= j for a shift, ground set too small for a construction).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// The operation declines to run: a scale guard or a mathematical
/// precondition does not hold.
class RefusalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed family file.
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

  int line() const noexcept { return line_; }

 private:
  int line_;
};

}  // namespace kfam

#pragma once

#include <stdexcept>
#include <string>

namespace gobelin {

// Failure categories shared by every module. The C API and the CLI map these
// onto status codes, so the set is closed.
enum class ErrorKind {
  Input,               // malformed input, dimension or field mismatch
  NotZeroDimensional,  // presentation has infinitely many standard monomials
  NotGorenstein,       // algebra is not local Gorenstein
  UnitElement,         // f1 or f2 is invertible
  SyzygyViolation,     // c_i1 f1 + c_i2 f2 != 0
  ComplexBroken,       // d o d != 0
  NotChainCompatible,  // map does not respect cycles/boundaries
  NotACycle,
  NotStabilized,
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const { return kind_; }

  // True for violations of mathematical hypotheses, false for malformed input.
  bool is_hypothesis_failure() const { return kind_ != ErrorKind::Input; }

 private:
  ErrorKind kind_;
};

// Parse failures carry a 1-based position.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line, std::size_t column)
      : Error(ErrorKind::Input, what), line_(line), column_(column) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace gobelin

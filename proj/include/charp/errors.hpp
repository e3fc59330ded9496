#ifndef CHARP_ERRORS_HPP
#define CHARP_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace charp {

// Base class for every error the library raises on purpose.
class Error : public std::runtime_error {
public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

class ZeroInverseError : public Error {
public:
  ZeroInverseError() : Error("inverse of zero") {}
};

class DivisionByZeroError : public Error {
public:
  DivisionByZeroError() : Error("division by zero") {}
};

class NotPrimeError : public Error {
public:
  explicit NotPrimeError(unsigned long long n)
      : Error("characteristic must be prime, got " + std::to_string(n)) {}
};

class LengthMismatchError : public Error {
public:
  LengthMismatchError() : Error("exponent vectors have different lengths") {}
};

class RingMismatchError : public Error {
public:
  explicit RingMismatchError(const std::string& detail = "")
      : Error("operands live in different rings" +
              (detail.empty() ? "" : ": " + detail)) {}
};

class ResourceLimitError : public Error {
public:
  explicit ResourceLimitError(const std::string& detail)
      : Error("resource budget exceeded: " + detail) {}
};

class OverflowError : public Error {
public:
  OverflowError() : Error("exponent overflow") {}
};

class NotMonomialError : public Error {
public:
  NotMonomialError() : Error("ideal generators are not all monomials") {}
};

class EmptyRingError : public Error {
public:
  EmptyRingError() : Error("ideal is the unit ideal; quotient ring is empty") {}
};

class UnitRelationError : public Error {
public:
  UnitRelationError() : Error("relation ideal is the unit ideal") {}
};

class TooManyElementsError : public Error {
public:
  TooManyElementsError(std::size_t got, std::size_t dim)
      : Error("sequence of length " + std::to_string(got) +
              " exceeds ring dimension " + std::to_string(dim)) {}
};

class NonPerfectCoefficientsError : public Error {
public:
  NonPerfectCoefficientsError()
      : Error("operation requires prime-field coefficients; the parameter "
              "field F_p(u,...) is not perfect") {}
};

class EmptyJacobianError : public Error {
public:
  EmptyJacobianError()
      : Error("all partial derivatives of the relations vanish") {}
};

class NotHomogeneousError : public Error {
public:
  explicit NotHomogeneousError(const std::string& what = "input")
      : Error(what + " is not homogeneous") {}
};

class NotInSubringError : public Error {
public:
  explicit NotInSubringError(const std::string& elem)
      : Error("element does not lie in the presented subring: " + elem) {}
};

class NotMPrimaryError : public Error {
public:
  NotMPrimaryError() : Error("ideal is not m-primary") {}
};

class InadmissibleMultiplierError : public Error {
public:
  explicit InadmissibleMultiplierError(const std::string& detail)
      : Error("multiplier is not admissible: " + detail) {}
};

class InvalidArgumentError : public Error {
public:
  explicit InvalidArgumentError(const std::string& detail) : Error(detail) {}
};

// DSL front-end errors carry a source position.
class ParseError : public Error {
public:
  ParseError(const std::string& kind, int line, int col, const std::string& msg)
      : Error(kind + " at " + std::to_string(line) + ":" + std::to_string(col) +
              ": " + msg),
        kind_(kind), line_(line), col_(col) {}
  const std::string& kind() const { return kind_; }
  int line() const { return line_; }
  int col() const { return col_; }

private:
  std::string kind_;
  int line_;
  int col_;
};

class SyntaxError : public ParseError {
public:
  SyntaxError(int line, int col, const std::string& msg)
      : ParseError("SyntaxError", line, col, msg) {}
};

class NameError : public ParseError {
public:
  NameError(int line, int col, const std::string& msg)
      : ParseError("NameError", line, col, msg) {}
};

class TypeError : public ParseError {
public:
  TypeError(int line, int col, const std::string& msg)
      : ParseError("TypeError", line, col, msg) {}
};

}  // namespace charp

#endif

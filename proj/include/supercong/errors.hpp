#pragma once

#include <stdexcept>
#include <string>

namespace supercong {

/// Base of every arithmetic failure raised by the library.  Statement
/// evaluation converts these into SKIP outcomes carrying `what()`.
class ArithmeticError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class InvalidRing : public ArithmeticError {
 public:
  using ArithmeticError::ArithmeticError;
};

class DenominatorDivisibleByP : public ArithmeticError {
 public:
  using ArithmeticError::ArithmeticError;
};

class NotInvertible : public ArithmeticError {
 public:
  using ArithmeticError::ArithmeticError;
};

class NotDivisible : public ArithmeticError {
 public:
  using ArithmeticError::ArithmeticError;
};

class BaseDivisibleByP : public ArithmeticError {
 public:
  using ArithmeticError::ArithmeticError;
};

class TermNotInvertible : public ArithmeticError {
 public:
  using ArithmeticError::ArithmeticError;
};

class KTooLarge : public ArithmeticError {
 public:
  using ArithmeticError::ArithmeticError;
};

class RingMismatch : public ArithmeticError {
 public:
  using ArithmeticError::ArithmeticError;
};

class Unsatisfiable : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class UnknownStatement : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class OraclePrimeTooLarge : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace supercong

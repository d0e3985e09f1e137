#pragma once

#include <stdexcept>
#include <string>

namespace fqcalc {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Invalid field parameters, context mismatch, division by zero in F_q.
class FieldError : public Error {
 public:
  using Error::Error;
};

/// A Laurent series does not carry enough known coefficients for the request.
class PrecisionError : public Error {
 public:
  using Error::Error;
};

/// Argument outside the domain of an operation (|t| > 1, missing q-th root, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Enumeration or degree budget exceeded.
class BudgetError : public Error {
 public:
  using Error::Error;
};

/// Internal consistency failure, e.g. a Carlitz binomial that does not divide.
class InvariantError : public Error {
 public:
  using Error::Error;
};

}  // namespace fqcalc

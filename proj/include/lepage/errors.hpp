#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>

namespace lepage {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A variable, index or operand does not belong to the chart in use.
class ChartMismatch : public Error {
 public:
  using Error::Error;
};

/// Numeric evaluation hit a pole, a log of a non-positive number, etc.
class DomainError : public Error {
 public:
  DomainError(const std::string& what, std::string offending)
      : Error(what + ": " + offending), offending_(std::move(offending)) {}

  const std::string& offending() const noexcept { return offending_; }

 private:
  std::string offending_;
};

class MissingVariable : public Error {
 public:
  using Error::Error;
};

/// Every sample point was rejected by the pole guard.
class SamplingFailure : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " at position " + std::to_string(position)), position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// Declared jet order is smaller than an order occurring in the input.
class OrderMismatch : public Error {
 public:
  using Error::Error;
};

class UnsupportedOrder : public Error {
 public:
  using Error::Error;
};

/// A form whose defining formula divides by a vanishing Lagrangian.
class UndefinedForm : public Error {
 public:
  using Error::Error;
};

class PreconditionError : public Error {
 public:
  using Error::Error;
};

class CalibrationFailure : public Error {
 public:
  using Error::Error;
};

/// The second-order fundamental form was requested for a Lagrangian whose
/// principal Lepage equivalent is not of second order.
class OrderReducibilityViolation : public Error {
 public:
  OrderReducibilityViolation(std::string condition, std::string witness)
      : Error("order-reducibility violated: " + condition + " gives " + witness),
        condition_(std::move(condition)),
        witness_(std::move(witness)) {}

  const std::string& condition() const noexcept { return condition_; }
  const std::string& witness() const noexcept { return witness_; }

 private:
  std::string condition_;
  std::string witness_;
};

}  // namespace lepage

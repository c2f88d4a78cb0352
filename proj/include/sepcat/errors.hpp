#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace sepcat {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Arithmetic between elements of different fields.
class FieldMismatch : public Error {
 public:
  using Error::Error;
};

class DivisionByZero : public Error {
 public:
  using Error::Error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

/// Malformed or inconsistent user input (bad labels, bad JSON, wrong shapes).
class InvalidInput : public Error {
 public:
  using Error::Error;
};

/// An operation was called on data that does not satisfy its precondition,
/// e.g. a groupoid criterion on a presentation that is not a groupoid.
class PreconditionFailed : public Error {
 public:
  using Error::Error;
};

/// Cochain dimension above the configured budget.
class BudgetExceeded : public Error {
 public:
  BudgetExceeded(std::size_t degree, std::size_t dimension, std::size_t budget)
      : Error("cochain space C^" + std::to_string(degree) + " has dimension " +
              std::to_string(dimension) + ", above the budget of " +
              std::to_string(budget)),
        degree_(degree),
        dimension_(dimension),
        budget_(budget) {}

  std::size_t degree() const noexcept { return degree_; }
  std::size_t dimension() const noexcept { return dimension_; }
  std::size_t budget() const noexcept { return budget_; }

 private:
  std::size_t degree_;
  std::size_t dimension_;
  std::size_t budget_;
};

/// A cross-check between two independent computations failed. This always
/// indicates a bug in this library.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace sepcat

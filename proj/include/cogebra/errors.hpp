#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace cogebra {

/// Malformed input or a violated precondition (bad descriptor, shape mismatch, ...).
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Two operands live over different fields.
class FieldMismatch : public InputError {
 public:
  using InputError::InputError;
};

/// An enumeration would exceed its configured work budget. Never a silent truncation.
class BudgetExceeded : public std::runtime_error {
 public:
  BudgetExceeded(const std::string& what, double required, std::uint64_t budget)
      : std::runtime_error(what + " (required ~" + std::to_string(required) +
                           ", budget " + std::to_string(budget) + ")"),
        required_(required),
        budget_(budget) {}

  double required() const noexcept { return required_; }
  std::uint64_t budget() const noexcept { return budget_; }

 private:
  double required_;
  std::uint64_t budget_;
};

/// The question is outside what the implemented decision procedures can settle.
class Undecided : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

}  // namespace cogebra

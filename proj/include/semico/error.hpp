#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace semico {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input: bad JSON shape, non-square table, out-of-range entry.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// A structure failed one of its axioms (associativity, action laws, ...).
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// An enumeration would exceed the configured cochain budget.
class BudgetExceeded : public Error {
 public:
  BudgetExceeded(std::uint64_t required, std::uint64_t budget)
      : Error("enumeration needs " + std::to_string(required) +
              " items, budget is " + std::to_string(budget)),
        required_(required),
        budget_(budget) {}

  std::uint64_t required() const noexcept { return required_; }
  std::uint64_t budget() const noexcept { return budget_; }

 private:
  std::uint64_t required_;
  std::uint64_t budget_;
};

/// A computed object contradicts a classification theorem, or a relation
/// that must be a congruence is not one.
class TheoremMismatch : public Error {
 public:
  using Error::Error;
};

/// The request lies outside the supported family of inputs.
class Unsupported : public Error {
 public:
  using Error::Error;
};

/// Result of an axiom check: empty `message` means ok.
struct Violation {
  std::string message;

  bool ok() const noexcept { return message.empty(); }
};

inline void throw_if_violated(const Violation& v) {
  if (!v.ok()) throw ValidationError(v.message);
}

}  // namespace semico

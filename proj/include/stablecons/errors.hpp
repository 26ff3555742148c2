#ifndef STABLECONS_ERRORS_HPP
#define STABLECONS_ERRORS_HPP

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace stablecons {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed formula text. `offset()` is the byte offset of the offending
/// token in the input.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t offset)
      : Error(message + " at offset " + std::to_string(offset)),
        offset_(offset),
        detail_(message) {}

  std::size_t offset() const noexcept { return offset_; }
  const std::string& detail() const noexcept { return detail_; }

 private:
  std::size_t offset_;
  std::string detail_;
};

class UnboundVariableError : public Error {
 public:
  explicit UnboundVariableError(std::uint32_t index)
      : Error("unbound variable X" + std::to_string(index)), index_(index) {}

  std::uint32_t index() const noexcept { return index_; }

 private:
  std::uint32_t index_;
};

/// A Stable Consequence instance violates its invariants.
class InvalidInstanceError : public Error {
 public:
  using Error::Error;
};

/// An enumeration would exceed the configured work budget. Raised before
/// any work is done; never replaced by a partial answer.
class BudgetExceededError : public Error {
 public:
  BudgetExceededError(const std::string& what, std::uint64_t required,
                      std::uint64_t budget)
      : Error(what + ": requires " + std::to_string(required) +
              " steps, budget is " + std::to_string(budget)),
        required_(required),
        budget_(budget) {}

  std::uint64_t required() const noexcept { return required_; }
  std::uint64_t budget() const noexcept { return budget_; }

 private:
  std::uint64_t required_;
  std::uint64_t budget_;
};

}  // namespace stablecons

#endif  // STABLECONS_ERRORS_HPP

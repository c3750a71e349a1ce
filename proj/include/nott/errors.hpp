#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace nott {

/// Mismatched operands or arguments outside an operation's contract.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Mathematically invalid input: non-surjective characters, invalid types,
/// characters that are not in the form a stage expects.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Malformed text literal. `offset()` is the byte offset of the problem.
class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& message, std::size_t offset)
      : std::invalid_argument(message + " (at byte " + std::to_string(offset) + ")"),
        offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

/// An exhaustive search whose space exceeds the configured budget.
class BudgetExceeded : public std::runtime_error {
 public:
  BudgetExceeded(std::uint64_t cost, std::uint64_t budget)
      : std::runtime_error("search space of " + std::to_string(cost) +
                           " candidates exceeds budget " + std::to_string(budget)),
        cost_(cost),
        budget_(budget) {}

  std::uint64_t cost() const noexcept { return cost_; }
  std::uint64_t budget() const noexcept { return budget_; }

 private:
  std::uint64_t cost_;
  std::uint64_t budget_;
};

}  // namespace nott

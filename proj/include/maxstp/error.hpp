#pragma once

#include <optional>
#include <stdexcept>
#include <string>

namespace maxstp {

// Malformed input: loops, dangling endpoints, foreign elements, bad partitions.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// An operation was called outside its precondition (e.g. a disconnected graph
// handed to edge_connectivity, or a decomposition of a non max-STP graph).
class PreconditionError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// An internal consistency check failed. Indicates a bug, never bad input.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// An exhaustive search would exceed its evaluation budget.
class BudgetExceeded : public std::runtime_error {
 public:
  BudgetExceeded(const std::string& what, std::optional<long long> best_known = std::nullopt)
      : std::runtime_error(what), best_known_(best_known) {}

  // Best upper bound found before giving up, when the search produces one.
  std::optional<long long> best_known() const { return best_known_; }

 private:
  std::optional<long long> best_known_;
};

// Default evaluation budget for exhaustive searches.
inline constexpr long long kDefaultBudget = 1LL << 22;

}  // namespace maxstp

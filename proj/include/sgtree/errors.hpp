#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace sgtree {

// Base class for all library errors.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// The complement of a requested gap set is not closed under addition.
// Carries the lexicographically smallest violating pair (a, b): both are
// members but a + b is a gap.
struct NotClosedError : Error {
  NotClosedError(int a_, int b_)
      : Error("gap set not realizable: " + std::to_string(a_) + "+" +
              std::to_string(b_) + " is a gap but both summands are members"),
        a(a_),
        b(b_) {}
  int a;
  int b;
};

struct RootHasNoParentError : Error {
  RootHasNoParentError() : Error("the trivial semigroup has no parent") {}
};

// The epsilon bound (3*gamma - 2 - 1/g)/(1 + 3*gamma) is only positive for
// genus >= 6.
struct GenusTooSmallError : Error {
  explicit GenusTooSmallError(int g_)
      : Error("epsilon bound requires genus >= 6, got " + std::to_string(g_)),
        g(g_) {}
  int g;
};

struct EpsilonOutOfRangeError : Error {
  explicit EpsilonOutOfRangeError(int g_)
      : Error("epsilon exceeds epsilon_max(" + std::to_string(g_) +
              ") and no override was requested"),
        g(g_) {}
  int g;
};

struct GenusMismatchError : Error {
  GenusMismatchError(int expected_, int actual_)
      : Error("genus mismatch: expected " + std::to_string(expected_) +
              ", semigroup has " + std::to_string(actual_)),
        expected(expected_),
        actual(actual_) {}
  int expected;
  int actual;
};

struct BudgetExceededError : Error {
  explicit BudgetExceededError(std::uint64_t budget_)
      : Error("traversal node budget of " + std::to_string(budget_) +
              " exceeded"),
        budget(budget_) {}
  std::uint64_t budget;
};

}  // namespace sgtree

#pragma once

#include <chrono>
#include <cstdint>

namespace ramify {

struct Budget {
  std::uint64_t max_degree = 40;
  double seconds = 120.0;
};

// Installs a budget for the current thread; nested scopes restore the outer one.
class BudgetScope {
 public:
  explicit BudgetScope(const Budget& b);
  ~BudgetScope();
  BudgetScope(const BudgetScope&) = delete;
  BudgetScope& operator=(const BudgetScope&) = delete;

  struct State;

 private:
  State* prev_;
  State* self_;
};

// Throws BudgetExceeded when the active budget is exhausted.
void budget_check_degree(std::uint64_t degree);
void budget_check_time();

}  // namespace ramify

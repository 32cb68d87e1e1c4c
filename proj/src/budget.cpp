#include "ramify/budget.hpp"

#include <string>

#include "ramify/error.hpp"

namespace ramify {

struct BudgetScope::State {
  Budget budget;
  std::chrono::steady_clock::time_point deadline;
};

namespace {
thread_local BudgetScope::State* active = nullptr;
}

BudgetScope::BudgetScope(const Budget& b) : prev_(active) {
  auto dur = std::chrono::duration_cast<std::chrono::steady_clock::duration>(std::chrono::duration<double>(b.seconds));
  self_ = new State{b, std::chrono::steady_clock::now() + dur};
  active = self_;
}

BudgetScope::~BudgetScope() {
  active = prev_;
  delete self_;
}

void budget_check_degree(std::uint64_t degree) {
  if (active && degree > active->budget.max_degree)
    throw BudgetExceeded("degree budget exceeded (" + std::to_string(degree) + " > " +
                         std::to_string(active->budget.max_degree) + ")");
}

void budget_check_time() {
  if (active && std::chrono::steady_clock::now() > active->deadline)
    throw BudgetExceeded("time budget exceeded (" + std::to_string(active->budget.seconds) + " s)");
}

}  // namespace ramify

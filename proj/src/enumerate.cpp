#include "boarding/enumerate.hpp"

namespace boarding {

BigInt count_feasible(const BoardingConfig& config) {
  const int n = config.n();
  const int k = config.k();
  BigInt count = factorial(k);
  for (int i = 0; i < n - k; ++i) count *= k + 1;
  return count;
}

namespace {

class Enumerator {
 public:
  Enumerator(const BoardingConfig& config, std::size_t reserve)
      : config_(config),
        occupied_(static_cast<std::size_t>(config.n()) + 1, false),
        seats_(config.n()) {
    results_.reserve(reserve);
  }

  std::vector<WeightedPlacement> run() {
    place(1, BigRational(1));
    return std::move(results_);
  }

 private:
  void place(int ball, const BigRational& prob) {
    const int n = config_.n();
    if (ball > n) {
      results_.push_back(
          WeightedPlacement{Placement(config_, seats_), prob});
      return;
    }
    const int free_count = n - ball + 1;
    if (ball > config_.k() && !occupied_[ball]) {
      // Forced move: the ball's own pit is still free.
      take(ball, ball, prob);
      return;
    }
    // Random decision: uniform over the free pits, ascending for
    // lexicographic output order.
    const BigRational branch = prob / free_count;
    for (int pit = 1; pit <= n; ++pit) {
      if (!occupied_[pit]) take(ball, pit, branch);
    }
  }

  void take(int ball, int pit, const BigRational& prob) {
    occupied_[pit] = true;
    seats_[ball - 1] = pit;
    place(ball + 1, prob);
    occupied_[pit] = false;
  }

  BoardingConfig config_;
  std::vector<bool> occupied_;
  std::vector<std::int32_t> seats_;
  std::vector<WeightedPlacement> results_;
};

}  // namespace

std::vector<WeightedPlacement> enumerate_feasible(
    const BoardingConfig& config, const EnumerationOptions& options) {
  const BigInt count = count_feasible(config);
  if (count > options.leaf_budget) {
    throw BudgetExceededError(
        "enumeration of (n=" + std::to_string(config.n()) +
        ", k=" + std::to_string(config.k()) + ") has " + count.str() +
        " feasible placements, above the budget of " +
        std::to_string(options.leaf_budget));
  }
  Enumerator enumerator(config, count.convert_to<std::size_t>());
  return enumerator.run();
}

}  // namespace boarding

#include "boarding/types.hpp"

#include <string>

namespace boarding {

BoardingConfig::BoardingConfig(int seats, int absent_minded)
    : n_(seats), k_(absent_minded) {
  if (n_ < 2) {
    throw std::invalid_argument("boarding: need n >= 2, got n=" +
                                std::to_string(n_));
  }
  if (k_ < 1 || k_ > n_ - 1) {
    throw std::invalid_argument("boarding: need 1 <= k <= n-1, got k=" +
                                std::to_string(k_) + " for n=" +
                                std::to_string(n_));
  }
}

Placement::Placement(BoardingConfig config, std::vector<std::int32_t> seats)
    : config_(config), seats_(std::move(seats)) {
  const int n = config_.n();
  const int k = config_.k();
  if (static_cast<int>(seats_.size()) != n) {
    throw std::invalid_argument("placement: expected " + std::to_string(n) +
                                " entries, got " +
                                std::to_string(seats_.size()));
  }
  std::vector<bool> occupied(static_cast<std::size_t>(n) + 1, false);
  for (int ball = 1; ball <= n; ++ball) {
    const std::int32_t pit = seats_[ball - 1];
    if (pit < 1 || pit > n || occupied[pit]) {
      throw std::invalid_argument("placement: entries are not a permutation "
                                  "of 1..n");
    }
    // Feasibility: a non-absent-minded ball takes its own pit when free.
    if (ball > k && !occupied[ball] && pit != ball) {
      throw std::invalid_argument(
          "placement: infeasible, ball " + std::to_string(ball) +
          " skipped its free pit");
    }
    occupied[pit] = true;
  }
}

}  // namespace boarding

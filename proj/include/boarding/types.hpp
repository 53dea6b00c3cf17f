#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "boarding/rational.hpp"

namespace boarding {

/// Thrown when an enumeration would exceed the configured leaf budget.
class BudgetExceededError : public std::runtime_error {
 public:
  explicit BudgetExceededError(const std::string& what)
      : std::runtime_error(what) {}
};

/// Problem instance: n seats (balls/pits) of which the first k passengers
/// are absent-minded. Requires n >= 2 and 1 <= k <= n-1.
class BoardingConfig {
 public:
  BoardingConfig(int seats, int absent_minded);

  int n() const { return n_; }
  int k() const { return k_; }

  friend bool operator==(const BoardingConfig&, const BoardingConfig&) = default;

 private:
  int n_;
  int k_;
};

/// A realized outcome of the boarding process: seat(i) is the 1-based pit
/// taken by ball i. Validates that the entries form a permutation and that
/// the outcome is feasible: every ball i > k takes its own pit when free.
class Placement {
 public:
  Placement(BoardingConfig config, std::vector<std::int32_t> seats);

  const BoardingConfig& config() const { return config_; }
  int n() const { return config_.n(); }

  /// Pit taken by ball i, 1-based in both directions.
  std::int32_t seat(int ball) const { return seats_[ball - 1]; }
  const std::vector<std::int32_t>& seats() const { return seats_; }

  friend bool operator==(const Placement&, const Placement&) = default;

 private:
  BoardingConfig config_;
  std::vector<std::int32_t> seats_;
};

/// A feasible placement together with its exact process probability:
/// the product of 1/(free choices) over every random decision on the path.
struct WeightedPlacement {
  Placement placement;
  BigRational probability;
};

}  // namespace boarding

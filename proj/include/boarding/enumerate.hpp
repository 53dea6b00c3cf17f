#pragma once

#include <cstdint>
#include <vector>

#include "boarding/types.hpp"

namespace boarding {

struct EnumerationOptions {
  // Hard cap on the number of leaves k!(k+1)^(n-k); exceeding it raises
  // BudgetExceededError instead of exhausting memory.
  std::uint64_t leaf_budget = 10'000'000;
};

/// Number of feasible placements, k! * (k+1)^(n-k). For k = 1 this is
/// 2^(n-1).
BigInt count_feasible(const BoardingConfig& config);

/// Depth-first expansion of every random decision of the boarding process.
/// Returns all feasible placements in lexicographic order, each with its
/// exact probability; the probabilities sum to exactly 1.
std::vector<WeightedPlacement> enumerate_feasible(
    const BoardingConfig& config, const EnumerationOptions& options = {});

}  // namespace boarding

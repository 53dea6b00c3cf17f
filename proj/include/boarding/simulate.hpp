#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "boarding/rng.hpp"
#include "boarding/types.hpp"

namespace boarding {

/// Runs boarding trials for a fixed configuration. Keeps the free-pit pool
/// (swap-with-last removal) as reusable buffers, so a trial costs O(n) with
/// no allocation; n = 10^6 runs at desk scale.
class BoardingSimulator {
 public:
  explicit BoardingSimulator(BoardingConfig config);

  /// One trial; returns the full placement.
  Placement simulate(RandomStream& stream);

  /// One trial; returns only the number of incorrectly placed balls.
  int simulate_wrong_count(RandomStream& stream);

  const BoardingConfig& config() const { return config_; }

 private:
  void run_trial(RandomStream& stream);

  BoardingConfig config_;
  std::vector<std::int32_t> pool_;   // free pits, 0-based
  std::vector<std::int32_t> pos_;    // pos_[pit] = index in pool_, -1 if taken
  std::vector<std::int32_t> seats_;  // trial outcome, 1-based pit numbers
  int wrong_ = 0;
};

/// Single-shot convenience wrapper around BoardingSimulator.
Placement simulate_boarding(const BoardingConfig& config,
                            RandomStream& stream);

struct SimulationOptions {
  std::uint64_t trials = 0;
  std::uint64_t seed = 0;
  unsigned max_threads = 0;  // 0 = hardware concurrency
};

struct SimulationResult {
  BoardingConfig config;
  std::uint64_t trials = 0;
  std::uint64_t seed = 0;
  std::map<int, std::uint64_t> histogram;  // wrong count -> occurrences
  double sample_mean = 0.0;
  double sample_variance = 0.0;  // unbiased (divides by trials - 1)
  std::string generator;
  std::uint64_t streams = 0;
  double seconds = 0.0;
  double trials_per_second = 0.0;
};

/// Histogram of the wrong count over many trials. Trials are partitioned
/// into fixed-size chunks, one RandomStream per chunk, so the result is
/// identical for a given (trials, seed) regardless of thread count.
SimulationResult simulate_wrong_count_histogram(const BoardingConfig& config,
                                                const SimulationOptions& options);

}  // namespace boarding

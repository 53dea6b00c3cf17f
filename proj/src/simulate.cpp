#include "boarding/simulate.hpp"

#include <atomic>
#include <chrono>
#include <cmath>
#include <thread>
#include <vector>

namespace boarding {

namespace {
// Chunk size per stream; fixed so that results do not depend on how many
// workers happen to run.
constexpr std::uint64_t kTrialsPerStream = 1u << 16;
}  // namespace

BoardingSimulator::BoardingSimulator(BoardingConfig config)
    : config_(config),
      pool_(config.n()),
      pos_(config.n()),
      seats_(config.n()) {}

void BoardingSimulator::run_trial(RandomStream& stream) {
  const int n = config_.n();
  const int k = config_.k();
  for (int pit = 0; pit < n; ++pit) {
    pool_[pit] = pit;
    pos_[pit] = pit;
  }
  int free_count = n;
  wrong_ = 0;

  auto take = [&](std::int32_t pit) {
    const std::int32_t idx = pos_[pit];
    const std::int32_t moved = pool_[free_count - 1];
    pool_[idx] = moved;
    pos_[moved] = idx;
    pos_[pit] = -1;
    --free_count;
  };

  for (int ball = 0; ball < k; ++ball) {
    const std::int32_t pit =
        pool_[stream.uniform_below(static_cast<std::uint64_t>(free_count))];
    take(pit);
    seats_[ball] = pit + 1;
    if (pit != ball) ++wrong_;
  }
  for (int ball = k; ball < n; ++ball) {
    if (pos_[ball] >= 0) {
      take(ball);
      seats_[ball] = ball + 1;
    } else {
      const std::int32_t pit =
          pool_[stream.uniform_below(static_cast<std::uint64_t>(free_count))];
      take(pit);
      seats_[ball] = pit + 1;
      ++wrong_;
    }
  }
}

Placement BoardingSimulator::simulate(RandomStream& stream) {
  run_trial(stream);
  return Placement(config_, seats_);
}

int BoardingSimulator::simulate_wrong_count(RandomStream& stream) {
  run_trial(stream);
  return wrong_;
}

Placement simulate_boarding(const BoardingConfig& config,
                            RandomStream& stream) {
  BoardingSimulator simulator(config);
  return simulator.simulate(stream);
}

SimulationResult simulate_wrong_count_histogram(
    const BoardingConfig& config, const SimulationOptions& options) {
  if (options.trials == 0) {
    throw std::invalid_argument("simulate: need trials >= 1");
  }
  const auto start = std::chrono::steady_clock::now();

  const std::uint64_t streams =
      (options.trials + kTrialsPerStream - 1) / kTrialsPerStream;
  unsigned workers = options.max_threads != 0
                         ? options.max_threads
                         : std::max(1u, std::thread::hardware_concurrency());
  workers = static_cast<unsigned>(
      std::min<std::uint64_t>(workers, streams));

  const std::size_t bins = static_cast<std::size_t>(config.n()) + 1;
  std::vector<std::vector<std::uint64_t>> partial(
      workers, std::vector<std::uint64_t>(bins, 0));
  std::atomic<std::uint64_t> next_stream{0};

  auto work = [&](unsigned worker) {
    BoardingSimulator simulator(config);
    auto& counts = partial[worker];
    for (;;) {
      const std::uint64_t s = next_stream.fetch_add(1);
      if (s >= streams) break;
      RandomStream stream(options.seed, s);
      const std::uint64_t begin = s * kTrialsPerStream;
      const std::uint64_t end =
          std::min(begin + kTrialsPerStream, options.trials);
      for (std::uint64_t t = begin; t < end; ++t) {
        ++counts[simulator.simulate_wrong_count(stream)];
      }
    }
  };

  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work, w);
    for (auto& t : pool) t.join();
  }

  SimulationResult result{config, options.trials, options.seed,
                          {},     0.0,            0.0,
                          RandomStream::generator_id(), streams, 0.0, 0.0};
  for (std::size_t w = 0; w < bins; ++w) {
    std::uint64_t total = 0;
    for (const auto& counts : partial) total += counts[w];
    if (total > 0) result.histogram[static_cast<int>(w)] = total;
  }

  double sum = 0.0;
  for (const auto& [w, c] : result.histogram) {
    sum += static_cast<double>(w) * static_cast<double>(c);
  }
  result.sample_mean = sum / static_cast<double>(options.trials);
  double ss = 0.0;
  for (const auto& [w, c] : result.histogram) {
    const double d = static_cast<double>(w) - result.sample_mean;
    ss += d * d * static_cast<double>(c);
  }
  result.sample_variance =
      options.trials > 1 ? ss / static_cast<double>(options.trials - 1) : 0.0;

  result.seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  result.trials_per_second =
      result.seconds > 0.0
          ? static_cast<double>(options.trials) / result.seconds
          : 0.0;
  return result;
}

}  // namespace boarding

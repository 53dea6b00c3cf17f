#include "boarding/distribution.hpp"

#include <stdexcept>

namespace boarding {

void ExactDistribution::set(int value, BigRational probability) {
  if (value < 0) {
    throw std::invalid_argument("distribution: negative support value");
  }
  if (probability < 0) {
    throw std::invalid_argument("distribution: negative probability");
  }
  if (probability == 0) {
    pmf_.erase(value);
  } else {
    pmf_[value] = std::move(probability);
  }
}

BigRational ExactDistribution::mass_at(int value) const {
  const auto it = pmf_.find(value);
  return it == pmf_.end() ? BigRational(0) : it->second;
}

BigRational ExactDistribution::total_mass() const {
  BigRational total(0);
  for (const auto& [value, p] : pmf_) total += p;
  return total;
}

MomentSummary ExactDistribution::moments() const {
  BigRational mean(0);
  BigRational second(0);
  for (const auto& [value, p] : pmf_) {
    mean += value * p;
    second += BigRational(value) * value * p;
  }
  return MomentSummary{mean, second - mean * mean};
}

int ExactDistribution::mode() const {
  if (pmf_.empty()) throw std::logic_error("distribution: empty pmf");
  int best = pmf_.begin()->first;
  const BigRational* best_p = &pmf_.begin()->second;
  for (const auto& [value, p] : pmf_) {
    if (p > *best_p) {
      best = value;
      best_p = &p;
    }
  }
  return best;
}

}  // namespace boarding

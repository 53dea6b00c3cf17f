#include "boarding/exact.hpp"

#include <cmath>
#include <stdexcept>

#include "boarding/derive.hpp"

namespace boarding {

namespace {

// Balanced summation keeps the intermediate numerators small; the naive
// left-to-right sum is two orders of magnitude slower at m = 10^4.
BigRational reciprocal_sum(long lo, long hi, int power) {
  if (lo == hi) {
    BigInt d = lo;
    if (power == 2) d *= lo;
    return BigRational(1, d);
  }
  const long mid = lo + (hi - lo) / 2;
  return reciprocal_sum(lo, mid, power) + reciprocal_sum(mid + 1, hi, power);
}

}  // namespace

BigRational harmonic(long m) {
  if (m < 0) throw std::invalid_argument("harmonic: negative argument");
  if (m == 0) return BigRational(0);
  return reciprocal_sum(1, m, 1);
}

BigRational inverse_square_sum(long from, long to) {
  if (from > to) return BigRational(0);
  if (from < 1) throw std::invalid_argument("inverse_square_sum: from < 1");
  return reciprocal_sum(from, to, 2);
}

ExactDistribution dist_cycle_count_via_stirling(int n, StirlingTable* table) {
  if (n < 1) throw std::invalid_argument("dist_cycle_count: need n >= 1");
  StirlingTable local;
  StirlingTable& rows = table != nullptr ? *table : local;
  const BigInt n_factorial = factorial(n);
  ExactDistribution law;
  for (int j = 1; j <= n; ++j) {
    law.set(j, BigRational(rows.get(n, j), n_factorial));
  }
  return law;
}

ExactDistribution dist_cycle_count_via_recursion(int n) {
  return dist_cycle_count_recursion_sweep(n).back();
}

std::vector<ExactDistribution> dist_cycle_count_recursion_sweep(int max_n) {
  if (max_n < 1) throw std::invalid_argument("dist_cycle_count: need n >= 1");
  std::vector<ExactDistribution> laws;
  laws.reserve(max_n);
  // p[j] holds the mass at j for the current size m.
  std::vector<BigRational> p(static_cast<std::size_t>(max_n) + 1,
                             BigRational(0));
  p[1] = 1;
  for (int m = 1;; ++m) {
    ExactDistribution law;
    for (int j = 1; j <= m; ++j) law.set(j, p[j]);
    laws.push_back(std::move(law));
    if (m == max_n) break;
    std::vector<BigRational> next(p.size(), BigRational(0));
    const BigRational keep(m, m + 1);
    const BigRational carry(1, m + 1);
    for (int j = 1; j <= m + 1; ++j) {
      BigRational mass(0);
      if (j <= m) mass += keep * p[j];
      if (j >= 2) mass += carry * p[j - 1];
      next[j] = mass;
    }
    p = std::move(next);
  }
  return laws;
}

ExactDistribution dist_cycle_count(int n) {
  return dist_cycle_count_via_stirling(n);
}

ExactDistribution dist_wrong_k1(int n, StirlingTable* table) {
  if (n < 2) throw std::invalid_argument("dist_wrong_k1: need n >= 2");
  StirlingTable local;
  StirlingTable& rows = table != nullptr ? *table : local;
  const BigInt n_factorial = factorial(n);
  ExactDistribution law;
  law.set(0, BigRational(rows.get(n, 1), n_factorial));
  for (int j = 2; j <= n; ++j) {
    law.set(j, BigRational(rows.get(n, j), n_factorial));
  }
  return law;
}

ExactDistribution dist_wrong(const BoardingConfig& config,
                             const EnumerationOptions& options) {
  ExactDistribution law;
  for (const auto& outcome : enumerate_feasible(config, options)) {
    const int w = wrong_count(outcome.placement);
    law.set(w, law.mass_at(w) + outcome.probability);
  }
  return law;
}

BigRational prob_own_seat(const BoardingConfig& config, int i) {
  const int n = config.n();
  const int k = config.k();
  if (i < 1 || i > n) {
    throw std::invalid_argument("prob_own_seat: seat index out of range");
  }
  if (i <= k) return BigRational(1, n);
  return BigRational(n - i + 1, n - i + k + 1);
}

BigRational joint_prob_own_seat(const BoardingConfig& config, int i, int j) {
  const int n = config.n();
  const int k = config.k();
  if (i < 1 || j <= i || j > n) {
    throw std::invalid_argument("joint_prob_own_seat: need 1 <= i < j <= n");
  }
  if (j <= k) {
    const BigInt pairs = BigInt(n) * (n - 1);
    return BigRational(1, pairs);
  }
  if (i <= k) {
    // P(A_i) times the conditional law with one ball and one pit removed.
    return BigRational(1, n) * BigRational(n - j + 1, n - j + k);
  }
  // Independent beyond the absent-minded prefix.
  return prob_own_seat(config, i) * prob_own_seat(config, j);
}

BigRational mean_correct(int n) {
  if (n < 2) throw std::invalid_argument("mean_correct: need n >= 2");
  return BigRational(n) - harmonic(n - 1);
}

BigRational mean_wrong(const BoardingConfig& config) {
  const int n = config.n();
  const int k = config.k();
  return k * (1 + harmonic(n - 1) - harmonic(k));
}

BigRational var_wrong(const BoardingConfig& config) {
  const BigInt n = config.n();
  const BigInt k = config.k();
  const BigInt quad_num = 2 * (1 - n + k * n) - n * n - k;
  const BigInt quad_den = n * n * (n - 1);
  const BigRational quadratic(quad_num, quad_den);
  const BigInt nk = n * k;
  const BigRational cross(2, nk);
  const BigRational harmonic_part =
      (1 + BigRational(2, n)) *
      (harmonic(config.n()) - harmonic(config.k()));
  const BigRational tail =
      k * inverse_square_sum(config.k() + 1, config.n());
  return k * (quadratic + cross + harmonic_part - tail);
}

CltParams clt_params(const BoardingConfig& config) {
  if (config.n() < 3) throw std::invalid_argument("clt_params: need n >= 3");
  const double mean = config.k() * std::log(static_cast<double>(config.n()));
  return CltParams{mean, std::sqrt(mean)};
}

}  // namespace boarding

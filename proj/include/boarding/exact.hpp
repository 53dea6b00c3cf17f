#pragma once

#include "boarding/distribution.hpp"
#include "boarding/enumerate.hpp"
#include "boarding/stirling.hpp"
#include "boarding/types.hpp"

namespace boarding {

/// Exact harmonic number H_m = 1 + 1/2 + ... + 1/m, with H_0 = 0 so the
/// moment formulas below need no special-casing. Summed as a balanced tree;
/// m = 10^5 stays interactive.
BigRational harmonic(long m);

/// Exact sum of 1/l^2 for l in [from, to]; empty when from > to.
BigRational inverse_square_sum(long from, long to);

/// Law of the auxiliary count 1 + sum of reversed own-seat indicators for
/// k = 1; it coincides with the cycle-count law of a uniform random
/// permutation. Two independent computation routes that must agree exactly:
/// via Stirling numbers over n!, and via the elementwise recursion
/// p(n+1, j) = n/(n+1) p(n, j) + 1/(n+1) p(n, j-1).
ExactDistribution dist_cycle_count_via_stirling(int n,
                                                StirlingTable* table = nullptr);
ExactDistribution dist_cycle_count_via_recursion(int n);
ExactDistribution dist_cycle_count(int n);  // the Stirling route

/// One pass of the recursion route, recording the law at every size
/// 1..max_n; entry m-1 holds the size-m law.
std::vector<ExactDistribution> dist_cycle_count_recursion_sweep(int max_n);

/// Closed-form law of the number of incorrectly placed balls for k = 1:
/// mass c(n,1)/n! at 0, zero at 1, c(n,j)/n! at j = 2..n. Requires n >= 2.
ExactDistribution dist_wrong_k1(int n, StirlingTable* table = nullptr);

/// Law of the wrong count for general k, aggregated from the exhaustive
/// enumeration (no closed form is known for k >= 2). For k = 1 it equals
/// dist_wrong_k1 exactly.
ExactDistribution dist_wrong(const BoardingConfig& config,
                             const EnumerationOptions& options = {});

/// P(ball i meets its assigned pit): 1/n for i <= k, else
/// (n-i+1)/(n-i+k+1). In particular 1/2 for the last ball when k = 1 and
/// 1/(k+1) in general.
BigRational prob_own_seat(const BoardingConfig& config, int i);

/// P(balls i and j both meet their pits), i < j. Three regimes: both
/// absent-minded, absent-minded times conditional, and the independent
/// product for k < i.
BigRational joint_prob_own_seat(const BoardingConfig& config, int i, int j);

/// Expected number of correctly placed balls for k = 1: n - H_{n-1}.
BigRational mean_correct(int n);

/// Expected wrong count: k(1 + H_{n-1} - H_k). Reduces to H_{n-1} at k = 1.
BigRational mean_wrong(const BoardingConfig& config);

/// Exact variance of the wrong count, evaluated term by term:
///   k [ (2(1-n+kn) - n^2 - k)/(n^2(n-1)) + 2/(nk)
///       + (1 + 2/n)(H_n - H_k) - k * sum_{l=k+1}^{n} 1/l^2 ].
BigRational var_wrong(const BoardingConfig& config);

/// Centering and scaling constants for the normal limit of the wrong
/// count: mean k*log(n), sd sqrt(k*log(n)). Requires n >= 3.
struct CltParams {
  double mean = 0.0;
  double sd = 0.0;
};
CltParams clt_params(const BoardingConfig& config);

}  // namespace boarding

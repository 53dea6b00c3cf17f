#pragma once

#include <cstdint>
#include <map>

#include "boarding/distribution.hpp"

namespace boarding {

struct ChiSquareFit {
  double statistic = 0.0;
  double p_value = 0.0;
  int bins = 0;             // after pooling
  int degrees_of_freedom = 0;
};

/// Pearson goodness-of-fit of an observed histogram against an exact law.
/// Adjacent support points are pooled until every expected count reaches
/// min_expected (the usual validity condition for the asymptotic chi-square
/// law); a short final bin is merged backwards. Observed mass outside the
/// reference support yields statistic = inf, p = 0.
ChiSquareFit chi_square_fit(const std::map<int, std::uint64_t>& observed,
                            const ExactDistribution& expected,
                            std::uint64_t trials, double min_expected = 5.0);

/// Standard normal CDF.
double normal_cdf(double x);

/// Sup-distance between the empirical CDF of (w - mean)/sd over the
/// histogram and the standard normal CDF.
double normal_ecdf_sup_distance(const std::map<int, std::uint64_t>& histogram,
                                std::uint64_t trials, double mean, double sd);

}  // namespace boarding

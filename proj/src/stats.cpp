#include "boarding/stats.hpp"

#include <boost/math/distributions/chi_squared.hpp>

#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

namespace boarding {

ChiSquareFit chi_square_fit(const std::map<int, std::uint64_t>& observed,
                            const ExactDistribution& expected,
                            std::uint64_t trials, double min_expected) {
  if (trials == 0) throw std::invalid_argument("chi_square_fit: no trials");

  for (const auto& [value, count] : observed) {
    if (count > 0 && expected.mass_at(value) == 0) {
      return ChiSquareFit{std::numeric_limits<double>::infinity(), 0.0, 0, 0};
    }
  }

  // Pool adjacent support points until each expected count is large enough.
  std::vector<std::pair<double, double>> bins;  // (expected, observed)
  double exp_acc = 0.0;
  double obs_acc = 0.0;
  for (const auto& [value, mass] : expected.pmf()) {
    exp_acc += to_double(mass) * static_cast<double>(trials);
    const auto it = observed.find(value);
    if (it != observed.end()) obs_acc += static_cast<double>(it->second);
    if (exp_acc >= min_expected) {
      bins.emplace_back(exp_acc, obs_acc);
      exp_acc = obs_acc = 0.0;
    }
  }
  if (exp_acc > 0.0 || obs_acc > 0.0) {
    if (bins.empty()) {
      bins.emplace_back(exp_acc, obs_acc);
    } else {
      bins.back().first += exp_acc;
      bins.back().second += obs_acc;
    }
  }

  ChiSquareFit fit;
  fit.bins = static_cast<int>(bins.size());
  fit.degrees_of_freedom = fit.bins - 1;
  for (const auto& [exp_count, obs_count] : bins) {
    const double diff = obs_count - exp_count;
    fit.statistic += diff * diff / exp_count;
  }
  if (fit.degrees_of_freedom < 1) {
    fit.p_value = 1.0;  // a single bin cannot reject
    return fit;
  }
  const boost::math::chi_squared_distribution<double> law(
      static_cast<double>(fit.degrees_of_freedom));
  fit.p_value = boost::math::cdf(boost::math::complement(law, fit.statistic));
  return fit;
}

double normal_cdf(double x) {
  return 0.5 * std::erfc(-x / std::sqrt(2.0));
}

double normal_ecdf_sup_distance(const std::map<int, std::uint64_t>& histogram,
                                std::uint64_t trials, double mean, double sd) {
  if (trials == 0 || sd <= 0.0) {
    throw std::invalid_argument("ecdf distance: bad trials or sd");
  }
  double distance = 0.0;
  std::uint64_t cumulative = 0;
  for (const auto& [value, count] : histogram) {
    const double z = (static_cast<double>(value) - mean) / sd;
    const double phi = normal_cdf(z);
    const double below = static_cast<double>(cumulative) /
                         static_cast<double>(trials);
    cumulative += count;
    const double at = static_cast<double>(cumulative) /
                      static_cast<double>(trials);
    distance = std::max(distance,
                        std::max(std::abs(below - phi), std::abs(at - phi)));
  }
  return distance;
}

}  // namespace boarding

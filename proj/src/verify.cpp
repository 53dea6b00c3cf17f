#include "boarding/verify.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "boarding/derive.hpp"
#include "boarding/exact.hpp"
#include "boarding/simulate.hpp"
#include "boarding/stats.hpp"

namespace boarding::verify {

namespace {

constexpr double kMinPValue = 0.001;

std::string rat(const BigRational& q) { return fraction_str(q); }

std::string join_ints(const std::vector<int>& values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i > 0) out += ",";
    out += std::to_string(values[i]);
  }
  return out;
}

std::string format_double(double value) {
  std::ostringstream os;
  os << value;
  return os.str();
}

std::string set_str(const std::vector<std::int32_t>& values) {
  std::string out = "{";
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i > 0) out += ",";
    out += std::to_string(values[i]);
  }
  return out + "}";
}

// Tracks pass/fail across many sub-comparisons and keeps the first mismatch
// for the report.
class Tally {
 public:
  void require(bool ok, const std::string& detail) {
    ++total_;
    if (ok) return;
    ++failures_;
    if (first_failure_.empty()) first_failure_ = detail;
  }

  bool pass() const { return failures_ == 0; }
  long total() const { return total_; }

  std::string observed(const std::string& all_good) const {
    if (pass()) return all_good;
    return std::to_string(failures_) + " of " + std::to_string(total_) +
           " comparisons failed; first: " + first_failure_;
  }

 private:
  long total_ = 0;
  long failures_ = 0;
  std::string first_failure_;
};

}  // namespace

nlohmann::json VerificationReport::to_json() const {
  nlohmann::json instance{{"n", n}, {"k", k}};
  for (const auto& [key, value] : params) instance[key] = value;
  nlohmann::json out{{"check", check},
                     {"instance", instance},
                     {"expected", expected},
                     {"observed", observed},
                     {"verdict", pass ? "pass" : "fail"}};
  if (statistic || p_value || sup_distance) {
    nlohmann::json metric;
    if (statistic) metric["statistic"] = *statistic;
    if (p_value) metric["p_value"] = *p_value;
    if (sup_distance) metric["sup_distance"] = *sup_distance;
    out["metric"] = metric;
  }
  return out;
}

VerificationReport check_displaced_seat_uniform(
    int n, const EnumerationOptions& options) {
  const BoardingConfig config(n, 1);
  const auto outcomes = enumerate_feasible(config, options);

  Tally tally;
  for (int i = 1; i <= n; ++i) {
    std::map<int, BigRational> marginal;
    for (const auto& outcome : outcomes) {
      const auto trace = displaced_seat_trace(outcome.placement);
      marginal[trace.seat_after(i)] += outcome.probability;
    }
    const BigRational uniform(1, n - i + 1);
    std::size_t expected_support = static_cast<std::size_t>(n - i) + 1;
    tally.require(marginal.size() == expected_support,
                  "support size at i=" + std::to_string(i));
    for (const auto& [seat, mass] : marginal) {
      const bool in_support = seat == 1 || seat > i;
      tally.require(in_support && mass == uniform,
                    "P(displaced seat = " + std::to_string(seat) + ") = " +
                        rat(mass) + " at i=" + std::to_string(i));
    }
  }

  VerificationReport report;
  report.check = "displaced_seat_uniform";
  report.n = n;
  report.k = 1;
  report.expected = "uniform 1/(n-i+1) on {1} u {i+1..n} for every i";
  report.observed = tally.observed("all marginals uniform");
  report.pass = tally.pass();
  return report;
}

VerificationReport check_displaced_seat_conditional_uniform(
    int n, const std::vector<int>& conditioning, int i,
    const EnumerationOptions& options) {
  const BoardingConfig config(n, 1);
  for (const int m : conditioning) {
    if (m < 2 || m > n - 1) {
      throw std::invalid_argument(
          "conditional check: conditioning indices must lie in {2..n-1}");
    }
    if (m >= i) {
      throw std::invalid_argument(
          "conditional check: need i above every conditioning index");
    }
  }
  if (i < 1 || i > n) {
    throw std::invalid_argument("conditional check: i out of range");
  }

  const auto outcomes = enumerate_feasible(config, options);
  BigRational condition_mass(0);
  std::map<int, BigRational> joint;
  for (const auto& outcome : outcomes) {
    const auto& p = outcome.placement;
    bool conditioned = true;
    for (const int m : conditioning) {
      if (p.seat(m) != m) {
        conditioned = false;
        break;
      }
    }
    if (!conditioned) continue;
    condition_mass += outcome.probability;
    const auto trace = displaced_seat_trace(p);
    joint[trace.seat_after(i)] += outcome.probability;
  }
  if (condition_mass == 0) {
    throw std::logic_error("conditional check: conditioning event is empty");
  }

  Tally tally;
  const BigRational uniform(1, n - i + 1);
  tally.require(joint.size() == static_cast<std::size_t>(n - i) + 1,
                "conditional support size");
  for (const auto& [seat, mass] : joint) {
    const bool in_support = seat == 1 || seat > i;
    tally.require(in_support && mass / condition_mass == uniform,
                  "P(displaced seat = " + std::to_string(seat) +
                      " | own-seat events) = " + rat(mass / condition_mass));
  }

  VerificationReport report;
  report.check = "displaced_seat_conditional_uniform";
  report.n = n;
  report.k = 1;
  report.params = {{"conditioning", join_ints(conditioning)},
                   {"i", std::to_string(i)}};
  report.expected = "uniform 1/(n-i+1) on {1} u {i+1..n}";
  report.observed = tally.observed("conditional law uniform");
  report.pass = tally.pass();
  return report;
}

VerificationReport check_displaced_seat_conditional_grid(
    int n, int max_set_size, const EnumerationOptions& options) {
  Tally tally;
  long combinations = 0;

  std::vector<int> indices;
  for (int m = 2; m <= n - 1; ++m) indices.push_back(m);

  std::vector<int> chosen;
  auto run_sets = [&](auto&& self, std::size_t from) -> void {
    if (!chosen.empty()) {
      for (int i = chosen.back() + 1; i <= n; ++i) {
        ++combinations;
        const auto sub =
            check_displaced_seat_conditional_uniform(n, chosen, i, options);
        tally.require(sub.pass, sub.observed);
      }
    }
    if (static_cast<int>(chosen.size()) == max_set_size) return;
    for (std::size_t idx = from; idx < indices.size(); ++idx) {
      chosen.push_back(indices[idx]);
      self(self, idx + 1);
      chosen.pop_back();
    }
  };
  run_sets(run_sets, 0);

  VerificationReport report;
  report.check = "displaced_seat_conditional_uniform_grid";
  report.n = n;
  report.k = 1;
  report.params = {{"max_set_size", std::to_string(max_set_size)},
                   {"combinations", std::to_string(combinations)}};
  report.expected = "uniform conditional law for every conditioning set";
  report.observed = tally.observed("all conditional laws uniform");
  report.pass = tally.pass();
  return report;
}

VerificationReport check_displaced_set_uniform(
    const BoardingConfig& config, const EnumerationOptions& options) {
  const int n = config.n();
  const int k = config.k();
  const auto outcomes = enumerate_feasible(config, options);

  std::vector<DisplacedSetTrace> traces;
  traces.reserve(outcomes.size());
  for (const auto& outcome : outcomes) {
    traces.push_back(displaced_set_trace(outcome.placement));
  }

  Tally tally;
  for (int i = k; i <= n; ++i) {
    std::map<std::vector<std::int32_t>, BigRational> law;
    for (std::size_t t = 0; t < outcomes.size(); ++t) {
      law[traces[t].set_after(i)] += outcomes[t].probability;
    }
    const BigInt subsets = binomial(n - i + k, k);
    const BigRational uniform(1, subsets);
    tally.require(BigInt(law.size()) == subsets,
                  "subset count at i=" + std::to_string(i) + ": " +
                      std::to_string(law.size()) + " vs " + subsets.str());
    for (const auto& [subset, mass] : law) {
      bool in_universe = true;
      for (const std::int32_t pit : subset) {
        if (!(pit <= k || pit > i)) in_universe = false;
      }
      tally.require(in_universe && mass == uniform,
                    "P(displaced set = " + set_str(subset) + ") = " +
                        rat(mass) + " at i=" + std::to_string(i));
    }
  }

  VerificationReport report;
  report.check = "displaced_set_uniform";
  report.n = n;
  report.k = k;
  report.expected =
      "uniform 1/C(n-i+k, k) over k-subsets of {1..k} u {i+1..n}, all i";
  report.observed = tally.observed("all set laws uniform");
  report.pass = tally.pass();
  return report;
}

VerificationReport check_own_seat_independence(
    const BoardingConfig& config, const EnumerationOptions& options) {
  const int n = config.n();
  const int k = config.k();
  const int m = n - k;
  if (m > 20) {
    throw std::invalid_argument(
        "independence check: 2^(n-k) subsets would not fit in memory");
  }
  const auto outcomes = enumerate_feasible(config, options);

  // Superset-sum of probabilities by fixed-mask, so that entry S holds
  // P(all events in S occur).
  std::vector<BigRational> by_mask(std::size_t{1} << m, BigRational(0));
  for (const auto& outcome : outcomes) {
    std::uint32_t mask = 0;
    for (int b = 0; b < m; ++b) {
      if (outcome.placement.seat(k + 1 + b) == k + 1 + b) mask |= 1u << b;
    }
    by_mask[mask] += outcome.probability;
  }
  for (int b = 0; b < m; ++b) {
    for (std::size_t mask = 0; mask < by_mask.size(); ++mask) {
      if (!(mask & (std::size_t{1} << b))) {
        by_mask[mask] += by_mask[mask | (std::size_t{1} << b)];
      }
    }
  }

  std::vector<BigRational> marginals(m);
  for (int b = 0; b < m; ++b) {
    marginals[b] = prob_own_seat(config, k + 1 + b);
  }

  Tally tally;
  for (std::size_t mask = 1; mask < by_mask.size(); ++mask) {
    BigRational product(1);
    for (int b = 0; b < m; ++b) {
      if (mask & (std::size_t{1} << b)) product *= marginals[b];
    }
    tally.require(by_mask[mask] == product,
                  "joint " + rat(by_mask[mask]) + " vs product " +
                      rat(product) + " for subset mask " +
                      std::to_string(mask));
  }

  VerificationReport report;
  report.check = "own_seat_independence";
  report.n = n;
  report.k = k;
  report.params = {{"subsets", std::to_string(by_mask.size() - 1)}};
  report.expected =
      "P(intersection) == product of marginals for every nonempty subset "
      "of {k+1..n}";
  report.observed = tally.observed("all subsets multiply");
  report.pass = tally.pass();
  return report;
}

VerificationReport check_own_seat_marginals(
    const BoardingConfig& config, const EnumerationOptions& options) {
  const int n = config.n();
  const auto outcomes = enumerate_feasible(config, options);

  Tally tally;
  for (int i = 1; i <= n; ++i) {
    BigRational enumerated(0);
    for (const auto& outcome : outcomes) {
      if (outcome.placement.seat(i) == i) enumerated += outcome.probability;
    }
    const BigRational formula = prob_own_seat(config, i);
    tally.require(enumerated == formula,
                  "P(own seat) at i=" + std::to_string(i) + ": " +
                      rat(enumerated) + " vs " + rat(formula));
  }

  VerificationReport report;
  report.check = "own_seat_marginals";
  report.n = n;
  report.k = config.k();
  report.expected = "enumerated P(ball i meets pit) equals the closed form";
  report.observed = tally.observed("all marginals match");
  report.pass = tally.pass();
  return report;
}

VerificationReport check_own_seat_joint_pairs(
    const BoardingConfig& config, const EnumerationOptions& options) {
  const int n = config.n();
  const auto outcomes = enumerate_feasible(config, options);

  Tally tally;
  for (int i = 1; i < n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      BigRational enumerated(0);
      for (const auto& outcome : outcomes) {
        if (outcome.placement.seat(i) == i &&
            outcome.placement.seat(j) == j) {
          enumerated += outcome.probability;
        }
      }
      const BigRational formula = joint_prob_own_seat(config, i, j);
      tally.require(enumerated == formula,
                    "P(A_i and A_j) at (" + std::to_string(i) + "," +
                        std::to_string(j) + "): " + rat(enumerated) +
                        " vs " + rat(formula));
    }
  }

  VerificationReport report;
  report.check = "own_seat_joint_pairs";
  report.n = n;
  report.k = config.k();
  report.expected = "enumerated pairwise joints equal the closed form";
  report.observed = tally.observed("all pairs match");
  report.pass = tally.pass();
  return report;
}

VerificationReport check_moment_formulas(const BoardingConfig& config,
                                         const EnumerationOptions& options) {
  const auto law = dist_wrong(config, options);
  const MomentSummary from_law = law.moments();
  const BigRational mean = mean_wrong(config);
  const BigRational variance = var_wrong(config);

  Tally tally;
  tally.require(from_law.mean == mean, "mean " + rat(from_law.mean) +
                                           " vs formula " + rat(mean));
  tally.require(from_law.variance == variance,
                "variance " + rat(from_law.variance) + " vs formula " +
                    rat(variance));
  tally.require(law.is_normalized(), "pmf mass " + rat(law.total_mass()));

  VerificationReport report;
  report.check = "moment_formulas";
  report.n = config.n();
  report.k = config.k();
  report.expected = "mean " + rat(mean) + ", variance " + rat(variance);
  report.observed = tally.pass() ? "mean " + rat(from_law.mean) +
                                       ", variance " + rat(from_law.variance)
                                 : tally.observed("");
  report.pass = tally.pass();
  return report;
}

VerificationReport check_wrong_k1_matches_enumeration(
    int n, const EnumerationOptions& options) {
  const ExactDistribution closed_form = dist_wrong_k1(n);
  const ExactDistribution enumerated = dist_wrong(BoardingConfig(n, 1),
                                                  options);
  VerificationReport report;
  report.check = "wrong_k1_matches_enumeration";
  report.n = n;
  report.k = 1;
  report.expected = "closed-form law equals enumeration pushforward";
  report.pass = closed_form == enumerated;
  report.observed = report.pass ? "laws identical" : "laws differ";
  return report;
}

VerificationReport check_cycle_count_routes(int max_n) {
  StirlingTable table;
  Tally tally;
  const auto recursion_laws = dist_cycle_count_recursion_sweep(max_n);
  for (int n = 1; n <= max_n; ++n) {
    const auto via_stirling = dist_cycle_count_via_stirling(n, &table);
    tally.require(via_stirling == recursion_laws[n - 1],
                  "routes differ at n=" + std::to_string(n));
  }

  VerificationReport report;
  report.check = "cycle_count_routes";
  report.n = max_n;
  report.k = 1;
  report.expected = "Stirling/n! route equals recursion route for n <= " +
                    std::to_string(max_n);
  report.observed = tally.observed("routes identical for every n");
  report.pass = tally.pass();
  return report;
}

VerificationReport check_mean_identity(int max_n) {
  Tally tally;
  for (int n = 2; n <= max_n; ++n) {
    const BigRational total =
        mean_correct(n) + mean_wrong(BoardingConfig(n, 1));
    tally.require(total == n, "mean_correct + mean_wrong = " + rat(total) +
                                  " at n=" + std::to_string(n));
  }

  VerificationReport report;
  report.check = "mean_identity";
  report.n = max_n;
  report.k = 1;
  report.expected = "mean_correct(n) + mean_wrong(n, 1) == n for n <= " +
                    std::to_string(max_n);
  report.observed = tally.observed("identity holds for every n");
  report.pass = tally.pass();
  return report;
}

namespace {

VerificationReport fit_report(const std::string& check, int n, int k,
                              std::uint64_t trials, std::uint64_t seed,
                              const ChiSquareFit& fit,
                              std::vector<std::pair<std::string, std::string>>
                                  params) {
  VerificationReport report;
  report.check = check;
  report.n = n;
  report.k = k;
  params.emplace_back("trials", std::to_string(trials));
  params.emplace_back("seed", std::to_string(seed));
  params.emplace_back("bins", std::to_string(fit.bins));
  report.params = std::move(params);
  report.expected = "chi-square p-value > " + format_double(kMinPValue);
  report.observed = "statistic " + format_double(fit.statistic) +
                    ", p-value " + format_double(fit.p_value);
  report.statistic = fit.statistic;
  report.p_value = fit.p_value;
  report.pass = fit.p_value > kMinPValue;
  return report;
}

}  // namespace

VerificationReport monte_carlo_fit(const BoardingConfig& config,
                                   std::uint64_t trials, std::uint64_t seed,
                                   unsigned max_threads) {
  const ExactDistribution reference =
      config.k() == 1 ? dist_wrong_k1(config.n()) : dist_wrong(config);
  SimulationOptions options;
  options.trials = trials;
  options.seed = seed;
  options.max_threads = max_threads;
  const SimulationResult result =
      simulate_wrong_count_histogram(config, options);
  const ChiSquareFit fit = chi_square_fit(result.histogram, reference, trials);
  return fit_report("monte_carlo_fit", config.n(), config.k(), trials, seed,
                    fit, {});
}

VerificationReport monte_carlo_fit_against(const ExactDistribution& reference,
                                           const TrialFn& trial, int n, int k,
                                           std::uint64_t trials,
                                           std::uint64_t seed,
                                           const std::string& label) {
  RandomStream stream(seed, 0);
  std::map<int, std::uint64_t> histogram;
  for (std::uint64_t t = 0; t < trials; ++t) ++histogram[trial(stream)];
  const ChiSquareFit fit = chi_square_fit(histogram, reference, trials);
  return fit_report("monte_carlo_fit", n, k, trials, seed, fit,
                    {{"variant", label}});
}

double clt_sup_distance(const BoardingConfig& config, std::uint64_t trials,
                        std::uint64_t seed, unsigned max_threads) {
  SimulationOptions options;
  options.trials = trials;
  options.seed = seed;
  options.max_threads = max_threads;
  const SimulationResult result =
      simulate_wrong_count_histogram(config, options);
  const CltParams params = clt_params(config);
  return normal_ecdf_sup_distance(result.histogram, trials, params.mean,
                                  params.sd);
}

VerificationReport clt_check(int k, const std::vector<int>& ladder,
                             std::uint64_t trials, std::uint64_t seed,
                             unsigned max_threads) {
  if (ladder.empty() || !std::is_sorted(ladder.begin(), ladder.end())) {
    throw std::invalid_argument("clt_check: ladder must ascend");
  }
  if (ladder.front() < 10) {
    throw std::invalid_argument("clt_check: need n >= 10 on every rung");
  }

  std::vector<double> distances;
  distances.reserve(ladder.size());
  for (const int n : ladder) {
    distances.push_back(
        clt_sup_distance(BoardingConfig(n, k), trials, seed, max_threads));
  }

  bool decreasing = true;
  for (std::size_t r = 1; r < distances.size(); ++r) {
    if (!(distances[r] < distances[r - 1])) decreasing = false;
  }
  const bool under_threshold = distances.back() < kCltSupDistanceThreshold;

  VerificationReport report;
  report.check = "clt_normal_limit";
  report.n = ladder.back();
  report.k = k;
  std::string distance_list;
  for (std::size_t r = 0; r < distances.size(); ++r) {
    if (r > 0) distance_list += ",";
    distance_list += format_double(distances[r]);
  }
  report.params = {{"ladder", join_ints(ladder)},
                   {"distances", distance_list},
                   {"trials", std::to_string(trials)},
                   {"seed", std::to_string(seed)},
                   {"threshold", format_double(kCltSupDistanceThreshold)}};
  report.expected =
      "sup-distance strictly decreasing along the ladder, final < " +
      format_double(kCltSupDistanceThreshold);
  report.observed = "distances " + distance_list;
  report.sup_distance = distances.back();
  report.pass = decreasing && under_threshold;
  return report;
}

std::vector<VerificationReport> run_exact_suite(const SuiteOptions& options) {
  if (options.max_n < 2) {
    throw std::invalid_argument("exact suite: need max-n >= 2");
  }
  if (options.max_k < 1) {
    throw std::invalid_argument("exact suite: need max-k >= 1");
  }
  const EnumerationOptions enumeration{options.leaf_budget};

  std::vector<VerificationReport> reports;
  for (int n = 2; n <= options.max_n; ++n) {
    reports.push_back(check_displaced_seat_uniform(n, enumeration));
    if (n >= 3 && n <= 7) {
      reports.push_back(
          check_displaced_seat_conditional_grid(n, 2, enumeration));
    }
    if (n <= 9) {
      reports.push_back(check_wrong_k1_matches_enumeration(n, enumeration));
    }
    for (int k = 1; k <= std::min(options.max_k, n - 1); ++k) {
      const BoardingConfig config(n, k);
      reports.push_back(check_displaced_set_uniform(config, enumeration));
      reports.push_back(check_own_seat_independence(config, enumeration));
      reports.push_back(check_own_seat_marginals(config, enumeration));
      reports.push_back(check_own_seat_joint_pairs(config, enumeration));
      reports.push_back(check_moment_formulas(config, enumeration));
    }
  }
  reports.push_back(check_cycle_count_routes(200));
  reports.push_back(check_mean_identity(100));
  return reports;
}

std::vector<VerificationReport> run_monte_carlo_suite(
    const SuiteOptions& options) {
  std::vector<VerificationReport> reports;
  for (const auto& [n, k] :
       std::vector<std::pair<int, int>>{{4, 1}, {8, 2}, {7, 3}}) {
    reports.push_back(monte_carlo_fit(BoardingConfig(n, k), options.mc_trials,
                                      options.seed, options.max_threads));
  }
  return reports;
}

std::vector<VerificationReport> run_clt_suite(const SuiteOptions& options) {
  std::vector<VerificationReport> reports;
  for (const int k : {1, 3}) {
    reports.push_back(clt_check(k, clt_default_ladder(), options.clt_trials,
                                options.seed, options.max_threads));
  }
  return reports;
}

}  // namespace boarding::verify

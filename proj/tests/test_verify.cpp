#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "boarding/exact.hpp"
#include "boarding/simulate.hpp"
#include "boarding/stats.hpp"
#include "boarding/verify.hpp"

using namespace boarding;
namespace bv = boarding::verify;

TEST_CASE("displaced-seat uniformity check") {
  for (int n = 2; n <= 7; ++n) {
    const auto report = bv::check_displaced_seat_uniform(n);
    CHECK(report.pass);
  }
}

TEST_CASE("conditional uniformity, single and double conditioning") {
  CHECK(bv::check_displaced_seat_conditional_uniform(5, {2}, 3).pass);
  CHECK(bv::check_displaced_seat_conditional_uniform(6, {2, 4}, 5).pass);
  // Empty conditioning degenerates to the plain marginal.
  CHECK(bv::check_displaced_seat_conditional_uniform(5, {}, 2).pass);

  CHECK_THROWS_AS(bv::check_displaced_seat_conditional_uniform(5, {2}, 2),
                  std::invalid_argument);
  CHECK_THROWS_AS(bv::check_displaced_seat_conditional_uniform(5, {1}, 3),
                  std::invalid_argument);
  CHECK_THROWS_AS(bv::check_displaced_seat_conditional_uniform(5, {5}, 6),
                  std::invalid_argument);

  for (int n = 3; n <= 7; ++n) {
    const auto report = bv::check_displaced_seat_conditional_grid(n, 2);
    CHECK(report.pass);
  }
}

TEST_CASE("displaced-set uniformity check") {
  CHECK(bv::check_displaced_set_uniform(BoardingConfig(5, 2)).pass);
  CHECK(bv::check_displaced_set_uniform(BoardingConfig(6, 3)).pass);
  CHECK(bv::check_displaced_set_uniform(BoardingConfig(7, 1)).pass);
}

TEST_CASE("own-seat independence beyond the prefix") {
  CHECK(bv::check_own_seat_independence(BoardingConfig(6, 1)).pass);
  CHECK(bv::check_own_seat_independence(BoardingConfig(6, 2)).pass);
  CHECK(bv::check_own_seat_independence(BoardingConfig(7, 3)).pass);
}

TEST_CASE("own-seat marginals and joint pairs match the closed forms") {
  for (int n = 3; n <= 7; ++n) {
    for (int k = 1; k <= std::min(3, n - 1); ++k) {
      const BoardingConfig config(n, k);
      CHECK(bv::check_own_seat_marginals(config).pass);
      CHECK(bv::check_own_seat_joint_pairs(config).pass);
    }
  }
  // k = 1 marginals, i.e. P(A_i) = (n-i+1)/(n-i+2), out to n = 9.
  CHECK(bv::check_own_seat_marginals(BoardingConfig(8, 1)).pass);
  CHECK(bv::check_own_seat_marginals(BoardingConfig(9, 1)).pass);
}

TEST_CASE("moment formulas against the enumeration oracle") {
  for (int n = 2; n <= 7; ++n) {
    for (int k = 1; k <= std::min(3, n - 1); ++k) {
      CHECK(bv::check_moment_formulas(BoardingConfig(n, k)).pass);
    }
  }
}

TEST_CASE("closed-form law matches enumeration; routes and identity") {
  CHECK(bv::check_wrong_k1_matches_enumeration(7).pass);
  CHECK(bv::check_cycle_count_routes(60).pass);
  CHECK(bv::check_mean_identity(50).pass);
}

TEST_CASE("chi-square fit accepts the true simulator") {
  const auto report = bv::monte_carlo_fit(BoardingConfig(4, 1), 200'000, 42);
  CHECK(report.pass);
  REQUIRE(report.p_value.has_value());
  CHECK(*report.p_value > 0.001);
}

TEST_CASE("chi-square fit rejects a corrupted simulator") {
  // First passenger always takes pit 1, so every ball is correct.
  const bv::TrialFn corrupted = [](RandomStream&) { return 0; };
  const auto report = bv::monte_carlo_fit_against(
      dist_wrong_k1(4), corrupted, 4, 1, 100'000, 42, "corrupted");
  CHECK_FALSE(report.pass);
}

TEST_CASE("chi-square fit rejects a mismatched reference law") {
  // Reference deliberately taken from n = 5, restricted to the n = 4
  // support and renormalized.
  const auto five = dist_wrong_k1(5);
  ExactDistribution mismatched;
  BigRational total(0);
  for (const int value : {0, 2, 3, 4}) total += five.mass_at(value);
  for (const int value : {0, 2, 3, 4}) {
    mismatched.set(value, five.mass_at(value) / total);
  }
  REQUIRE(mismatched.is_normalized());

  BoardingSimulator simulator{BoardingConfig(4, 1)};
  const bv::TrialFn honest = [&simulator](RandomStream& stream) {
    return simulator.simulate_wrong_count(stream);
  };
  const auto report = bv::monte_carlo_fit_against(mismatched, honest, 4, 1,
                                                  200'000, 42, "mismatched");
  CHECK_FALSE(report.pass);
}

TEST_CASE("chi-square helper flags observations outside the support") {
  std::map<int, std::uint64_t> observed{{0, 50}, {1, 50}};
  const auto fit = chi_square_fit(observed, dist_wrong_k1(4), 100);
  CHECK(fit.p_value == 0.0);
}

TEST_CASE("ecdf sup-distance is exact on a point mass") {
  // All mass at z = 0 against the standard normal: the CDF jumps from 0
  // to 1 across Phi(0) = 1/2, so the distance is exactly 1/2.
  std::map<int, std::uint64_t> histogram{{5, 1000}};
  CHECK(normal_ecdf_sup_distance(histogram, 1000, 5.0, 1.0) ==
        doctest::Approx(0.5));
}

TEST_CASE("clt distance shrinks with n") {
  const double coarse =
      bv::clt_sup_distance(BoardingConfig(100, 1), 30'000, 11);
  const double fine =
      bv::clt_sup_distance(BoardingConfig(10'000, 1), 30'000, 11);
  CHECK(fine < coarse);
  CHECK(coarse < 0.3);
}

TEST_CASE("clt check validates its ladder") {
  CHECK_THROWS_AS(bv::clt_check(1, {}, 1000, 1), std::invalid_argument);
  CHECK_THROWS_AS(bv::clt_check(1, {100, 50}, 1000, 1),
                  std::invalid_argument);
  CHECK_THROWS_AS(bv::clt_check(1, {5, 100}, 1000, 1), std::invalid_argument);
}

TEST_CASE("report serialization shape") {
  const auto report = bv::monte_carlo_fit(BoardingConfig(4, 1), 50'000, 7);
  const auto j = report.to_json();
  CHECK(j.at("check") == "monte_carlo_fit");
  CHECK(j.at("instance").at("n") == 4);
  CHECK(j.at("instance").at("k") == 1);
  CHECK(j.at("instance").contains("seed"));
  CHECK(j.contains("expected"));
  CHECK(j.contains("observed"));
  CHECK(j.at("metric").contains("statistic"));
  CHECK(j.at("metric").contains("p_value"));
  CHECK((j.at("verdict") == "pass" || j.at("verdict") == "fail"));

  const auto exact = bv::check_displaced_seat_uniform(4);
  const auto je = exact.to_json();
  CHECK(je.at("verdict") == "pass");
  CHECK_FALSE(je.contains("metric"));  // exact checks carry no statistic
}

TEST_CASE("exact suite passes on a reduced grid and validates bounds") {
  bv::SuiteOptions options;
  options.max_n = 5;
  options.max_k = 2;
  const auto reports = bv::run_exact_suite(options);
  CHECK(reports.size() > 10);
  for (const auto& report : reports) {
    CAPTURE(report.check);
    CAPTURE(report.n);
    CAPTURE(report.k);
    CHECK(report.pass);
  }

  bv::SuiteOptions bad;
  bad.max_n = 1;
  CHECK_THROWS_AS(bv::run_exact_suite(bad), std::invalid_argument);
}

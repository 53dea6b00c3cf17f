#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sstream>

#include "boarding/enumerate.hpp"
#include "boarding/exact.hpp"
#include "boarding/format.hpp"
#include "boarding/rng.hpp"

using namespace boarding;

namespace {

int count_occurrences(const std::string& haystack, const std::string& needle) {
  int count = 0;
  for (std::size_t pos = haystack.find(needle); pos != std::string::npos;
       pos = haystack.find(needle, pos + needle.size())) {
    ++count;
  }
  return count;
}

}  // namespace

TEST_CASE("fraction rendering") {
  CHECK(fraction_str(BigRational(1, 4)) == "1/4");
  CHECK(fraction_str(BigRational(6, 24)) == "1/4");
  CHECK(fraction_str(BigRational(3)) == "3");
  CHECK(fraction_str(BigRational(0)) == "0");
  CHECK(fraction_str(BigRational(-3, 6)) == "-1/2");
}

TEST_CASE("decimal rendering rounds half away from zero") {
  CHECK(decimal_str(BigRational(1, 24), 6) == "0.041667");
  CHECK(decimal_str(BigRational(11, 6), 3) == "1.833");
  CHECK(decimal_str(BigRational(1, 8), 2) == "0.13");
  CHECK(decimal_str(BigRational(1, 2), 0) == "1");
  CHECK(decimal_str(BigRational(-1, 8), 2) == "-0.13");
  CHECK(decimal_str(BigRational(0), 4) == "0.0000");
  // Denominator 100! stays exact.
  CHECK(decimal_str(BigRational(1, factorial(100)), 6) == "0.000000");
}

TEST_CASE("fraction JSON round-trips losslessly") {
  // Includes 100!-sized components.
  std::vector<BigRational> cases = {
      BigRational(0), BigRational(1, 2), BigRational(-7, 3),
      BigRational(stirling_first(100, 5), factorial(100))};
  RandomStream stream(31, 0);
  for (int c = 0; c < 50; ++c) {
    BigInt num = BigInt(stream.next()) * BigInt(stream.next());
    BigInt den = BigInt(stream.next()) * BigInt(stream.next()) + 1;
    if (stream.next() % 2 == 0) num = -num;
    cases.emplace_back(num, den);
  }
  for (const auto& q : cases) {
    const auto j = fraction_to_json(q);
    CHECK(j.at("num").is_string());
    CHECK(j.at("den").is_string());
    CHECK(fraction_from_json(j) == q);
  }
}

TEST_CASE("distribution CSV schema") {
  const auto law = dist_wrong_k1(4);
  const std::string csv = render_distribution_csv(law);
  std::istringstream lines(csv);
  std::string line;
  std::getline(lines, line);
  CHECK(line == "value,probability_num,probability_den,probability_decimal");
  std::getline(lines, line);
  CHECK(line == "0,1,4,0.250000");
  std::getline(lines, line);
  CHECK(line == "2,11,24,0.458333");
}

TEST_CASE("enumeration JSON carries exact fractions and wrong counts") {
  const BoardingConfig config(4, 1);
  const auto outcomes = enumerate_feasible(config);
  const auto j = enumeration_to_json(config, outcomes);
  CHECK(j.at("count") == 8);
  REQUIRE(j.at("placements").size() == 8);
  const auto& first = j.at("placements").at(0);
  CHECK(first.at("placement") == std::vector<int>{1, 2, 3, 4});
  CHECK(fraction_from_json(first.at("probability")) == BigRational(1, 4));
  CHECK(first.at("wrong") == 0);
  const auto& last = j.at("placements").at(7);
  CHECK(last.at("placement") == std::vector<int>{4, 2, 3, 1});
  CHECK(last.at("wrong") == 2);
}

TEST_CASE("distribution JSON round-trips the law") {
  const BoardingConfig config(6, 2);
  const auto law = dist_wrong(config);
  const auto j = distribution_to_json(config, law, mean_wrong(config),
                                      var_wrong(config));
  ExactDistribution recovered;
  for (const auto& row : j.at("pmf")) {
    recovered.set(row.at("value").get<int>(),
                  fraction_from_json(row.at("probability")));
  }
  CHECK(recovered == law);
  CHECK(fraction_from_json(j.at("mean")) == mean_wrong(config));
  CHECK(fraction_from_json(j.at("variance")) == var_wrong(config));
}

TEST_CASE("svg chart of the two-seat law") {
  const BoardingConfig config(2, 1);
  const std::string svg = render_distribution_svg(config, dist_wrong_k1(2));
  CHECK(svg.find("viewBox=\"0 0 800 500\"") != std::string::npos);
  CHECK(count_occurrences(svg, "fill=\"#4878a8\"") == 2);  // two bars
  CHECK(count_occurrences(svg, "P(W=0) = 0.500000") == 1);
  CHECK(count_occurrences(svg, "P(W=2) = 0.500000") == 1);
  // Ticks every 0.05 up to cover 0.5.
  CHECK(svg.find(">0.05<") != std::string::npos);
  CHECK(svg.find(">0.50<") != std::string::npos);
}

TEST_CASE("svg chart of the n=100 law peaks at five") {
  const BoardingConfig config(100, 1);
  const auto law = dist_wrong_k1(100);
  const std::string svg = render_distribution_svg(config, law);
  CHECK(svg.find("P(W=5) = 0.211204") != std::string::npos);
  CHECK(svg.find("P(W=4) = 0.192986") != std::string::npos);
  CHECK(count_occurrences(svg, "fill=\"#4878a8\"") ==
        static_cast<int>(law.pmf().size()));
  CHECK(svg.find(">0.25<") != std::string::npos);  // top tick above the mode

  // The tallest bar is the one at w = 5.
  const auto height_of = [&](const std::string& marker) {
    const std::size_t title = svg.find(marker);
    REQUIRE(title != std::string::npos);
    const std::size_t rect = svg.rfind("<rect", title);
    const std::size_t h = svg.find("height=\"", rect) + 8;
    return std::stod(svg.substr(h, svg.find('"', h) - h));
  };
  const double five = height_of("P(W=5)");
  for (const auto& [value, p] : law.pmf()) {
    if (value == 5) continue;
    CHECK(height_of("P(W=" + std::to_string(value) + ")") <= five);
  }
}

TEST_CASE("svg chart is byte-stable") {
  const BoardingConfig config(8, 2);
  const auto law = dist_wrong(config);
  CHECK(render_distribution_svg(config, law) ==
        render_distribution_svg(config, law));
}

TEST_CASE("simulation rendering is deterministic for a fixed seed") {
  const BoardingConfig config(6, 2);
  SimulationOptions options;
  options.trials = 20'000;
  options.seed = 9;
  const auto a = simulate_wrong_count_histogram(config, options);
  const auto b = simulate_wrong_count_histogram(config, options);
  const auto law = dist_wrong(config);
  CHECK(render_simulation_table(a, &law) == render_simulation_table(b, &law));
  CHECK(simulation_to_json(a, &law) == simulation_to_json(b, &law));
  CHECK(render_simulation_table(a, nullptr).find("exact") ==
        std::string::npos);
}

TEST_CASE("format parsing") {
  CHECK(parse_format("table") == OutputFormat::table);
  CHECK(parse_format("json") == OutputFormat::json);
  CHECK(parse_format("csv") == OutputFormat::csv);
  CHECK(parse_format("svg") == OutputFormat::svg);
  CHECK_THROWS_AS(parse_format("yaml"), std::invalid_argument);
}

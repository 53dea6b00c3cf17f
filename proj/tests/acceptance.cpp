// Acceptance suite: runs every acceptance criterion end to end and prints
// one pass/fail line per criterion. Exits nonzero if any criterion fails.
//
// Usage: acceptance --cli <path-to-boarding-binary> [--only N]

#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "boarding/derive.hpp"
#include "boarding/enumerate.hpp"
#include "boarding/exact.hpp"
#include "boarding/format.hpp"
#include "boarding/simulate.hpp"
#include "boarding/verify.hpp"

using namespace boarding;
namespace bv = boarding::verify;

namespace {

std::string g_cli_path;

struct CommandResult {
  int exit_code = -1;
  std::string output;
};

CommandResult run_cli(const std::string& args) {
  const std::string command = g_cli_path + " " + args + " 2>/dev/null";
  CommandResult result;
  FILE* pipe = popen(command.c_str(), "r");
  if (pipe == nullptr) return result;
  std::array<char, 4096> buffer;
  std::size_t got = 0;
  while ((got = fread(buffer.data(), 1, buffer.size(), pipe)) > 0) {
    result.output.append(buffer.data(), got);
  }
  const int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

class Timer {
 public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                         start_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point start_ =
      std::chrono::steady_clock::now();
};

bool require(bool ok, const std::string& detail, std::string& log) {
  if (!ok && log.empty()) log = detail;
  return ok;
}

// 1. The n=4, k=1 enumeration through the CLI: permutations, exact
//    probabilities, wrong counts, within one second.
bool criterion1(std::string& log) {
  Timer timer;
  const auto result = run_cli("enumerate --n 4 --k 1 --format json");
  const double elapsed = timer.seconds();
  bool ok = require(result.exit_code == 0, "cli exited nonzero", log);
  if (!ok) return false;

  const auto j = nlohmann::json::parse(result.output);
  const std::vector<std::vector<int>> perms = {
      {1, 2, 3, 4}, {2, 1, 3, 4}, {2, 3, 1, 4}, {2, 3, 4, 1},
      {2, 4, 3, 1}, {3, 2, 1, 4}, {3, 2, 4, 1}, {4, 2, 3, 1}};
  const std::vector<BigRational> probs = {
      {1, 4}, {1, 12}, {1, 24}, {1, 24}, {1, 12}, {1, 8}, {1, 8}, {1, 4}};
  const std::vector<int> wrongs = {0, 2, 3, 4, 3, 2, 3, 2};

  ok &= require(j.at("placements").size() == 8, "expected 8 rows", log);
  if (!ok) return false;
  for (std::size_t r = 0; r < 8; ++r) {
    const auto& row = j.at("placements").at(r);
    ok &= require(row.at("placement") == perms[r],
                  "permutation mismatch at row " + std::to_string(r), log);
    ok &= require(fraction_from_json(row.at("probability")) == probs[r],
                  "probability mismatch at row " + std::to_string(r), log);
    ok &= require(row.at("wrong") == wrongs[r],
                  "wrong-count mismatch at row " + std::to_string(r), log);
  }
  ok &= require(elapsed < 1.0, "took " + std::to_string(elapsed) + " s", log);
  if (ok) log = "8 rows exact via CLI, " + std::to_string(elapsed) + " s";
  return ok;
}

// 2. The closed-form law at n = 4.
bool criterion2(std::string& log) {
  const auto law = dist_wrong_k1(4);
  bool ok = true;
  ok &= require(law.mass_at(0) == BigRational(6, 24), "mass at 0", log);
  ok &= require(law.mass_at(2) == BigRational(11, 24), "mass at 2", log);
  ok &= require(law.mass_at(3) == BigRational(6, 24), "mass at 3", log);
  ok &= require(law.mass_at(4) == BigRational(1, 24), "mass at 4", log);
  ok &= require(law.mass_at(1) == 0, "mass at 1 must vanish", log);
  ok &= require(law.pmf().size() == 4, "support size", log);
  if (ok) log = "law is {0: 1/4, 2: 11/24, 3: 1/4, 4: 1/24}";
  return ok;
}

// 3. The n = 100 law: mode at 5 and the pinned 4-decimal values, under 5 s.
bool criterion3(std::string& log) {
  Timer timer;
  const auto law = dist_wrong_k1(100);
  const double elapsed = timer.seconds();
  bool ok = true;
  ok &= require(law.mode() == 5, "mode is not 5", log);
  ok &= require(decimal_str(law.mass_at(5), 4) == "0.2112",
                "mass at 5 is " + decimal_str(law.mass_at(5), 6), log);
  ok &= require(decimal_str(law.mass_at(4), 4) == "0.1930",
                "mass at 4 is " + decimal_str(law.mass_at(4), 6), log);
  ok &= require(decimal_str(law.mass_at(6), 4) == "0.1767",
                "mass at 6 is " + decimal_str(law.mass_at(6), 6), log);
  ok &= require(elapsed < 5.0, "took " + std::to_string(elapsed) + " s", log);
  if (ok) {
    log = "mode 5 at 0.2112, neighbors 0.1930 / 0.1767, " +
          std::to_string(elapsed) + " s";
  }
  return ok;
}

// 4. Last-ball probabilities across the (n, k) grid, plus enumeration
//    cross-check on small instances.
bool criterion4(std::string& log) {
  bool ok = true;
  for (int n = 2; n <= 50 && ok; ++n) {
    ok &= require(prob_own_seat(BoardingConfig(n, 1), n) == BigRational(1, 2),
                  "k=1 last-ball probability at n=" + std::to_string(n), log);
    for (int k = 1; k <= std::min(10, n - 1) && ok; ++k) {
      ok &= require(
          prob_own_seat(BoardingConfig(n, k), n) == BigRational(1, k + 1),
          "last-ball probability at n=" + std::to_string(n) +
              ", k=" + std::to_string(k),
          log);
    }
  }
  long checked = 0;
  for (int n = 2; n <= 8 && ok; ++n) {
    for (int k = 1; k <= std::min(3, n - 1) && ok; ++k) {
      const BoardingConfig config(n, k);
      BigRational enumerated(0);
      for (const auto& outcome : enumerate_feasible(config)) {
        if (outcome.placement.seat(n) == n) enumerated += outcome.probability;
      }
      ok &= require(enumerated == BigRational(1, k + 1),
                    "enumerated last-ball probability at n=" +
                        std::to_string(n) + ", k=" + std::to_string(k),
                    log);
      ++checked;
    }
  }
  if (ok) {
    log = "1/(k+1) on the full grid; " + std::to_string(checked) +
          " enumeration cross-checks";
  }
  return ok;
}

// 5. Feasible counts.
bool criterion5(std::string& log) {
  bool ok = true;
  for (int n = 2; n <= 10 && ok; ++n) {
    for (int k = 1; k <= std::min(3, n - 1) && ok; ++k) {
      const BoardingConfig config(n, k);
      const auto outcomes = enumerate_feasible(config);
      ok &= require(BigInt(outcomes.size()) == count_feasible(config),
                    "count mismatch at n=" + std::to_string(n) +
                        ", k=" + std::to_string(k),
                    log);
    }
  }
  for (int n = 2; n <= 12 && ok; ++n) {
    BigInt expected = 1;
    for (int b = 1; b < n; ++b) expected *= 2;
    ok &= require(count_feasible(BoardingConfig(n, 1)) == expected,
                  "2^(n-1) mismatch at n=" + std::to_string(n), log);
    if (n <= 12) {
      ok &= require(
          BigInt(enumerate_feasible(BoardingConfig(n, 1)).size()) == expected,
          "k=1 enumeration size at n=" + std::to_string(n), log);
    }
  }
  if (ok) log = "k!(k+1)^(n-k) everywhere; 2^(n-1) for k=1 up to n=12";
  return ok;
}

// 6. Independence of own-seat events beyond the prefix, every subset.
bool criterion6(std::string& log) {
  Timer timer;
  bool ok = true;
  long subsets = 0;
  for (int n = 2; n <= 8 && ok; ++n) {
    for (int k = 1; k <= std::min(3, n - 1) && ok; ++k) {
      const auto report = bv::check_own_seat_independence(BoardingConfig(n, k));
      ok &= require(report.pass,
                    "independence fails at n=" + std::to_string(n) +
                        ", k=" + std::to_string(k) + ": " + report.observed,
                    log);
      subsets += (1L << (n - k)) - 1;
    }
  }
  const double elapsed = timer.seconds();
  ok &= require(elapsed < 60.0, "took " + std::to_string(elapsed) + " s", log);
  if (ok) {
    log = std::to_string(subsets) + " subsets, all multiply, " +
          std::to_string(elapsed) + " s";
  }
  return ok;
}

// 7. Uniformity checks: marginals, conditionals, displaced sets.
bool criterion7(std::string& log) {
  bool ok = true;
  for (int n = 2; n <= 9 && ok; ++n) {
    const auto report = bv::check_displaced_seat_uniform(n);
    ok &= require(report.pass, "marginal uniformity at n=" +
                                   std::to_string(n) + ": " + report.observed,
                  log);
  }
  for (int n = 3; n <= 7 && ok; ++n) {
    const auto report = bv::check_displaced_seat_conditional_grid(n, 2);
    ok &= require(report.pass, "conditional uniformity at n=" +
                                   std::to_string(n) + ": " + report.observed,
                  log);
  }
  for (int n = 2; n <= 7 && ok; ++n) {
    for (int k = 1; k <= std::min(3, n - 1) && ok; ++k) {
      const auto report = bv::check_displaced_set_uniform(BoardingConfig(n, k));
      ok &= require(report.pass,
                    "set uniformity at n=" + std::to_string(n) +
                        ", k=" + std::to_string(k) + ": " + report.observed,
                    log);
    }
  }
  if (ok) log = "marginals (n<=9), conditionals (n<=7), set laws (n<=7, k<=3)";
  return ok;
}

// 8. Moment formulas against the enumeration oracle, plus the mean identity.
bool criterion8(std::string& log) {
  bool ok = true;
  for (int n = 2; n <= 8 && ok; ++n) {
    for (int k = 1; k <= std::min(3, n - 1) && ok; ++k) {
      const auto report = bv::check_moment_formulas(BoardingConfig(n, k));
      ok &= require(report.pass,
                    "moments at n=" + std::to_string(n) +
                        ", k=" + std::to_string(k) + ": " + report.observed,
                    log);
    }
  }
  if (ok) {
    const auto identity = bv::check_mean_identity(100);
    ok &= require(identity.pass, identity.observed, log);
  }
  if (ok) log = "formulas equal enumeration moments; identity holds to n=100";
  return ok;
}

// 9. Two-route consistency of the cycle-count law up to n = 200.
bool criterion9(std::string& log) {
  const auto report = bv::check_cycle_count_routes(200);
  if (report.pass) log = "routes identical for every n <= 200";
  else log = report.observed;
  return report.pass;
}

// 10. Simulator fidelity: chi-square fits plus the negative control.
bool criterion10(std::string& log) {
  Timer timer;
  bool ok = true;
  std::string p_values;
  const std::vector<std::tuple<int, int, std::uint64_t>> grid = {
      {4, 1, 101}, {8, 2, 202}, {7, 3, 303}};
  for (const auto& [n, k, seed] : grid) {
    const auto report =
        bv::monte_carlo_fit(BoardingConfig(n, k), 1'000'000, seed);
    ok &= require(report.pass,
                  "fit fails at n=" + std::to_string(n) +
                      ", k=" + std::to_string(k) + ": " + report.observed,
                  log);
    if (!p_values.empty()) p_values += ", ";
    std::ostringstream tmp;
    tmp << "p=" << (report.p_value ? *report.p_value : -1.0);
    p_values += tmp.str();
  }

  const bv::TrialFn corrupted = [](RandomStream&) { return 0; };
  const auto control = bv::monte_carlo_fit_against(
      dist_wrong_k1(4), corrupted, 4, 1, 1'000'000, 404, "corrupted");
  ok &= require(!control.pass, "corrupted simulator was not rejected", log);

  const double elapsed = timer.seconds();
  ok &= require(elapsed < 30.0, "took " + std::to_string(elapsed) + " s", log);
  if (ok) {
    log = p_values + "; negative control rejected; " +
          std::to_string(elapsed) + " s";
  }
  return ok;
}

// 11. The normal limit: strictly decreasing sup-distances along the ladder
//     and the frozen final threshold, for k = 1 and k = 3.
bool criterion11(std::string& log) {
  bool ok = true;
  std::string detail;
  for (const int k : {1, 3}) {
    const auto report =
        bv::clt_check(k, bv::clt_default_ladder(), 100'000, 20240809);
    ok &= require(report.pass,
                  "ladder fails for k=" + std::to_string(k) + ": " +
                      report.observed,
                  log);
    if (!detail.empty()) detail += "; ";
    detail += "k=" + std::to_string(k) + " " + report.observed;
  }
  if (ok) log = detail;
  return ok;
}

// 12. Performance: n = 10^6, k = 1, 100 trials under ten seconds.
bool criterion12(std::string& log) {
  Timer timer;
  SimulationOptions options;
  options.trials = 100;
  options.seed = 7;
  const auto result =
      simulate_wrong_count_histogram(BoardingConfig(1'000'000, 1), options);
  const double elapsed = timer.seconds();
  bool ok = require(elapsed < 10.0,
                    "took " + std::to_string(elapsed) + " s", log);
  std::uint64_t total = 0;
  for (const auto& [w, c] : result.histogram) total += c;
  ok &= require(total == 100, "trial count mismatch", log);
  if (ok) {
    std::ostringstream tmp;
    tmp << "100 trials at n=10^6 in " << elapsed << " s";
    log = tmp.str();
  }
  return ok;
}

}  // namespace

int main(int argc, char** argv) {
  int only = 0;
  for (int a = 1; a < argc; ++a) {
    const std::string arg = argv[a];
    if (arg == "--cli" && a + 1 < argc) g_cli_path = argv[++a];
    if (arg == "--only" && a + 1 < argc) only = std::atoi(argv[++a]);
  }
  if (g_cli_path.empty()) {
    std::cerr << "usage: acceptance --cli <boarding binary> [--only N]\n";
    return 2;
  }

  const std::vector<std::pair<std::string, std::function<bool(std::string&)>>>
      criteria = {
          {"Table reproduction via the CLI", criterion1},
          {"closed-form law at n=4", criterion2},
          {"n=100 law and chart values", criterion3},
          {"last-ball probabilities", criterion4},
          {"feasible counts", criterion5},
          {"independence, every subset", criterion6},
          {"uniformity laws", criterion7},
          {"moment formulas", criterion8},
          {"two-route cycle-count law", criterion9},
          {"simulator chi-square fidelity", criterion10},
          {"normal limit along the ladder", criterion11},
          {"simulation throughput", criterion12},
      };

  bool all_pass = true;
  for (std::size_t c = 0; c < criteria.size(); ++c) {
    const int id = static_cast<int>(c) + 1;
    if (only != 0 && only != id) continue;
    std::string log;
    bool pass = false;
    try {
      pass = criteria[c].second(log);
    } catch (const std::exception& e) {
      log = std::string("exception: ") + e.what();
    }
    std::cout << (pass ? "[PASS]" : "[FAIL]") << " criterion " << id << ": "
              << criteria[c].first << " -- " << log << "\n";
    std::cout.flush();
    all_pass = all_pass && pass;
  }
  return all_pass ? 0 : 1;
}

// Command-line front end: exact enumeration, closed-form and enumerated
// wrong-count laws, seeded simulation, the verification suites, and SVG
// charts.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"

#include "boarding/enumerate.hpp"
#include "boarding/exact.hpp"
#include "boarding/format.hpp"
#include "boarding/simulate.hpp"
#include "boarding/verify.hpp"

namespace {

// Exit codes: 0 success, 2 validation error, 3 enumeration budget exceeded,
// 4 verification failure.
constexpr int kExitOk = 0;
constexpr int kExitValidation = 2;
constexpr int kExitBudget = 3;
constexpr int kExitVerification = 4;

struct CommonFlags {
  int n = 0;
  int k = 1;
  std::uint64_t trials = 0;
  std::uint64_t seed = 0;
  bool seed_set = false;
  std::string format = "table";
  std::string output;
  std::uint64_t budget = boarding::EnumerationOptions{}.leaf_budget;
  unsigned threads = 0;
};

void write_output(const std::string& path, const std::string& payload) {
  if (path.empty()) {
    std::cout << payload;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw std::invalid_argument("cannot open output file: " + path);
  file << payload;
}

int run_enumerate(const CommonFlags& flags) {
  const boarding::BoardingConfig config(flags.n, flags.k);
  const auto outcomes =
      boarding::enumerate_feasible(config, {flags.budget});
  switch (boarding::parse_format(flags.format)) {
    case boarding::OutputFormat::table:
      write_output(flags.output, boarding::render_enumeration_table(outcomes));
      break;
    case boarding::OutputFormat::json:
      write_output(flags.output,
                   boarding::enumeration_to_json(config, outcomes).dump(2) +
                       "\n");
      break;
    case boarding::OutputFormat::csv:
      write_output(flags.output, boarding::render_enumeration_csv(outcomes));
      break;
    case boarding::OutputFormat::svg:
      throw std::invalid_argument("enumerate does not emit svg");
  }
  return kExitOk;
}

boarding::ExactDistribution wrong_law(const boarding::BoardingConfig& config,
                                      std::uint64_t budget) {
  // k = 1 has a closed form with no enumeration budget.
  if (config.k() == 1) return boarding::dist_wrong_k1(config.n());
  return boarding::dist_wrong(config, {budget});
}

int run_dist(const CommonFlags& flags) {
  const boarding::BoardingConfig config(flags.n, flags.k);
  const auto law = wrong_law(config, flags.budget);
  const auto mean = boarding::mean_wrong(config);
  const auto variance = boarding::var_wrong(config);
  switch (boarding::parse_format(flags.format)) {
    case boarding::OutputFormat::table:
      write_output(flags.output, boarding::render_distribution_table(
                                     config, law, mean, variance));
      break;
    case boarding::OutputFormat::json:
      write_output(
          flags.output,
          boarding::distribution_to_json(config, law, mean, variance).dump(2) +
              "\n");
      break;
    case boarding::OutputFormat::csv:
      write_output(flags.output, boarding::render_distribution_csv(law));
      break;
    case boarding::OutputFormat::svg:
      write_output(flags.output,
                   boarding::render_distribution_svg(config, law));
      break;
  }
  return kExitOk;
}

int run_moments(const CommonFlags& flags) {
  const boarding::BoardingConfig config(flags.n, flags.k);
  const auto mean = boarding::mean_wrong(config);
  const auto variance = boarding::var_wrong(config);
  switch (boarding::parse_format(flags.format)) {
    case boarding::OutputFormat::table:
      write_output(flags.output,
                   boarding::render_moments_table(config, mean, variance));
      break;
    case boarding::OutputFormat::json:
      write_output(flags.output,
                   boarding::moments_to_json(config, mean, variance).dump(2) +
                       "\n");
      break;
    default:
      throw std::invalid_argument("moments supports table or json");
  }
  return kExitOk;
}

int run_simulate(const CommonFlags& flags) {
  const boarding::BoardingConfig config(flags.n, flags.k);
  boarding::SimulationOptions options;
  options.trials = flags.trials;
  options.seed = flags.seed;
  options.max_threads = flags.threads;
  const auto result = boarding::simulate_wrong_count_histogram(config, options);

  // Exact comparison columns where the reference law is cheap to build:
  // closed form up to a Stirling-table cap for k = 1, enumeration within
  // budget otherwise.
  constexpr int kExactReferenceMaxN = 500;
  std::optional<boarding::ExactDistribution> reference;
  if (config.k() == 1 && config.n() <= kExactReferenceMaxN) {
    reference = boarding::dist_wrong_k1(config.n());
  } else if (config.k() >= 2 &&
             boarding::count_feasible(config) <= flags.budget) {
    reference = boarding::dist_wrong(config, {flags.budget});
  }
  const boarding::ExactDistribution* ref =
      reference ? &*reference : nullptr;

  switch (boarding::parse_format(flags.format)) {
    case boarding::OutputFormat::table:
      write_output(flags.output,
                   boarding::render_simulation_table(result, ref));
      break;
    case boarding::OutputFormat::json:
      write_output(flags.output,
                   boarding::simulation_to_json(result, ref).dump(2) + "\n");
      break;
    default:
      throw std::invalid_argument("simulate supports table or json");
  }
  // Diagnostics only; stdout stays byte-stable for a fixed seed.
  std::cerr << "throughput: " << static_cast<std::uint64_t>(
                   result.trials_per_second)
            << " trials/s (" << result.trials << " trials in "
            << result.seconds << " s)\n";
  return kExitOk;
}

int run_chart(const CommonFlags& flags) {
  const boarding::BoardingConfig config(flags.n, flags.k);
  const auto law = wrong_law(config, flags.budget);
  write_output(flags.output, boarding::render_distribution_svg(config, law));
  return kExitOk;
}

int run_verify(const std::string& suite,
               const boarding::verify::SuiteOptions& options, bool seed_set,
               const std::string& format, const std::string& output) {
  const bool wants_random = suite == "mc" || suite == "clt" || suite == "all";
  if (wants_random && !seed_set) {
    throw std::invalid_argument("verify: --seed is required for the " +
                                suite + " suite (no silent entropy)");
  }

  std::vector<boarding::verify::VerificationReport> reports;
  if (suite == "exact" || suite == "all") {
    auto batch = boarding::verify::run_exact_suite(options);
    reports.insert(reports.end(), batch.begin(), batch.end());
  }
  if (suite == "mc" || suite == "all") {
    auto batch = boarding::verify::run_monte_carlo_suite(options);
    reports.insert(reports.end(), batch.begin(), batch.end());
  }
  if (suite == "clt" || suite == "all") {
    auto batch = boarding::verify::run_clt_suite(options);
    reports.insert(reports.end(), batch.begin(), batch.end());
  }
  if (reports.empty()) {
    throw std::invalid_argument("verify: unknown suite '" + suite +
                                "' (expected exact, mc, clt, or all)");
  }

  std::string payload;
  bool all_pass = true;
  for (const auto& report : reports) {
    all_pass = all_pass && report.pass;
    if (boarding::parse_format(format) == boarding::OutputFormat::table) {
      payload += std::string(report.pass ? "[pass] " : "[FAIL] ") +
                 report.check + " n=" + std::to_string(report.n) +
                 " k=" + std::to_string(report.k) + ": " + report.observed +
                 "\n";
    } else {
      payload += report.to_json().dump() + "\n";
    }
  }
  write_output(output, payload);
  std::cerr << (all_pass ? "verify: all checks passed, "
                         : "verify: FAILURES among ")
            << reports.size() << " checks\n";
  return all_pass ? kExitOk : kExitVerification;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact and simulated statistics of the absent-minded "
               "passenger boarding process"};
  app.require_subcommand(1);

  CommonFlags flags;
  std::string suite = "exact";
  int max_n = 8;
  int max_k = 3;
  std::uint64_t mc_trials = 1'000'000;
  std::uint64_t clt_trials = 100'000;

  auto add_common = [&](CLI::App* cmd, bool needs_n) {
    auto* n_opt = cmd->add_option("--n", flags.n, "number of seats");
    if (needs_n) n_opt->required();
    cmd->add_option("--k", flags.k, "number of absent-minded passengers")
        ->capture_default_str();
    cmd->add_option("--format", flags.format,
                    "output format: table, json, csv, svg")
        ->capture_default_str();
    cmd->add_option("--output,-o", flags.output, "output path (default stdout)");
    cmd->add_option("--budget", flags.budget,
                    "enumeration leaf budget")
        ->capture_default_str();
    cmd->add_option("--threads", flags.threads,
                    "worker threads (0 = hardware)");
  };

  auto* cmd_enumerate = app.add_subcommand(
      "enumerate", "list all feasible placements with exact probabilities");
  add_common(cmd_enumerate, true);

  auto* cmd_dist = app.add_subcommand(
      "dist", "exact law of the wrong count, with mean and variance");
  add_common(cmd_dist, true);

  auto* cmd_moments =
      app.add_subcommand("moments", "exact mean and variance only");
  add_common(cmd_moments, true);

  auto* cmd_simulate =
      app.add_subcommand("simulate", "seeded Monte Carlo wrong-count histogram");
  add_common(cmd_simulate, true);
  cmd_simulate->add_option("--trials", flags.trials, "number of trials")
      ->required();
  cmd_simulate
      ->add_option("--seed", flags.seed, "random seed (required, no entropy)")
      ->required();

  auto* cmd_verify =
      app.add_subcommand("verify", "run a verification suite, emit reports");
  add_common(cmd_verify, false);
  cmd_verify->add_option("--suite", suite, "exact, mc, clt, or all")
      ->capture_default_str();
  cmd_verify->add_option("--max-n", max_n, "largest n in the exact grid")
      ->capture_default_str();
  cmd_verify->add_option("--max-k", max_k, "largest k in the exact grid")
      ->capture_default_str();
  cmd_verify->add_option("--trials", mc_trials, "trials per chi-square fit")
      ->capture_default_str();
  cmd_verify
      ->add_option("--clt-trials", clt_trials, "trials per CLT ladder rung")
      ->capture_default_str();
  auto* verify_seed =
      cmd_verify->add_option("--seed", flags.seed, "random seed");

  auto* cmd_chart =
      app.add_subcommand("chart", "SVG bar chart of the exact law");
  add_common(cmd_chart, true);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitValidation;
  }

  try {
    if (cmd_enumerate->parsed()) return run_enumerate(flags);
    if (cmd_dist->parsed()) return run_dist(flags);
    if (cmd_moments->parsed()) return run_moments(flags);
    if (cmd_simulate->parsed()) return run_simulate(flags);
    if (cmd_chart->parsed()) {
      flags.format = "svg";
      return run_chart(flags);
    }
    if (cmd_verify->parsed()) {
      boarding::verify::SuiteOptions options;
      options.max_n = max_n;
      options.max_k = max_k;
      options.mc_trials = mc_trials;
      options.clt_trials = clt_trials;
      options.seed = flags.seed;
      options.leaf_budget = flags.budget;
      options.max_threads = flags.threads;
      // Reports stream as JSON lines unless a table is asked for explicitly.
      const std::string format =
          cmd_verify->count("--format") > 0 ? flags.format : "json";
      return run_verify(suite, options, !verify_seed->empty(), format,
                        flags.output);
    }
  } catch (const boarding::BudgetExceededError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBudget;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return kExitValidation;
}

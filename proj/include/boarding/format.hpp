#pragma once

#include <string>

#include "json.hpp"

#include "boarding/distribution.hpp"
#include "boarding/simulate.hpp"
#include "boarding/types.hpp"

namespace boarding {

enum class OutputFormat { table, json, csv, svg };

OutputFormat parse_format(const std::string& name);

/// Fractions serialize as decimal strings, never floats; 100!-sized
/// denominators survive the round trip losslessly.
nlohmann::json fraction_to_json(const BigRational& q);
BigRational fraction_from_json(const nlohmann::json& j);

// --- enumerate ---
std::string render_enumeration_table(
    const std::vector<WeightedPlacement>& outcomes);
nlohmann::json enumeration_to_json(
    const BoardingConfig& config,
    const std::vector<WeightedPlacement>& outcomes);
std::string render_enumeration_csv(
    const std::vector<WeightedPlacement>& outcomes);

// --- dist / moments ---
std::string render_distribution_table(const BoardingConfig& config,
                                      const ExactDistribution& law,
                                      const BigRational& mean,
                                      const BigRational& variance);
nlohmann::json distribution_to_json(const BoardingConfig& config,
                                    const ExactDistribution& law,
                                    const BigRational& mean,
                                    const BigRational& variance);
/// Schema: value,probability_num,probability_den,probability_decimal
std::string render_distribution_csv(const ExactDistribution& law);

std::string render_moments_table(const BoardingConfig& config,
                                 const BigRational& mean,
                                 const BigRational& variance);
nlohmann::json moments_to_json(const BoardingConfig& config,
                               const BigRational& mean,
                               const BigRational& variance);

// --- simulate ---
std::string render_simulation_table(const SimulationResult& result,
                                    const ExactDistribution* reference);
nlohmann::json simulation_to_json(const SimulationResult& result,
                                  const ExactDistribution* reference);

// --- chart ---
/// Hand-emitted SVG bar chart of an exact pmf: fixed 800x500 viewBox, one
/// bar per support value, y ticks every 0.05. Bit-stable for golden tests.
std::string render_distribution_svg(const BoardingConfig& config,
                                    const ExactDistribution& law);

}  // namespace boarding

#include "boarding/format.hpp"

#include "boarding/derive.hpp"

#include <cstdio>
#include <sstream>

namespace boarding {

namespace {

std::string fixed(double value, int places) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.*f", places, value);
  return buffer;
}

std::string permutation_str(const Placement& p) {
  std::string out;
  for (int ball = 1; ball <= p.n(); ++ball) {
    if (ball > 1) out += " ";
    out += std::to_string(p.seat(ball));
  }
  return out;
}

}  // namespace

OutputFormat parse_format(const std::string& name) {
  if (name == "table") return OutputFormat::table;
  if (name == "json") return OutputFormat::json;
  if (name == "csv") return OutputFormat::csv;
  if (name == "svg") return OutputFormat::svg;
  throw std::invalid_argument("unknown format: " + name);
}

nlohmann::json fraction_to_json(const BigRational& q) {
  return nlohmann::json{{"num", numerator(q).str()},
                        {"den", denominator(q).str()}};
}

BigRational fraction_from_json(const nlohmann::json& j) {
  const BigInt num(j.at("num").get<std::string>());
  const BigInt den(j.at("den").get<std::string>());
  return BigRational(num, den);
}

std::string render_enumeration_table(
    const std::vector<WeightedPlacement>& outcomes) {
  std::ostringstream out;
  out << "placement | probability | wrong\n";
  for (const auto& outcome : outcomes) {
    out << permutation_str(outcome.placement) << " | "
        << fraction_str(outcome.probability) << " | "
        << wrong_count(outcome.placement) << "\n";
  }
  return out.str();
}

nlohmann::json enumeration_to_json(
    const BoardingConfig& config,
    const std::vector<WeightedPlacement>& outcomes) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& outcome : outcomes) {
    rows.push_back(nlohmann::json{
        {"placement", outcome.placement.seats()},
        {"probability", fraction_to_json(outcome.probability)},
        {"probability_decimal", to_double(outcome.probability)},
        {"wrong", wrong_count(outcome.placement)}});
  }
  return nlohmann::json{{"n", config.n()},
                        {"k", config.k()},
                        {"count", outcomes.size()},
                        {"placements", rows}};
}

std::string render_enumeration_csv(
    const std::vector<WeightedPlacement>& outcomes) {
  std::string out =
      "placement,probability_num,probability_den,probability_decimal,wrong\n";
  for (const auto& outcome : outcomes) {
    std::string seats = permutation_str(outcome.placement);
    out += "\"" + seats + "\"," + numerator(outcome.probability).str() + "," +
           denominator(outcome.probability).str() + "," +
           decimal_str(outcome.probability, 6) + "," +
           std::to_string(wrong_count(outcome.placement)) + "\n";
  }
  return out;
}

std::string render_distribution_table(const BoardingConfig& config,
                                      const ExactDistribution& law,
                                      const BigRational& mean,
                                      const BigRational& variance) {
  std::ostringstream out;
  out << "wrong-count law for n=" << config.n() << ", k=" << config.k()
      << "\n";
  out << "value | probability | decimal\n";
  for (const auto& [value, p] : law.pmf()) {
    out << value << " | " << fraction_str(p) << " | " << decimal_str(p, 6)
        << "\n";
  }
  out << "mean: " << fraction_str(mean) << " (" << decimal_str(mean, 6)
      << ")\n";
  out << "variance: " << fraction_str(variance) << " ("
      << decimal_str(variance, 6) << ")\n";
  return out.str();
}

nlohmann::json distribution_to_json(const BoardingConfig& config,
                                    const ExactDistribution& law,
                                    const BigRational& mean,
                                    const BigRational& variance) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& [value, p] : law.pmf()) {
    rows.push_back(nlohmann::json{{"value", value},
                                  {"probability", fraction_to_json(p)},
                                  {"probability_decimal", to_double(p)}});
  }
  return nlohmann::json{{"n", config.n()},
                        {"k", config.k()},
                        {"pmf", rows},
                        {"mean", fraction_to_json(mean)},
                        {"mean_decimal", to_double(mean)},
                        {"variance", fraction_to_json(variance)},
                        {"variance_decimal", to_double(variance)}};
}

std::string render_distribution_csv(const ExactDistribution& law) {
  std::string out = "value,probability_num,probability_den,probability_decimal\n";
  for (const auto& [value, p] : law.pmf()) {
    out += std::to_string(value) + "," + numerator(p).str() + "," +
           denominator(p).str() + "," + decimal_str(p, 6) + "\n";
  }
  return out;
}

std::string render_moments_table(const BoardingConfig& config,
                                 const BigRational& mean,
                                 const BigRational& variance) {
  std::ostringstream out;
  out << "moments for n=" << config.n() << ", k=" << config.k() << "\n";
  out << "mean: " << fraction_str(mean) << " (" << decimal_str(mean, 6)
      << ")\n";
  out << "variance: " << fraction_str(variance) << " ("
      << decimal_str(variance, 6) << ")\n";
  return out.str();
}

nlohmann::json moments_to_json(const BoardingConfig& config,
                               const BigRational& mean,
                               const BigRational& variance) {
  return nlohmann::json{{"n", config.n()},
                        {"k", config.k()},
                        {"mean", fraction_to_json(mean)},
                        {"mean_decimal", to_double(mean)},
                        {"variance", fraction_to_json(variance)},
                        {"variance_decimal", to_double(variance)}};
}

std::string render_simulation_table(const SimulationResult& result,
                                    const ExactDistribution* reference) {
  std::ostringstream out;
  out << "simulation n=" << result.config.n() << " k=" << result.config.k()
      << " trials=" << result.trials << " seed=" << result.seed << "\n";
  out << "generator: " << result.generator << " (" << result.streams
      << " streams)\n";
  out << (reference != nullptr ? "wrong | count | frequency | exact | error\n"
                               : "wrong | count | frequency\n");
  for (const auto& [value, count] : result.histogram) {
    const double freq =
        static_cast<double>(count) / static_cast<double>(result.trials);
    out << value << " | " << count << " | " << fixed(freq, 6);
    if (reference != nullptr) {
      const double exact = to_double(reference->mass_at(value));
      out << " | " << fixed(exact, 6) << " | " << fixed(freq - exact, 6);
    }
    out << "\n";
  }
  out << "sample mean: " << fixed(result.sample_mean, 6) << "\n";
  out << "sample variance: " << fixed(result.sample_variance, 6) << "\n";
  return out.str();
}

nlohmann::json simulation_to_json(const SimulationResult& result,
                                  const ExactDistribution* reference) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& [value, count] : result.histogram) {
    nlohmann::json row{
        {"value", value},
        {"count", count},
        {"frequency",
         static_cast<double>(count) / static_cast<double>(result.trials)}};
    if (reference != nullptr) {
      row["exact"] = fraction_to_json(reference->mass_at(value));
      row["exact_decimal"] = to_double(reference->mass_at(value));
    }
    rows.push_back(row);
  }
  return nlohmann::json{{"n", result.config.n()},
                        {"k", result.config.k()},
                        {"trials", result.trials},
                        {"seed", result.seed},
                        {"generator", result.generator},
                        {"streams", result.streams},
                        {"histogram", rows},
                        {"sample_mean", result.sample_mean},
                        {"sample_variance", result.sample_variance}};
}

std::string render_distribution_svg(const BoardingConfig& config,
                                    const ExactDistribution& law) {
  constexpr double kWidth = 800.0;
  constexpr double kHeight = 500.0;
  constexpr double kLeft = 70.0;
  constexpr double kRight = 20.0;
  constexpr double kTop = 40.0;
  constexpr double kBottom = 60.0;
  const double plot_w = kWidth - kLeft - kRight;
  const double plot_h = kHeight - kTop - kBottom;

  const int lo = law.pmf().begin()->first;
  const int hi = law.pmf().rbegin()->first;
  const int slots = hi - lo + 1;

  double max_p = 0.0;
  for (const auto& [value, p] : law.pmf()) {
    max_p = std::max(max_p, to_double(p));
  }
  // Y axis ticks every 0.05, rounded up to cover the tallest bar.
  const int tick_count = static_cast<int>(max_p / 0.05) + 1;
  const double y_max = tick_count * 0.05;

  const double slot_w = plot_w / slots;
  const double bar_w = slot_w * 0.8;

  auto x_of = [&](int value) {
    return kLeft + (value - lo) * slot_w + (slot_w - bar_w) / 2.0;
  };
  auto y_of = [&](double p) { return kTop + plot_h * (1.0 - p / y_max); };

  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 800 500\" "
         "width=\"800\" height=\"500\">\n";
  svg << "<rect x=\"0\" y=\"0\" width=\"800\" height=\"500\" "
         "fill=\"white\"/>\n";
  svg << "<text x=\"" << fixed(kLeft, 1) << "\" y=\"24\" font-family=\"sans-serif\" "
         "font-size=\"16\">P(W = w), n=" << config.n()
      << ", k=" << config.k() << "</text>\n";

  // Axes.
  svg << "<line x1=\"" << fixed(kLeft, 1) << "\" y1=\"" << fixed(kTop, 1)
      << "\" x2=\"" << fixed(kLeft, 1) << "\" y2=\""
      << fixed(kTop + plot_h, 1) << "\" stroke=\"black\"/>\n";
  svg << "<line x1=\"" << fixed(kLeft, 1) << "\" y1=\""
      << fixed(kTop + plot_h, 1) << "\" x2=\"" << fixed(kLeft + plot_w, 1)
      << "\" y2=\"" << fixed(kTop + plot_h, 1) << "\" stroke=\"black\"/>\n";

  for (int t = 1; t <= tick_count; ++t) {
    const double p = t * 0.05;
    const double y = y_of(p);
    svg << "<line x1=\"" << fixed(kLeft - 5, 1) << "\" y1=\"" << fixed(y, 2)
        << "\" x2=\"" << fixed(kLeft, 1) << "\" y2=\"" << fixed(y, 2)
        << "\" stroke=\"black\"/>\n";
    svg << "<text x=\"" << fixed(kLeft - 10, 1) << "\" y=\"" << fixed(y + 4, 2)
        << "\" font-family=\"sans-serif\" font-size=\"12\" "
           "text-anchor=\"end\">" << fixed(p, 2) << "</text>\n";
  }

  const int label_step = slots <= 25 ? 1 : (slots + 24) / 25;
  for (int value = lo; value <= hi; ++value) {
    if ((value - lo) % label_step != 0) continue;
    const double cx = x_of(value) + bar_w / 2.0;
    svg << "<text x=\"" << fixed(cx, 2) << "\" y=\""
        << fixed(kTop + plot_h + 18, 1)
        << "\" font-family=\"sans-serif\" font-size=\"12\" "
           "text-anchor=\"middle\">" << value << "</text>\n";
  }
  svg << "<text x=\"" << fixed(kLeft + plot_w / 2.0, 1) << "\" y=\""
      << fixed(kHeight - 16, 1)
      << "\" font-family=\"sans-serif\" font-size=\"14\" "
         "text-anchor=\"middle\">w</text>\n";

  for (const auto& [value, p] : law.pmf()) {
    const double height = plot_h * to_double(p) / y_max;
    svg << "<rect x=\"" << fixed(x_of(value), 2) << "\" y=\""
        << fixed(kTop + plot_h - height, 2) << "\" width=\""
        << fixed(bar_w, 2) << "\" height=\"" << fixed(height, 2)
        << "\" fill=\"#4878a8\"><title>P(W=" << value << ") = "
        << decimal_str(p, 6) << "</title></rect>\n";
  }

  svg << "</svg>\n";
  return svg.str();
}

}  // namespace boarding

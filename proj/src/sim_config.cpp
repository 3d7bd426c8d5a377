#include "eprb/sim_config.hpp"

#include <cmath>

#include "eprb/errors.hpp"
#include "eprb/rng.hpp"
#include "eprb/station_log.hpp"

namespace eprb {

std::string to_string(Experiment e) { return e == Experiment::kI ? "I" : "II"; }

Experiment parse_experiment(const std::string& text) {
  if (text == "I" || text == "1") return Experiment::kI;
  if (text == "II" || text == "2") return Experiment::kII;
  throw ConfigError("experiment must be I or II, got '" + text + "'");
}

void validate(const SimConfig& c) {
  if (c.n_events < 1) throw ConfigError("n_events must be at least 1");
  if (!(c.delay_exponent >= 0.0) || !std::isfinite(c.delay_exponent)) {
    throw ConfigError("delay exponent d must be finite and >= 0");
  }
  if (!(c.learning > 0.0 && c.learning < 1.0)) throw ConfigError("learning parameter l must lie in (0, 1)");
  if (!(c.tag_resolution > 0.0) || !std::isfinite(c.tag_resolution)) {
    throw ConfigError("tag resolution tau must be positive");
  }
  if (!(c.window >= c.tag_resolution)) throw ConfigError("window W must satisfy W >= tau");
  if (!(c.max_delay > 0.0) || !std::isfinite(c.max_delay)) throw ConfigError("max delay T0 must be positive");
}

SimConfig with_theta_settings(SimConfig config, double theta) {
  return with_layout(std::move(config), theta, Layout::kLadder);
}

Layout default_layout(Experiment e) { return e == Experiment::kI ? Layout::kLadder : Layout::kFixedPair; }

std::array<double, 4> layout_angles(Layout layout, double theta) {
  if (layout == Layout::kLadder) return {0.0, 2 * theta, theta, 3 * theta};
  return {theta, theta, theta + kPi / 4, theta + kPi / 4};
}

SimConfig with_layout(SimConfig config, double theta, Layout layout) {
  const auto [a, ap, b, bp] = layout_angles(layout, theta);
  config.settings_1 = {Angle::radians(a), Angle::radians(ap)};
  config.settings_2 = {Angle::radians(b), Angle::radians(bp)};
  return config;
}

std::vector<std::pair<std::string, std::string>> manifest(const SimConfig& c) {
  return {
      {"experiment", to_string(c.experiment)},
      {"n_events", std::to_string(c.n_events)},
      {"d", format_real(c.delay_exponent)},
      {"l", format_real(c.learning)},
      {"tau", format_real(c.tag_resolution)},
      {"window", format_real(c.window)},
      {"T0", format_real(c.max_delay)},
      {"theta1", format_real(c.settings_1[0].value())},
      {"theta1p", format_real(c.settings_1[1].value())},
      {"theta2", format_real(c.settings_2[0].value())},
      {"theta2p", format_real(c.settings_2[1].value())},
      {"xi", format_real(c.source_angle.value())},
      {"seed", std::to_string(c.seed)},
      {"rng", std::string(RngStream::kAlgorithm)},
  };
}

}  // namespace eprb

#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "eprb/angle.hpp"

namespace eprb {

/// Experiment I: pairs with random orthogonal polarizations (singlet-like).
/// Experiment II: pairs with fixed polarizations (xi, xi + pi/2).
enum class Experiment { kI, kII };

std::string to_string(Experiment e);
Experiment parse_experiment(const std::string& text);

struct SimConfig {
  Experiment experiment = Experiment::kI;
  std::uint64_t n_events = 1'000'000;
  double delay_exponent = 2.0;  // d
  double learning = 0.999;      // l
  double tag_resolution = 0.00025;  // tau, units of max_delay
  double window = 0.00025;      // W, units of max_delay; +inf disables the window
  double max_delay = 1.0;       // T0
  std::array<Angle, 2> settings_1{Angle::radians(0.0), Angle::radians(kPi / 4)};
  std::array<Angle, 2> settings_2{Angle::radians(kPi / 8), Angle::radians(3 * kPi / 8)};
  Angle source_angle = Angle::radians(kPi / 6);  // Experiment II only
  std::uint64_t seed = 0;
};

/// Throws ConfigError on the first violated constraint.
void validate(const SimConfig& config);

/// Settings for the S(theta) layout: station 1 at (0, 2 theta), station 2 at (theta, 3 theta).
SimConfig with_theta_settings(SimConfig config, double theta);

/// Angle assignment used to scan a CHSH curve S(theta).
enum class Layout {
  kLadder,     // a = 0, a' = 2 theta, b = theta, b' = 3 theta
  kFixedPair,  // a = a' = theta, b = b' = theta + pi/4
};

/// kLadder for Experiment I, kFixedPair for Experiment II.
Layout default_layout(Experiment e);

/// Settings (a, a', b, b') for `layout` at `theta`.
std::array<double, 4> layout_angles(Layout layout, double theta);

/// Station settings set to layout_angles(layout, theta).
SimConfig with_layout(SimConfig config, double theta, Layout layout);

/// `key=value` echo of every field, in a fixed order.
std::vector<std::pair<std::string, std::string>> manifest(const SimConfig& config);

}  // namespace eprb

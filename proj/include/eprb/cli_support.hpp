#pragma once

#include <string>
#include <vector>

namespace eprb::cli {

/// Radians from "0.39", "pi", "pi/8", "3pi/8", "3*pi/8", "-pi/4" or "0.5pi".
double parse_angle(const std::string& text);

/// Comma-separated reals; "inf" is accepted.
std::vector<double> parse_real_list(const std::string& text);

/// Seconds from a number with an optional unit suffix: s, ms, us, ns, ps.
/// Unitless numbers are taken in `default_unit` seconds.
double parse_duration(const std::string& text, double default_unit = 1e-9);

/// Durations in seconds from "1ns..20ns" (unit steps of the start value's
/// unit), "1ns..20ns:0.5ns", or a comma-separated list "1ns,2ns,5ns".
std::vector<double> parse_duration_list(const std::string& text, double default_unit = 1e-9);

/// Integer range a..b (inclusive) or comma list.
std::vector<double> parse_range_or_list(const std::string& text);

}  // namespace eprb::cli

#include "eprb/cli_support.hpp"

#include <charconv>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string_view>
#include <utility>

#include "eprb/angle.hpp"

namespace eprb::cli {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

double parse_plain(std::string_view s, const std::string& context) {
  s = trim(s);
  if (s == "inf" || s == "+inf") return std::numeric_limits<double>::infinity();
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  double v = 0.0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size()) {
    throw std::invalid_argument("cannot parse number '" + std::string(s) + "' in '" + context + "'");
  }
  return v;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  while (true) {
    auto pos = s.find(sep);
    out.push_back(trim(s.substr(0, pos)));
    if (pos == std::string_view::npos) break;
    s.remove_prefix(pos + 1);
  }
  return out;
}

// Splits "12.5ns" into (12.5, 1e-9). Unit is 0 when absent.
std::pair<double, double> number_and_unit(std::string_view s, const std::string& context) {
  s = trim(s);
  static constexpr std::pair<std::string_view, double> kUnits[] = {
      {"ns", 1e-9}, {"us", 1e-6}, {"ms", 1e-3}, {"ps", 1e-12}, {"s", 1.0}};
  for (const auto& [suffix, scale] : kUnits) {
    if (s.size() > suffix.size() && s.substr(s.size() - suffix.size()) == suffix) {
      return {parse_plain(s.substr(0, s.size() - suffix.size()), context), scale};
    }
  }
  return {parse_plain(s, context), 0.0};
}

}  // namespace

double parse_angle(const std::string& text) {
  std::string_view s = trim(text);
  if (s.empty()) throw std::invalid_argument("empty angle");
  const auto pi_pos = s.find("pi");
  if (pi_pos == std::string_view::npos) return parse_plain(s, text);

  std::string_view coeff = trim(s.substr(0, pi_pos));
  if (!coeff.empty() && coeff.back() == '*') coeff = trim(coeff.substr(0, coeff.size() - 1));
  double factor = 1.0;
  if (coeff == "-") {
    factor = -1.0;
  } else if (!coeff.empty() && coeff != "+") {
    factor = parse_plain(coeff, text);
  }

  std::string_view rest = trim(s.substr(pi_pos + 2));
  double divisor = 1.0;
  if (!rest.empty()) {
    if (rest.front() != '/') throw std::invalid_argument("cannot parse angle '" + text + "'");
    divisor = parse_plain(rest.substr(1), text);
    if (divisor == 0.0) throw std::invalid_argument("division by zero in angle '" + text + "'");
  }
  return factor * kPi / divisor;
}

std::vector<double> parse_real_list(const std::string& text) {
  std::vector<double> out;
  if (trim(text).empty()) return out;
  for (auto part : split(text, ',')) out.push_back(parse_plain(part, text));
  return out;
}

double parse_duration(const std::string& text, double default_unit) {
  auto [value, unit] = number_and_unit(text, text);
  return value * (unit == 0.0 ? default_unit : unit);
}

std::vector<double> parse_duration_list(const std::string& text, double default_unit) {
  std::string_view s = trim(text);
  std::vector<double> out;
  if (s.empty()) return out;

  const auto dots = s.find("..");
  if (dots == std::string_view::npos) {
    for (auto part : split(s, ',')) out.push_back(parse_duration(std::string(part), default_unit));
    return out;
  }

  std::string_view first = s.substr(0, dots);
  std::string_view rest = s.substr(dots + 2);
  std::string_view step_text;
  if (auto colon = rest.find(':'); colon != std::string_view::npos) {
    step_text = rest.substr(colon + 1);
    rest = rest.substr(0, colon);
  }
  auto [start_value, start_unit] = number_and_unit(first, text);
  const double unit = start_unit == 0.0 ? default_unit : start_unit;
  const double start = start_value * unit;
  const double stop = parse_duration(std::string(rest), unit);
  const double step = step_text.empty() ? unit : parse_duration(std::string(step_text), unit);
  if (!(step > 0.0)) throw std::invalid_argument("range step must be positive in '" + text + "'");
  if (stop < start) throw std::invalid_argument("range end precedes start in '" + text + "'");

  const auto n = static_cast<std::size_t>(std::floor((stop - start) / step + 1e-9));
  for (std::size_t i = 0; i <= n; ++i) out.push_back(start + static_cast<double>(i) * step);
  return out;
}

std::vector<double> parse_range_or_list(const std::string& text) {
  std::string_view s = trim(text);
  const auto dots = s.find("..");
  if (dots == std::string_view::npos) return parse_real_list(text);
  const double a = parse_plain(s.substr(0, dots), text);
  const double b = parse_plain(s.substr(dots + 2), text);
  if (b < a) throw std::invalid_argument("range end precedes start in '" + text + "'");
  std::vector<double> out;
  for (double v = a; v <= b + 1e-9; v += 1.0) out.push_back(v);
  return out;
}

}  // namespace eprb::cli

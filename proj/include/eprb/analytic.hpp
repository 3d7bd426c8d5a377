#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace eprb {

/// Polarization-dependent delay scale T = T0 |sin 2(xi - theta)|^d.
struct DelayProfile {
  double d = 2.0;
  double max_delay = 1.0;

  double scale(double xi, double theta) const;
};

/// Number of integer pairs (k1, k2), 1 <= ki <= Ki, with |k1 - k2| < k,
/// from the closed-form pair-count expression.
std::int64_t pair_count(std::int64_t K1, std::int64_t K2, std::int64_t k);

/// The same count by direct enumeration of the K1 x K2 grid.
std::int64_t pair_count_enumerated(std::int64_t K1, std::int64_t K2, std::int64_t k);

/// C(K1, K2, k) / (K1 K2) with Ki = max(1, ceil(Ti / tau)) and k = ceil(W / tau).
double coincidence_density(double T1, double T2, double tau, double window);

enum class WindowRegime {
  kFinite,     // discrete bins of width tau, window W
  kZeroLimit,  // W = tau -> 0: density proportional to 1 / max(T1, T2)
  kInfinite,   // every pair coincides
};

struct WindowSpec {
  WindowRegime regime = WindowRegime::kFinite;
  double tau = 1e-4;
  double window = 1e-4;

  static WindowSpec finite(double tau, double window) { return {WindowRegime::kFinite, tau, window}; }
  static WindowSpec zero_limit() { return {WindowRegime::kZeroLimit, 0.0, 0.0}; }
  static WindowSpec infinite() { return {WindowRegime::kInfinite, 0.0, 0.0}; }
};

/// N -> infinity correlation of the time-tag model:
///   E = -sum x1 x2 P / sum P
/// over a shifted midpoint grid in xi on [0, 2 pi), with
/// x_i = sign(cos 2(xi - angle_i)) and P the coincidence density.
/// Throws NoDataError if the mean density falls below 1e-12.
double correlation_numeric(double alpha, double beta, const DelayProfile& profile, const WindowSpec& window,
                           int quad_points);

/// Closed forms of the same limit. kZeroLimit supports d in {0, 1, 2, 4};
/// kInfinite holds for every d. Anything else throws UnsupportedExponent.
double correlation_closed_form(double alpha, double beta, double d, WindowRegime regime);

/// S_max versus W/tau from correlation_numeric. Each ratio must be >= 1.
std::vector<std::pair<double, double>> smax_curve(double d, const std::vector<double>& w_over_tau,
                                                  double tau, int quad_points, int grid);

}  // namespace eprb

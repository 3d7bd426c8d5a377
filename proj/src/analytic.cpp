#include "eprb/analytic.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "eprb/angle.hpp"
#include "eprb/coincidence.hpp"
#include "eprb/errors.hpp"

namespace eprb {

double DelayProfile::scale(double xi, double theta) const {
  if (d == 0.0) return max_delay;
  return max_delay * std::pow(std::fabs(std::sin(2.0 * (xi - theta))), d);
}

std::int64_t pair_count(std::int64_t K1, std::int64_t K2, std::int64_t k) {
  if (K1 < 1 || K2 < 1 || k < 1) throw std::invalid_argument("pair_count needs K1, K2, k >= 1");
  // The expression is symmetric in K1, K2 as written, so no relabelling is needed.
  const std::int64_t k12 = std::min(K1, K2);
  const std::int64_t k0 = std::min(k12, k);
  const std::int64_t K12 = k12 - std::max<std::int64_t>(0, std::max(K1, K2) - k);
  return (2 * k0 - 1) * k12 - k0 * (k0 - 1) / 2 -
         std::max<std::int64_t>(0, (K12 - 1) * std::max<std::int64_t>(0, K12) / 2) +
         std::max<std::int64_t>(0, k - k0) * k0 - std::max<std::int64_t>(0, k * k12 - K1 * K2);
}

std::int64_t pair_count_enumerated(std::int64_t K1, std::int64_t K2, std::int64_t k) {
  std::int64_t count = 0;
  for (std::int64_t a = 1; a <= K1; ++a)
    for (std::int64_t b = 1; b <= K2; ++b)
      if (std::llabs(a - b) < k) ++count;
  return count;
}

namespace {

// Keeps every coincidence count below the int64 products in pair_count.
std::int64_t clamp_window_bins(std::int64_t k, std::int64_t K1, std::int64_t K2) {
  return std::min(k, std::max(K1, K2) + 1);
}

double density_finite(double T1, double T2, double tau, std::int64_t k) {
  const std::int64_t K1 = discretize_tag(T1, tau);
  const std::int64_t K2 = discretize_tag(T2, tau);
  const std::int64_t c = pair_count(K1, K2, clamp_window_bins(k, K1, K2));
  return static_cast<double>(c) / (static_cast<double>(K1) * static_cast<double>(K2));
}

double sign(double v) { return v > 0.0 ? 1.0 : (v < 0.0 ? -1.0 : 0.0); }

// Nodes sit at +-(j + offset) cells from the center. The irrational offset
// keeps them off the sign discontinuities at pi-rational angles.
constexpr double kGridOffset = 0.5 + 0.011803398874989485;

// Distance of x from the nearest multiple of period.
double distance_to_multiple(double x, double period) {
  double r = std::fmod(std::fabs(x), period);
  return std::min(r, period - r);
}

}  // namespace

double coincidence_density(double T1, double T2, double tau, double window) {
  if (!(tau > 0.0) || !(window >= tau)) throw std::invalid_argument("coincidence_density needs 0 < tau <= W");
  return density_finite(T1, T2, tau, window_bins(window, tau));
}

double correlation_numeric(double alpha, double beta, const DelayProfile& profile, const WindowSpec& window,
                           int quad_points) {
  if (quad_points < 1000) throw std::invalid_argument("correlation_numeric needs quad_points >= 1000");
  if (window.regime == WindowRegime::kFinite && (!(window.tau > 0.0) || !(window.window >= window.tau))) {
    throw std::invalid_argument("finite window needs 0 < tau <= W");
  }

  if (window.regime == WindowRegime::kZeroLimit && profile.d >= 1.0) {
    // The limiting integrand is not integrable at a common zero of T1 and T2;
    // there the answer is fixed by perfect (anti)correlation.
    const double delta = alpha - beta;
    if (distance_to_multiple(delta, kPi) < 1e-3) return -1.0;
    if (distance_to_multiple(delta - kPi / 2, kPi) < 1e-3) return 1.0;
  }

  const std::int64_t k =
      window.regime == WindowRegime::kFinite ? window_bins(window.window, window.tau) : 1;
  // Integrate in the frame centered between the two settings, on a grid that
  // is mirror-symmetric about that center. The result then depends on
  // beta - alpha only and is unchanged when alpha and beta are exchanged.
  const double center = 0.5 * (alpha + beta);
  const double a = alpha - center;
  const double b = beta - center;
  const int half = (quad_points + 1) / 2;
  const double h = kPi / half;
  double num = 0.0;
  double den = 0.0;
  auto accumulate = [&](double xi) {
    double p = 1.0;
    if (window.regime != WindowRegime::kInfinite) {
      const double T1 = profile.scale(xi, a);
      const double T2 = profile.scale(xi, b);
      p = window.regime == WindowRegime::kFinite ? density_finite(T1, T2, window.tau, k)
                                                 : 1.0 / std::max(T1, T2);
    }
    num += sign(std::cos(2.0 * (xi - a))) * sign(std::cos(2.0 * (xi - b))) * p;
    den += p;
  };
  for (int j = 0; j < half; ++j) {
    const double offset = (j + kGridOffset) * h;
    accumulate(offset);
    accumulate(-offset);
  }
  quad_points = 2 * half;
  if (!(den / quad_points >= 1e-12)) throw NoDataError("coincidence density vanishes for this configuration");
  return -num / den;
}

double correlation_closed_form(double alpha, double beta, double d, WindowRegime regime) {
  const double delta = alpha - beta;
  // Triangle wave: -1 at delta = 0 mod pi, +1 at delta = pi/2 mod pi.
  auto sawtooth = [&] { return -1.0 + 4.0 * distance_to_multiple(delta, kPi) / kPi; };

  if (regime == WindowRegime::kInfinite) return sawtooth();
  if (regime == WindowRegime::kFinite) {
    throw std::invalid_argument("closed forms exist only for the W -> 0 and W -> infinity limits");
  }

  if (d == 0.0) return sawtooth();
  if (d == 2.0) return -std::cos(2.0 * delta);
  if (d == 4.0) {
    const double c = std::cos(2.0 * delta);
    return -(3.0 - c * c) * c / 2.0;
  }
  if (d == 1.0) {
    // 1 - |cos| and 1 - |sin| written as 2 sin^2 of half the distance to the
    // nearest zero, which keeps both logarithms finite near the limits.
    const double r = distance_to_multiple(delta, kPi);
    const double q = distance_to_multiple(delta - kPi / 2, kPi);
    const double lc = std::log((1.0 + std::cos(r)) / (2.0 * std::pow(std::sin(r / 2), 2)));
    const double ls = std::log((1.0 + std::cos(q)) / (2.0 * std::pow(std::sin(q / 2), 2)));
    if (std::isinf(lc)) return -1.0;
    if (std::isinf(ls)) return 1.0;
    return -(lc - ls) / (lc + ls);
  }
  throw UnsupportedExponent("no closed form for d = " + std::to_string(d) + " (supported: 0, 1, 2, 4)");
}

std::vector<std::pair<double, double>> smax_curve(double d, const std::vector<double>& w_over_tau,
                                                  double tau, int quad_points, int grid) {
  const DelayProfile profile{d, 1.0};
  std::vector<std::pair<double, double>> out;
  out.reserve(w_over_tau.size());
  for (double ratio : w_over_tau) {
    if (!(ratio >= 1.0)) throw std::invalid_argument("W/tau values must be >= 1");
    const WindowSpec window = WindowSpec::finite(tau, ratio * tau);
    const CorrelationFn e = [&](double a, double b) {
      return correlation_numeric(a, b, profile, window, quad_points);
    };
    out.emplace_back(ratio, s_max(e, grid, Symmetry::kRotationInvariant));
  }
  return out;
}

}  // namespace eprb

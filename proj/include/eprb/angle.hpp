#pragma once

#include <cmath>
#include <numbers>

namespace eprb {

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

/// An angle in radians, stored normalized to [0, 2pi).
class Angle {
 public:
  constexpr Angle() = default;

  static Angle radians(double value) { return Angle(normalize(value)); }

  double value() const noexcept { return value_; }

  /// Polarization has period pi; this is the representative in [0, pi).
  double mod_pi() const noexcept {
    double r = std::fmod(value_, kPi);
    return r < 0.0 ? r + kPi : r;
  }

  /// Equality of polarizer orientations (period pi).
  bool same_orientation(Angle other, double tol = 1e-12) const noexcept {
    double diff = std::fabs(mod_pi() - other.mod_pi());
    return diff <= tol || kPi - diff <= tol;
  }

  friend bool operator==(Angle, Angle) = default;

 private:
  explicit Angle(double normalized) : value_(normalized) {}

  static double normalize(double v) {
    if (v >= 0.0 && v < kTwoPi) return v;
    if (v >= kTwoPi && v < 2 * kTwoPi) return v - kTwoPi;
    double r = std::fmod(v, kTwoPi);
    if (r < 0.0) r += kTwoPi;
    // fmod of a tiny negative number can round up to exactly 2pi.
    if (r >= kTwoPi) r = 0.0;
    return r;
  }

  double value_ = 0.0;
};

}  // namespace eprb

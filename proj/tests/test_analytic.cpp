#include <doctest.h>

#include <cmath>

#include "eprb/analytic.hpp"
#include "eprb/angle.hpp"
#include "eprb/errors.hpp"
#include "eprb/rng.hpp"

using namespace eprb;

TEST_CASE("pair count examples") {
  CHECK(pair_count(3, 5, 1) == 3);
  CHECK(pair_count(4, 4, 10) == 16);
  CHECK(pair_count(3, 5, 2) == 8);
  CHECK(pair_count_enumerated(3, 5, 2) == 8);
  CHECK(pair_count(1, 1, 1) == 1);
  CHECK(pair_count(7, 2, 1) == 2);
}

TEST_CASE("pair count agrees with enumeration on the full grid") {
  int mismatches = 0;
  for (std::int64_t k1 = 1; k1 <= 30; ++k1)
    for (std::int64_t k2 = 1; k2 <= 30; ++k2)
      for (std::int64_t k = 1; k <= 35; ++k) mismatches += pair_count(k1, k2, k) != pair_count_enumerated(k1, k2, k);
  CHECK(mismatches == 0);
}

TEST_CASE("pair count is symmetric and saturates") {
  for (std::int64_t a = 1; a <= 12; ++a)
    for (std::int64_t b = 1; b <= 12; ++b) {
      CHECK(pair_count(a, b, 3) == pair_count(b, a, 3));
      CHECK(pair_count(a, b, std::max(a, b)) == a * b);
      CHECK(pair_count(a, b, 1) == std::min(a, b));
    }
  CHECK(pair_count(1000000, 1000000, 500000) == pair_count(1000000, 1000000, 500000));
}

TEST_CASE("coincidence density examples and bound") {
  CHECK(coincidence_density(0, 0, 0.1, 0.1) == 1.0);
  CHECK(coincidence_density(1, 1, 0.5, 0.5) == 0.5);
  RngStream rng(31, 0u);
  int violations = 0;
  for (int i = 0; i < 10'000; ++i) {
    const double tau = 1e-3 + 0.1 * rng.uniform();
    const double t1 = tau + rng.uniform();
    const double t2 = tau + rng.uniform();
    const double p = coincidence_density(t1, t2, tau, tau);
    violations += !(p > 0.0 && p <= 1.0);
    violations += p > tau * std::min(t1, t2) / (t1 * t2) * (1 + 1e-12);
  }
  CHECK(violations == 0);
}

TEST_CASE("numeric correlation examples") {
  const auto fine = WindowSpec::finite(1e-4, 1e-4);
  CHECK(std::fabs(correlation_numeric(0, kPi / 8, {2, 1}, fine, 100'000) + std::cos(kPi / 4)) < 1e-3);
  for (double b : {0.2, 1.0, 2.5}) {
    const double r = std::fmod(b, kPi);
    CHECK(std::fabs(correlation_numeric(0, b, {0, 1}, WindowSpec::finite(0.01, 0.01), 20'000) -
                    (-1 + 4 * std::min(r, kPi - r) / kPi)) < 1e-3);
  }
  for (double d : {0.0, 1.0, 2.0, 4.0}) CHECK(correlation_numeric(0.7, 0.7, {d, 1}, fine, 20'000) == doctest::Approx(-1.0).epsilon(1e-6));
  CHECK_THROWS(correlation_numeric(0, 1, {2, 1}, fine, 999));
}

TEST_CASE("numeric correlation symmetries") {
  RngStream rng(71, 0u);
  for (double d : {0.0, 1.0, 2.0, 4.0}) {
    const DelayProfile p{d, 1};
    const auto w = WindowSpec::finite(1e-3, 2e-3);
    for (int i = 0; i < 4; ++i) {
      const double a = kPi * rng.uniform();
      const double b = kPi * rng.uniform();
      const double e = correlation_numeric(a, b, p, w, 4000);
      CHECK(std::fabs(e) <= 1.0);
      CHECK(std::fabs(e - correlation_numeric(0, b - a, p, w, 4000)) < 1e-9);
      CHECK(std::fabs(e - correlation_numeric(b, a, p, w, 4000)) < 1e-9);
      CHECK(std::fabs(correlation_numeric(a, a + kPi / 2, p, w, 4000) + correlation_numeric(a, a, p, w, 4000)) < 1e-9);
    }
  }
}

TEST_CASE("closed forms") {
  CHECK(correlation_closed_form(0, kPi / 8, 2, WindowRegime::kZeroLimit) == doctest::Approx(-std::sqrt(0.5)));
  CHECK(correlation_closed_form(0, kPi / 8, 4, WindowRegime::kZeroLimit) == doctest::Approx(-5 * std::sqrt(2.0) / 8));
  CHECK(correlation_closed_form(0, 0, 1, WindowRegime::kZeroLimit) == -1.0);
  CHECK(correlation_closed_form(0, kPi / 2, 1, WindowRegime::kZeroLimit) == 1.0);
  CHECK(correlation_closed_form(0, 1e-9, 1, WindowRegime::kZeroLimit) == doctest::Approx(-1.0));
  CHECK(correlation_closed_form(0, 0, 2, WindowRegime::kInfinite) == -1.0);
  CHECK(correlation_closed_form(0, kPi / 2, 3, WindowRegime::kInfinite) == doctest::Approx(1.0));
  CHECK(correlation_closed_form(0, kPi / 4, 0, WindowRegime::kZeroLimit) == doctest::Approx(0.0).epsilon(1e-12));
  CHECK_THROWS_AS(correlation_closed_form(0, 1, 3, WindowRegime::kZeroLimit), UnsupportedExponent);
}

TEST_CASE("infinite window matches the triangle wave for every d") {
  for (double d : {0.0, 1.0, 2.0, 4.0}) {
    for (int i = 0; i < 8; ++i) {
      const double b = 0.05 + i * 0.37;
      CHECK(std::fabs(correlation_numeric(0, b, {d, 1}, WindowSpec::infinite(), 20'000) -
                      correlation_closed_form(0, b, d, WindowRegime::kInfinite)) < 1e-3);
    }
  }
}

TEST_CASE("S_max curve endpoints") {
  const auto two = smax_curve(2, {1, 1000}, 1e-3, 20'000, 32);
  CHECK(std::fabs(two[0].second - 2 * std::sqrt(2.0)) < 1e-2);
  CHECK(two[1].second <= 2.05);
  const auto zero = smax_curve(0, {1, 30}, 1e-3, 20'000, 32);
  for (const auto& [r, s] : zero) CHECK(std::fabs(s - 2) < 1e-2);
  const auto four = smax_curve(4, {1}, 1e-3, 20'000, 32);
  CHECK(four[0].second > 2 * std::sqrt(2.0));
  CHECK_THROWS(smax_curve(2, {0.5}, 1e-3, 20'000, 32));
}

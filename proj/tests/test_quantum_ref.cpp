#include <doctest.h>

#include <cmath>

#include "eprb/angle.hpp"
#include "eprb/quantum_ref.hpp"

using namespace eprb;

TEST_CASE("table of predictions") {
  CHECK(predict(Experiment::kI, 0.4, 0.4).e12 == doctest::Approx(-1.0));
  const QuantumPrediction i = predict(Experiment::kI, 0.1, 0.9);
  CHECK(i.p_plus_1 == 0.5);
  CHECK(i.p_minus_2 == 0.5);
  CHECK(i.e1 == 0.0);
  CHECK(i.e2 == 0.0);

  const QuantumPrediction aligned = predict(Experiment::kII, kPi / 6, 0.0, kPi / 6, kPi / 6 + kPi / 2);
  CHECK(aligned.p_plus_1 == doctest::Approx(1.0));
  CHECK(aligned.e1 == doctest::Approx(1.0));
  CHECK(predict(Experiment::kII, kPi / 4, 0.0, 0.0, 0.0).e1 == doctest::Approx(0.0).epsilon(1e-12));
  const QuantumPrediction p = predict(Experiment::kII, 0.3, 1.1, 0.2, 0.9);
  CHECK(p.e12 == doctest::Approx(p.e1 * p.e2));
  CHECK(p.p_minus_2 == doctest::Approx(std::pow(std::sin(1.1 - 0.9), 2)));
}

TEST_CASE("singlet S(theta)") {
  CHECK(singlet_s_theta(kPi / 8) == doctest::Approx(2 * std::sqrt(2.0)).epsilon(1e-12));
  CHECK(singlet_s_theta(0) == doctest::Approx(2.0));
  CHECK(singlet_s_theta(kPi / 4) == doctest::Approx(0.0).epsilon(1e-12));
  double best = -10;
  double arg = 0;
  for (int i = 0; i <= 200'000; ++i) {
    const double th = kPi / 2 * i / 200'000;
    if (singlet_s_theta(th) > best) {
      best = singlet_s_theta(th);
      arg = th;
    }
  }
  CHECK(std::fabs(best - bounds().tsirelson) < 1e-9);
  CHECK(arg == doctest::Approx(kPi / 8).epsilon(1e-4));
}

TEST_CASE("bounds") {
  static_assert(bounds().bell == 2.0);
  static_assert(bounds().algebraic == 4.0);
  CHECK(bounds().tsirelson == doctest::Approx(2 * std::sqrt(2.0)).epsilon(1e-15));
}

#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "eprb/angle.hpp"
#include "eprb/dlm.hpp"
#include "eprb/rng.hpp"

using namespace eprb;

TEST_CASE("trial vectors follow the fixed enumeration order") {
  const auto t = trial_vectors(DlmState::initial(0.999));
  const int expected[8][3] = {{1, 1, 1},   {1, 1, -1},  {1, -1, 1},  {1, -1, -1},
                              {-1, 1, 1},  {-1, 1, -1}, {-1, -1, 1}, {-1, -1, -1}};
  for (int i = 0; i < 8; ++i) {
    CHECK(t[i].delta == expected[i][0]);
    CHECK(t[i].s == expected[i][1]);
    CHECK(t[i].s_prime == expected[i][2]);
  }
  CHECK(t[0].vector.x == doctest::Approx(0.999).epsilon(1e-15));
  CHECK(t[0].vector.y == doctest::Approx(std::sqrt(0.001999)).epsilon(1e-12));
  CHECK(t[0].vector.y == doctest::Approx(0.0447102).epsilon(1e-6));
}

TEST_CASE("exact-match trials for the axis states") {
  for (double l : {0.1, 0.5, 0.999}) {
    const auto from_x = trial_vectors(DlmState{{1.0, 0.0}, l});
    CHECK(from_x[4].vector == Vec2{1.0, 0.0});  // delta -1, s +1, s' +1
    CHECK(from_x[5].vector.x == 1.0);
    CHECK(from_x[5].vector.y == 0.0);
    const auto from_y = trial_vectors(DlmState{{0.0, 1.0}, l});
    CHECK(from_y[0].vector.x == 0.0);
    CHECK(from_y[0].vector.y == 1.0);
    for (const auto& tv : from_x) CHECK(norm(tv.vector) == doctest::Approx(1.0).epsilon(1e-12));
  }
}

TEST_CASE("step examples") {
  const StepResult a = step(DlmState{{1.0, 0.0}, 0.999}, {1.0, 0.0});
  CHECK(a.channel == 1);
  CHECK(a.state.internal == Vec2{1.0, 0.0});

  const StepResult b = step(DlmState{{0.0, 1.0}, 0.999}, {0.0, 1.0});
  CHECK(b.channel == -1);
  CHECK(b.state.internal == Vec2{0.0, 1.0});

  CHECK_THROWS_AS(step(DlmState::initial(0.9), {1.0, 0.1}), std::invalid_argument);
  CHECK_NOTHROW(step(DlmState::initial(0.9), {1.0 + 1e-10, 0.0}));
}

TEST_CASE("diagonal input averages to zero") {
  DlmState s = DlmState::initial(0.999);
  const Vec2 y{std::sqrt(0.5), std::sqrt(0.5)};
  long sum = 0;
  for (int i = 0; i < 100'000; ++i) {
    const StepResult r = step(s, y);
    s = r.state;
    sum += r.channel;
  }
  CHECK(std::abs(sum / 1e5) < 0.02);
}

TEST_CASE("polarizer response at aligned and crossed angles") {
  DlmState s = DlmState::initial(0.999);
  const Angle theta = Angle::radians(0.3);
  for (int i = 0; i < 50; ++i) s = polarizer_response(s, theta, theta).state;
  CHECK(polarizer_response(s, theta, theta).channel == 1);

  DlmState c = DlmState::initial(0.999);
  int last = 0;
  for (int i = 0; i < 5000; ++i) {
    const StepResult r = polarizer_response(c, Angle::radians(0.3 + kPi / 2), theta);
    c = r.state;
    last = r.channel;
  }
  CHECK(last == -1);
}

TEST_CASE("unit norm is preserved along long random runs") {
  RngStream rng(11, 0u);
  for (double l : {0.5, 0.9, 0.999}) {
    DlmState s = DlmState::initial(l);
    double worst = 0.0;
    for (int i = 0; i < 200'000; ++i) {
      const double a = kTwoPi * rng.uniform();
      s = step(s, {std::cos(a), std::sin(a)}).state;
      worst = std::max(worst, std::fabs(norm(s.internal) - 1.0));
    }
    CHECK(worst < 1e-12);
  }
}

TEST_CASE("Malus convergence on a 16-point grid") {
  constexpr int kEvents = 200'000;
  for (int i = 0; i < 16; ++i) {
    const double psi = kPi * i / 16.0;
    const Vec2 y{std::cos(psi), std::sin(psi)};
    DlmState s = DlmState::initial(0.999);
    long sum = 0;
    for (int n = 0; n < kEvents; ++n) {
      const StepResult r = step(s, y);
      s = r.state;
      sum += r.channel;
    }
    INFO("psi = " << psi);
    CHECK(std::fabs(static_cast<double>(sum) / kEvents - std::cos(2 * psi)) < 0.02);
  }
}

TEST_CASE("uniform input is balanced and tracks sign(cos 2 psi)") {
  for (double theta : {0.0, 0.4, kPi / 3}) {
    RngStream rng(5, 0u);
    Polarizer p(Angle::radians(theta), 0.999);
    long sum = 0;
    long agree = 0;
    constexpr int kEvents = 1'000'000;
    for (int n = 0; n < kEvents; ++n) {
      const double xi = kTwoPi * rng.uniform();
      const int out = p.respond(Angle::radians(xi));
      sum += out;
      if (n >= 1000 && n < 101'000) agree += out == (std::cos(2 * (xi - theta)) >= 0 ? 1 : -1);
    }
    CHECK(std::abs(static_cast<double>(sum) / kEvents) < 0.01);
    CHECK(agree >= 99'000);
  }
}

TEST_CASE("identical inputs give identical outputs") {
  RngStream a(3, 0u);
  RngStream b(3, 0u);
  Polarizer p(Angle::radians(0.2), 0.99);
  Polarizer q(Angle::radians(0.2), 0.99);
  for (int i = 0; i < 10'000; ++i) {
    REQUIRE(p.respond(Angle::radians(kTwoPi * a.uniform())) == q.respond(Angle::radians(kTwoPi * b.uniform())));
  }
  CHECK(p.state() == q.state());
}

#include <doctest.h>

#include <sstream>

#include "eprb/angle.hpp"
#include "eprb/errors.hpp"
#include "eprb/rng.hpp"
#include "eprb/sim_config.hpp"
#include "eprb/station_log.hpp"

using namespace eprb;

namespace {

StationLog random_log(std::uint64_t seed, std::size_t n) {
  RngStream rng(seed, 77u);
  StationLog log;
  log.station_id = rng.uniform() < 0.5 ? 1 : 2;
  log.time_unit = 1e-9;
  log.seed = seed;
  log.rng = std::string(RngStream::kAlgorithm);
  log.metadata = {{"experiment", "I"}, {"d", "2"}};
  const std::array<Angle, 2> settings{Angle::radians(kPi * rng.uniform()), Angle::radians(kPi * rng.uniform())};
  std::uint64_t index = 0;
  for (std::size_t i = 0; i < n; ++i) {
    index += 1 + static_cast<std::uint64_t>(rng.uniform() * 3);
    const int s = rng.uniform() < 0.5 ? 0 : 1;
    log.events.push_back({index, s, settings[s], rng.uniform() < 0.5 ? 1 : -1, rng.uniform() * 1e3});
  }
  return log;
}

StationLog parse(const std::string& text) {
  std::istringstream in(text);
  return read_station_log(in);
}

}  // namespace

TEST_CASE("angles normalize into [0, 2pi)") {
  CHECK(Angle::radians(-kPi / 2).value() == doctest::Approx(3 * kPi / 2));
  CHECK(Angle::radians(kTwoPi).value() == 0.0);
  CHECK(Angle::radians(5 * kPi).mod_pi() == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(Angle::radians(kPi / 8).same_orientation(Angle::radians(kPi / 8 + kPi)));
  CHECK_FALSE(Angle::radians(0.0).same_orientation(Angle::radians(kPi / 2)));
}

TEST_CASE("station log round trip preserves every field") {
  for (std::uint64_t seed = 1; seed <= 25; ++seed) {
    const StationLog log = random_log(seed, 1 + seed * 7);
    std::stringstream buffer;
    write_station_log(log, buffer);
    const StationLog back = read_station_log(buffer);
    REQUIRE(back == log);
  }
}

TEST_CASE("empty log round trips") {
  StationLog log;
  log.station_id = 2;
  std::stringstream buffer;
  write_station_log(log, buffer);
  CHECK(read_station_log(buffer) == log);
}

TEST_CASE("log parsing reports the offending line") {
  const std::string header = "# station=1\n# time_unit=1\n";
  CHECK(parse(header + "1,0,0,1,0.5\n").events.size() == 1);

  auto line_of = [](const std::string& text) -> std::size_t {
    try {
      parse(text);
    } catch (const ParseError& e) {
      return e.line();
    }
    return 0;
  };
  CHECK(line_of(header + "1,0,0,1,0.5\n1,0,0,1,0.5\n") == 4);  // index not increasing
  CHECK(line_of(header + "1,0,0,0,0.5\n") == 3);                // outcome 0
  CHECK(line_of(header + "1,2,0,1,0.5\n") == 3);                // setting index 2
  CHECK(line_of(header + "1,0,0,1,-0.5\n") == 3);               // negative tag
  CHECK(line_of(header + "1,0,0,1\n") == 3);                    // missing field
  CHECK(line_of(header + "1,0,zero,1,0.5\n") == 3);
  CHECK(line_of("# time_unit=1\n1,0,0,1,0.5\n") != 0);          // missing station
  CHECK(line_of("# station=1\n") != 0);                         // missing time unit
  CHECK(line_of("# station=3\n# time_unit=1\n") == 1);
}

TEST_CASE("validate rejects malformed in-memory logs") {
  StationLog log = random_log(3, 10);
  CHECK_NOTHROW(validate(log));
  log.events[4].outcome = 0;
  CHECK_THROWS(validate(log));
  log = random_log(3, 10);
  log.events[5].index = log.events[4].index;
  CHECK_THROWS(validate(log));
  log = random_log(3, 10);
  log.time_unit = 0.0;
  CHECK_THROWS(validate(log));
}

TEST_CASE("rng streams are reproducible and independent") {
  RngStream a(42, StreamId::kSource);
  RngStream b(42, StreamId::kSource);
  RngStream c(42, StreamId::kSwitch1);
  RngStream d(43, StreamId::kSource);
  bool differs_c = false;
  bool differs_d = false;
  double sum = 0.0;
  constexpr int kDraws = 1'000'000;
  for (int i = 0; i < kDraws; ++i) {
    const double x = a.uniform();
    REQUIRE(x == b.uniform());
    REQUIRE(x >= 0.0);
    REQUIRE(x < 1.0);
    differs_c |= x != c.uniform();
    differs_d |= x != d.uniform();
    sum += x;
  }
  CHECK(differs_c);
  CHECK(differs_d);
  CHECK(sum / kDraws == doctest::Approx(0.5).epsilon(0.002));
  RngStream e(1, 0u);
  for (int i = 0; i < 1000; ++i) {
    const double x = e.uniform_open_closed();
    REQUIRE(x > 0.0);
    REQUIRE(x <= 1.0);
  }
}

TEST_CASE("splitmix64 matches the reference sequence") {
  // First two outputs of the reference generator started from state 0.
  CHECK(splitmix64(0) == 0xE220A8397B1DCDAFULL);
  CHECK(splitmix64(0x9E3779B97F4A7C15ULL) == 0x6E789E6AA1B965F4ULL);
  CHECK(derive_seed(1, 2) != derive_seed(2, 1));
  CHECK(derive_seed(5, 0) == derive_seed(5, 0));
}

TEST_CASE("simulation config validation") {
  SimConfig c;
  CHECK_NOTHROW(validate(c));
  c.learning = 1.0;
  CHECK_THROWS_AS(validate(c), ConfigError);
  c = SimConfig{};
  c.window = c.tag_resolution / 2;
  CHECK_THROWS_AS(validate(c), ConfigError);
  c = SimConfig{};
  c.window = std::numeric_limits<double>::infinity();
  CHECK_NOTHROW(validate(c));
  c = SimConfig{};
  c.n_events = 0;
  CHECK_THROWS_AS(validate(c), ConfigError);
  c = SimConfig{};
  c.delay_exponent = -1;
  CHECK_THROWS_AS(validate(c), ConfigError);

  const SimConfig t = with_theta_settings(SimConfig{}, kPi / 8);
  CHECK(t.settings_1[1].value() == doctest::Approx(kPi / 4));
  CHECK(t.settings_2[1].value() == doctest::Approx(3 * kPi / 8));
  CHECK(parse_experiment("II") == Experiment::kII);
  CHECK_THROWS(parse_experiment("III"));
}

TEST_CASE("manifest echoes the seed and generator") {
  SimConfig c;
  c.seed = 99;
  const auto m = manifest(c);
  auto find = [&](const std::string& key) {
    for (const auto& [k, v] : m)
      if (k == key) return v;
    return std::string{};
  };
  CHECK(find("seed") == "99");
  CHECK(find("rng") == std::string(RngStream::kAlgorithm));
  CHECK(find("experiment") == "I");
}

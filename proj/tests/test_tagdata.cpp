#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <set>

#include "eprb/errors.hpp"
#include "eprb/rng.hpp"
#include "eprb/simulator.hpp"
#include "eprb/tagdata.hpp"

using namespace eprb;

namespace {

StationLog tags_log(int station, const std::vector<double>& tags_ns, int setting = 0) {
  StationLog log;
  log.station_id = station;
  log.time_unit = 1e-9;
  std::uint64_t n = 0;
  for (double t : tags_ns) log.events.push_back({++n, setting, Angle::radians(0.0), 1, t});
  return log;
}

StationLog random_tags(int station, std::uint64_t seed, std::size_t n, double spacing_ns) {
  RngStream rng(seed, static_cast<std::uint32_t>(station));
  std::vector<double> t;
  double now = 0.0;
  for (std::size_t i = 0; i < n; ++i) t.push_back(now += spacing_ns * rng.uniform());
  return tags_log(station, t);
}

std::pair<StationLog, StationLog> simulated_export(double d, std::uint64_t seed, std::size_t n) {
  SimConfig c;
  c.delay_exponent = d;
  c.n_events = n;
  c.seed = seed;
  const auto [a, b] = run_experiment(c);
  TimestampExport opt;
  opt.seed = seed;
  return export_timestamped(a, b, opt);
}

}  // namespace

TEST_CASE("difference histogram examples") {
  const Histogram same = diff_histogram(tags_log(1, {5.0}), tags_log(2, {5.0}), 0.5e-9, 1e-6);
  CHECK(same.total() == 1);
  CHECK(same.counts.count(0) == 1);
  CHECK(optimal_shift(same) == 0.0);

  CHECK(diff_histogram(tags_log(1, {5.0}), tags_log(2, {}), 0.5e-9, 1e-6).total() == 0);
  CHECK_THROWS_AS(optimal_shift(Histogram{}), NoDataError);
  CHECK_THROWS(diff_histogram(tags_log(1, {5.0, 1.0}), tags_log(2, {1.0}), 0.5e-9, 1e-6));
}

TEST_CASE("planted shift is recovered within one bin") {
  RngStream jitter(5, 0u);
  std::vector<double> a;
  std::vector<double> b;
  double now = 0.0;
  for (int i = 0; i < 5000; ++i) {
    now += 1000.0 * (0.5 + jitter.uniform());
    a.push_back(now);
    b.push_back(now - 4.0 + 0.4 * (jitter.uniform() - 0.5));
  }
  const Histogram h = diff_histogram(tags_log(1, a), tags_log(2, b), 0.5e-9, 1e-6);
  CHECK(std::fabs(optimal_shift(h) - 4e-9) <= 0.5e-9);

  std::vector<double> c;
  for (double t : a) c.push_back(t + 2.25);
  const Histogram neg = diff_histogram(tags_log(1, a), tags_log(2, c), 0.5e-9, 1e-6, 0.0);
  const double s = optimal_shift(neg);
  CHECK(s >= -2.5e-9);
  CHECK(s < -2.0e-9);
}

TEST_CASE("symmetric data gives zero shift") {
  Histogram h{1.0, -0.5, {{-1, 3}, {0, 2}, {1, 3}}};
  CHECK(optimal_shift(h) == -1.0);  // equal distance: lower center
  h.counts[0] = 3;
  CHECK(optimal_shift(h) == 0.0);
}

TEST_CASE("matching examples") {
  CHECK(match_pairs(tags_log(1, {10}), tags_log(2, {10.5}), 0, 1e-9).pairs.size() == 1);
  const MatchedPairs flanked = match_pairs(tags_log(1, {10}), tags_log(2, {9.2, 10.3}), 0, 1e-9);
  REQUIRE(flanked.pairs.size() == 1);
  CHECK(flanked.pairs[0].i2 == 1);
  CHECK(match_pairs(tags_log(1, {10, 30}), tags_log(2, {15, 40}), 0, 1e-9).pairs.empty());
}

TEST_CASE("matching invariants on random data") {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const StationLog a = random_tags(1, seed, 400, 5.0);
    const StationLog b = random_tags(2, seed, 400, 5.0);
    const double shift = 1e-9 * static_cast<double>(seed % 5);
    std::size_t previous = SIZE_MAX;
    for (double w : {4e-9, 2e-9, 1e-9, 0.5e-9}) {
      const MatchedPairs m = match_pairs(a, b, shift, w);
      std::set<std::size_t> used1;
      std::set<std::size_t> used2;
      for (const auto& p : m.pairs) {
        REQUIRE(used1.insert(p.i1).second);
        REQUIRE(used2.insert(p.i2).second);
        REQUIRE(std::fabs(p.dt - shift) < w);
        REQUIRE(p.dt == doctest::Approx(1e-9 * (a.events[p.i1].time_tag - b.events[p.i2].time_tag)));
      }
      CHECK(std::is_sorted(m.pairs.begin(), m.pairs.end(),
                           [](const MatchedPair& x, const MatchedPair& y) { return x.i1 < y.i1; }));
      CHECK(m.pairs.size() <= previous);
      previous = m.pairs.size();
    }
  }
}

TEST_CASE("CHSH maximum over sign placements") {
  CHECK(chsh_max_over_signs({-std::sqrt(0.5), std::sqrt(0.5), -std::sqrt(0.5), -std::sqrt(0.5)}) ==
        doctest::Approx(2 * std::sqrt(2.0)));
  CHECK(chsh_max_over_signs({1, 1, 1, 1}) == doctest::Approx(2.0));
  CHECK(chsh_max_over_signs({0, 0, 0, 0}) == 0.0);
}

TEST_CASE("timestamped export keeps the shift and the pairing") {
  const auto [a, b] = simulated_export(2, 3, 2000);
  CHECK(a.events.size() == 2000);
  CHECK(a.time_unit == 1e-9);
  const Histogram h = diff_histogram(a, b, 0.5e-9, 1e-6);
  CHECK(std::fabs(optimal_shift(h) - 4e-9) <= 0.5e-9);
  CHECK_NOTHROW(times_in_seconds(a));
  CHECK_NOTHROW(validate(b));
}

TEST_CASE("window sweep on simulated export") {
  const auto [a, b] = simulated_export(2, 7, 200'000);
  const auto rows = smax_vs_window(a, b, 4e-9, {20e-9, 5e-9, 2e-9, 0.5e-9, 1e-15});
  for (std::size_t i = 1; i < rows.size(); ++i) CHECK(rows[i].n_pairs <= rows[i - 1].n_pairs);
  REQUIRE(rows[0].s_max.has_value());
  CHECK(std::fabs(*rows[0].s_max - 2.0) < 0.1);
  CHECK_FALSE(rows.back().s_max.has_value());
  CHECK(rows.back().n_pairs == 0);
}

TEST_CASE("setting-resolved delay histograms") {
  const auto [a, b] = simulated_export(2, 11, 100'000);
  const MatchedPairs m = match_pairs(a, b, 4e-9, 10e-9);
  PairSelector first{1, 1, 0, 0};
  PairSelector second{1, 1, 0, 1};
  const Histogram h = delay_histogram_by_setting(m, a, b, first, 0.5e-9);
  double total = 0.0;
  for (const auto& [c, p] : h.normalized()) total += p;
  CHECK(total == doctest::Approx(1.0));

  const auto da = selected_delays(m, a, b, first);
  const auto db = selected_delays(m, a, b, second);
  CHECK(ks_statistic(da, db) > ks_critical_value(da.size(), db.size(), 0.01));

  MatchedPairs one{{m.pairs.front()}, m.window, m.shift};
  const EventRecord& e1 = a.events[one.pairs[0].i1];
  const EventRecord& e2 = b.events[one.pairs[0].i2];
  PairSelector own{e1.outcome, e2.outcome, e1.setting_index, e2.setting_index};
  const Histogram point = delay_histogram_by_setting(one, a, b, own, 0.5e-9);
  CHECK(point.total() == 1);
  PairSelector other = own;
  other.setting_1 = 1 - own.setting_1;
  CHECK_THROWS_AS(delay_histogram_by_setting(one, a, b, other, 0.5e-9), NoDataError);
}

TEST_CASE("KS statistic basics") {
  CHECK(ks_statistic({1, 2, 3}, {1, 2, 3}) == 0.0);
  CHECK(ks_statistic({1, 2, 3}, {4, 5, 6}) == 1.0);
  CHECK(ks_critical_value(100, 100, 0.01) == doctest::Approx(std::sqrt(-0.5 * std::log(0.005)) * std::sqrt(0.02)));
}

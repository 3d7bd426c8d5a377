#include "eprb/tagdata.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "eprb/errors.hpp"
#include "eprb/rng.hpp"

namespace eprb {

void Histogram::add(double value) {
  const auto bin = static_cast<std::int64_t>(std::floor((value - origin) / bin_width));
  ++counts[bin];
}

std::uint64_t Histogram::total() const {
  std::uint64_t sum = 0;
  for (const auto& [bin, c] : counts) sum += c;
  return sum;
}

std::vector<std::pair<double, double>> Histogram::normalized() const {
  const double t = static_cast<double>(total());
  std::vector<std::pair<double, double>> out;
  out.reserve(counts.size());
  for (const auto& [bin, c] : counts) out.emplace_back(center(bin), static_cast<double>(c) / t);
  return out;
}

std::vector<double> times_in_seconds(const StationLog& log) {
  std::vector<double> t;
  t.reserve(log.events.size());
  for (const auto& ev : log.events) {
    const double s = ev.time_tag * log.time_unit;
    if (!t.empty() && s < t.back()) {
      throw std::invalid_argument("station " + std::to_string(log.station_id) +
                                  " log is not time-sorted at event " + std::to_string(ev.index));
    }
    t.push_back(s);
  }
  return t;
}

Histogram diff_histogram(const StationLog& log1, const StationLog& log2, double bin, double scan_range,
                         std::optional<double> origin) {
  if (!(bin > 0.0)) throw std::invalid_argument("histogram bin width must be positive");
  if (!(scan_range >= 0.0)) throw std::invalid_argument("scan range must be non-negative");
  const auto t1 = times_in_seconds(log1);
  const auto t2 = times_in_seconds(log2);

  Histogram hist{bin, origin.value_or(-bin / 2), {}};
  std::size_t lo = 0;
  for (double a : t1) {
    while (lo < t2.size() && t2[lo] < a - scan_range) ++lo;
    for (std::size_t j = lo; j < t2.size() && t2[j] <= a + scan_range; ++j) hist.add(a - t2[j]);
  }
  return hist;
}

double optimal_shift(const Histogram& hist) {
  if (hist.counts.empty()) throw NoDataError("cannot locate the maximum of an empty histogram");
  std::int64_t best = hist.counts.begin()->first;
  std::uint64_t best_count = 0;
  for (const auto& [bin, c] : hist.counts) {
    const bool closer = std::fabs(hist.center(bin)) < std::fabs(hist.center(best));
    if (c > best_count || (c == best_count && closer)) {
      best = bin;
      best_count = c;
    }
  }
  return hist.center(best);
}

MatchedPairs match_pairs(const StationLog& log1, const StationLog& log2, double shift, double window) {
  if (!(window > 0.0)) throw std::invalid_argument("coincidence window must be positive");
  const auto t1 = times_in_seconds(log1);
  const auto t2 = times_in_seconds(log2);

  struct Candidate {
    double residual;
    std::size_t i;
    std::size_t j;
  };
  std::vector<Candidate> candidates;
  std::size_t lo = 0;
  for (std::size_t i = 0; i < t1.size(); ++i) {
    // Partner times satisfy t1 - shift - W < t2 < t1 - shift + W.
    const double center = t1[i] - shift;
    while (lo < t2.size() && t2[lo] <= center - window) ++lo;
    for (std::size_t j = lo; j < t2.size() && t2[j] < center + window; ++j) {
      const double r = std::fabs(t1[i] - t2[j] - shift);
      if (r < window) candidates.push_back({r, i, j});
    }
  }
  std::sort(candidates.begin(), candidates.end(), [](const Candidate& a, const Candidate& b) {
    if (a.residual != b.residual) return a.residual < b.residual;
    if (a.i != b.i) return a.i < b.i;
    return a.j < b.j;
  });

  std::vector<bool> used1(t1.size(), false);
  std::vector<bool> used2(t2.size(), false);
  MatchedPairs out{{}, window, shift};
  for (const auto& c : candidates) {
    if (used1[c.i] || used2[c.j]) continue;
    used1[c.i] = used2[c.j] = true;
    out.pairs.push_back({c.i, c.j, t1[c.i] - t2[c.j]});
  }
  std::sort(out.pairs.begin(), out.pairs.end(),
            [](const MatchedPair& a, const MatchedPair& b) { return a.i1 < b.i1; });
  return out;
}

CoincidenceTable table_from_pairs(const MatchedPairs& pairs, const StationLog& log1, const StationLog& log2) {
  CoincidenceTable table;
  table.total_events = std::min(log1.events.size(), log2.events.size());
  for (const auto& ev : log1.events) {
    table.settings[0][ev.setting_index] = ev.setting;
    ++table.raw_singles[0][ev.setting_index][outcome_slot(ev.outcome)];
  }
  for (const auto& ev : log2.events) {
    table.settings[1][ev.setting_index] = ev.setting;
    ++table.raw_singles[1][ev.setting_index][outcome_slot(ev.outcome)];
  }
  for (const auto& p : pairs.pairs) {
    const EventRecord& a = log1.events.at(p.i1);
    const EventRecord& b = log2.events.at(p.i2);
    const int x = outcome_slot(a.outcome);
    const int y = outcome_slot(b.outcome);
    ++table.counts[a.setting_index][b.setting_index][x][y];
    ++table.singles[0][a.setting_index][x];
    ++table.singles[1][b.setting_index][y];
  }
  return table;
}

double chsh_max_over_signs(const std::array<double, 4>& e) {
  const double sum = e[0] + e[1] + e[2] + e[3];
  double best = 0.0;
  for (double v : e) best = std::max(best, std::fabs(sum - 2.0 * v));
  return best;
}

std::vector<WindowRow> smax_vs_window(const StationLog& log1, const StationLog& log2, double shift,
                                      const std::vector<double>& windows) {
  std::vector<WindowRow> rows;
  rows.reserve(windows.size());
  for (double w : windows) {
    const MatchedPairs pairs = match_pairs(log1, log2, shift, w);
    const CoincidenceTable table = table_from_pairs(pairs, log1, log2);
    WindowRow row{w, std::nullopt, pairs.pairs.size()};
    bool complete = true;
    for (int a = 0; a < 2; ++a)
      for (int b = 0; b < 2; ++b) complete = complete && table.pair_total(a, b) > 0;
    if (complete) row.s_max = chsh_max_over_signs(chsh_correlations(table));
    rows.push_back(row);
  }
  return rows;
}

std::vector<double> selected_delays(const MatchedPairs& pairs, const StationLog& log1, const StationLog& log2,
                                    const PairSelector& sel) {
  std::vector<double> out;
  for (const auto& p : pairs.pairs) {
    const EventRecord& a = log1.events.at(p.i1);
    const EventRecord& b = log2.events.at(p.i2);
    if (a.outcome == sel.outcome_1 && b.outcome == sel.outcome_2 && a.setting_index == sel.setting_1 &&
        b.setting_index == sel.setting_2) {
      out.push_back(p.dt);
    }
  }
  return out;
}

Histogram delay_histogram_by_setting(const MatchedPairs& pairs, const StationLog& log1, const StationLog& log2,
                                     const PairSelector& selector, double bin) {
  if (!(bin > 0.0)) throw std::invalid_argument("histogram bin width must be positive");
  const auto dts = selected_delays(pairs, log1, log2, selector);
  if (dts.empty()) throw NoDataError("no coincidences match the requested detectors and settings");
  Histogram hist{bin, -bin / 2, {}};
  for (double dt : dts) hist.add(dt);
  return hist;
}

double ks_statistic(std::vector<double> a, std::vector<double> b) {
  if (a.empty() || b.empty()) throw NoDataError("KS statistic needs two non-empty samples");
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  const double na = static_cast<double>(a.size());
  const double nb = static_cast<double>(b.size());
  std::size_t i = 0;
  std::size_t j = 0;
  double d = 0.0;
  while (i < a.size() && j < b.size()) {
    const double x = std::min(a[i], b[j]);
    while (i < a.size() && a[i] <= x) ++i;
    while (j < b.size() && b[j] <= x) ++j;
    d = std::max(d, std::fabs(static_cast<double>(i) / na - static_cast<double>(j) / nb));
  }
  return d;
}

double ks_critical_value(std::size_t n, std::size_t m, double alpha) {
  if (!(alpha > 0.0 && alpha < 1.0)) throw std::invalid_argument("KS level must lie in (0, 1)");
  const double c = std::sqrt(-0.5 * std::log(alpha / 2.0));
  const double dn = static_cast<double>(n);
  const double dm = static_cast<double>(m);
  return c * std::sqrt((dn + dm) / (dn * dm));
}

std::pair<StationLog, StationLog> export_timestamped(const StationLog& log1, const StationLog& log2,
                                                     const TimestampExport& opt) {
  if (log1.events.size() != log2.events.size()) {
    throw std::invalid_argument("export needs index-paired logs of equal length");
  }
  if (!(opt.mean_gap > 0.0) || !(opt.delay_unit > 0.0) || !(opt.time_unit > 0.0)) {
    throw std::invalid_argument("export spacings and units must be positive");
  }
  if (!(opt.drop_fraction >= 0.0 && opt.drop_fraction < 1.0)) {
    throw std::invalid_argument("drop fraction must lie in [0, 1)");
  }

  RngStream gaps(opt.seed, 100u);
  RngStream drop1(opt.seed, 101u);
  RngStream drop2(opt.seed, 102u);

  StationLog out1;
  StationLog out2;
  for (auto [out, in] : {std::pair{&out1, &log1}, std::pair{&out2, &log2}}) {
    out->station_id = in->station_id;
    out->time_unit = opt.time_unit;
    out->seed = in->seed;
    out->rng = in->rng;
    out->metadata = in->metadata;
    out->metadata.emplace_back("export_delay_unit_s", format_real(opt.delay_unit));
    out->metadata.emplace_back("export_mean_gap_s", format_real(opt.mean_gap));
    out->metadata.emplace_back("export_shift_s", format_real(opt.shift));
    out->metadata.emplace_back("export_drop_fraction", format_real(opt.drop_fraction));
    out->metadata.emplace_back("export_seed", std::to_string(opt.seed));
    out->events.reserve(in->events.size());
  }

  double emission = std::fabs(opt.shift) + opt.mean_gap;
  for (std::size_t n = 0; n < log1.events.size(); ++n) {
    emission += -std::log(gaps.uniform_open_closed()) * opt.mean_gap;
    const bool keep1 = drop1.uniform() >= opt.drop_fraction;
    const bool keep2 = drop2.uniform() >= opt.drop_fraction;
    if (keep1) {
      EventRecord ev = log1.events[n];
      ev.time_tag = (emission + ev.time_tag * opt.delay_unit) / opt.time_unit;
      out1.events.push_back(ev);
    }
    if (keep2) {
      EventRecord ev = log2.events[n];
      ev.time_tag = (emission + ev.time_tag * opt.delay_unit - opt.shift) / opt.time_unit;
      out2.events.push_back(ev);
    }
  }
  for (StationLog* log : {&out1, &out2}) {
    std::stable_sort(log->events.begin(), log->events.end(),
                     [](const EventRecord& a, const EventRecord& b) { return a.time_tag < b.time_tag; });
    std::uint64_t idx = 0;
    for (auto& ev : log->events) ev.index = ++idx;
  }
  return {std::move(out1), std::move(out2)};
}

}  // namespace eprb

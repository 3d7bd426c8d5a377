#include "commands.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <iostream>
#include <limits>
#include <map>
#include <optional>
#include <sstream>

#include "eprb/analytic.hpp"
#include "eprb/cli_support.hpp"
#include "eprb/coincidence.hpp"
#include "eprb/errors.hpp"
#include "eprb/parallel.hpp"
#include "eprb/simulator.hpp"
#include "eprb/tagdata.hpp"
#include "output.hpp"

namespace eprb::tool {

namespace fs = std::filesystem;

namespace {

using Clock = std::chrono::steady_clock;

// Converts flag-parsing failures from the library into usage errors.
template <typename Fn>
auto usage_guard(const std::string& flag, Fn&& fn) {
  try {
    return fn();
  } catch (const std::invalid_argument& e) {
    throw UsageError(flag + ": " + e.what());
  }
}

// Seconds to nanoseconds, rounded to 1e-6 ns so range arithmetic does not
// leak into the CSV text.
double to_ns(double seconds) { return std::round(seconds * 1e15) / 1e6; }

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) out.push_back(item);
  return out;
}

std::vector<double> parse_angle_list(const std::string& flag, const std::string& text) {
  return usage_guard(flag, [&] {
    std::vector<double> out;
    for (const auto& item : split_list(text)) out.push_back(cli::parse_angle(item));
    if (out.empty()) throw std::invalid_argument("empty list");
    return out;
  });
}

std::vector<double> parse_reals(const std::string& flag, const std::string& text) {
  auto values = usage_guard(flag, [&] { return cli::parse_real_list(text); });
  if (values.empty()) throw UsageError(flag + ": list must not be empty");
  return values;
}

std::vector<std::uint64_t> parse_seeds(const std::string& text) {
  std::vector<std::uint64_t> out;
  for (const auto& item : split_list(text)) {
    try {
      std::size_t used = 0;
      const unsigned long long v = std::stoull(item, &used);
      if (used != item.size() || item.front() == '-') throw std::invalid_argument(item);
      out.push_back(v);
    } catch (const std::exception&) {
      throw UsageError("--seed: cannot parse '" + item + "' as a non-negative integer");
    }
  }
  if (out.empty()) throw UsageError("--seed: at least one seed is required");
  return out;
}

void write_manifest(const fs::path& dir, const std::string& command, const std::string& options,
                    Clock::time_point start) {
  std::ofstream out(dir / "manifest.ini");
  if (!out) throw std::runtime_error("cannot write " + (dir / "manifest.ini").string());
  const double wall = std::chrono::duration<double>(Clock::now() - start).count();
  out << "# eprb " << command << " manifest; replay with: eprb --config <this file>\n"
      << "# rng=" << RngStream::kAlgorithm << "\n"
      << "# wall_time_s=" << format_real(std::round(wall * 1000) / 1000) << "\n"
      << options;
}

struct ScanPlan {
  SimConfig base;
  Layout layout = Layout::kLadder;
  std::vector<double> thetas;
};

ScanPlan plan_scan(const SimFlags& f) {
  ScanPlan plan;
  SimConfig& c = plan.base;
  c.experiment = usage_guard("--experiment", [&] { return parse_experiment(f.experiment); });
  c.n_events = f.n_events;
  c.delay_exponent = f.d;
  c.learning = f.l;
  c.tag_resolution = f.tau;
  c.window = usage_guard("--window", [&] { return cli::parse_real_list(f.window).at(0); });
  c.max_delay = f.t0;
  c.source_angle = Angle::radians(parse_angle_list("--xi", f.xi).at(0));
  try {
    validate(c);
  } catch (const ConfigError& e) {
    throw UsageError(e.what());
  }

  if (f.layout == "auto") {
    plan.layout = default_layout(c.experiment);
  } else if (f.layout == "ladder") {
    plan.layout = Layout::kLadder;
  } else if (f.layout == "fixed-pair") {
    plan.layout = Layout::kFixedPair;
  } else {
    throw UsageError("--layout must be auto, ladder or fixed-pair");
  }

  if (!f.theta.empty()) {
    plan.thetas = parse_angle_list("--theta", f.theta);
  } else {
    if (f.theta_points < 2) throw UsageError("--theta-points must be at least 2");
    const double top = parse_angle_list("--theta-max", f.theta_max).at(0);
    for (int i = 0; i < f.theta_points; ++i) plan.thetas.push_back(top * i / (f.theta_points - 1));
  }
  return plan;
}

struct ChshRow {
  double theta = 0.0;
  std::optional<double> s;
  std::array<std::optional<double>, 4> e{};
  std::uint64_t n = 0;
};

ChshRow chsh_row(double theta, const CoincidenceTable& table) {
  ChshRow row;
  row.theta = theta;
  row.n = table.coincidences();
  const int pairs[4][2] = {{0, 0}, {0, 1}, {1, 0}, {1, 1}};
  bool complete = true;
  for (int i = 0; i < 4; ++i) {
    if (table.pair_total(pairs[i][0], pairs[i][1]) > 0) {
      row.e[i] = correlation(table, pairs[i][0], pairs[i][1]);
    } else {
      complete = false;
    }
  }
  if (complete) row.s = s_theta_from_table(table);
  return row;
}

void write_optional(CsvWriter& csv, const std::optional<double>& v) {
  if (v) {
    csv.cell(*v);
  } else {
    csv.empty();
  }
}

void write_chsh_csv(const fs::path& path, const std::vector<ChshRow>& rows) {
  CsvWriter csv(path, {"theta", "S", "E_ab", "E_abp", "E_apb", "E_apbp", "n_coincidences"});
  for (const auto& r : rows) {
    csv.cell(r.theta);
    write_optional(csv, r.s);
    for (const auto& e : r.e) write_optional(csv, e);
    csv.cell(static_cast<unsigned long long>(r.n)).end_row();
  }
}

struct PointResult {
  CoincidenceTable windowed;
  CoincidenceTable unbounded;
};

double rate(const CoincidenceTable::Singles& s, int setting, int slot) {
  const double total = static_cast<double>(s[setting][0] + s[setting][1]);
  return total > 0 ? static_cast<double>(s[setting][slot]) / total : std::numeric_limits<double>::quiet_NaN();
}

}  // namespace

int run_simulate(const SimulateFlags& flags, const std::string& manifest) {
  const auto start = Clock::now();
  const ScanPlan plan = plan_scan(flags.sim);
  const fs::path dir = flags.common.out_dir;
  ensure_directory(dir);

  TimestampExport exp;
  if (flags.export_timestamped) {
    exp.delay_unit = usage_guard("--export-delay-unit", [&] { return cli::parse_duration(flags.export_delay_unit); });
    exp.mean_gap = usage_guard("--export-gap", [&] { return cli::parse_duration(flags.export_gap); });
    exp.shift = usage_guard("--export-shift", [&] { return cli::parse_duration(flags.export_shift); });
    exp.drop_fraction = flags.export_drop;
    if (!(exp.drop_fraction >= 0.0 && exp.drop_fraction < 1.0)) throw UsageError("--export-drop must lie in [0, 1)");
  }
  const bool keep_logs = flags.logs || flags.export_timestamped;
  if (keep_logs) ensure_directory(dir / "logs");

  auto point = [&](std::size_t i) {
    SimConfig c = with_layout(plan.base, plan.thetas[i], plan.layout);
    c.seed = derive_seed(flags.seed, i);
    CoincidenceCounter windowed(c.tag_resolution, c.window);
    CoincidenceCounter unbounded(c.tag_resolution, std::numeric_limits<double>::infinity());
    if (!keep_logs) {
      for_each_event(c, [&](const EventRecord& a, const EventRecord& b) {
        windowed.add(a, b);
        unbounded.add(a, b);
      });
    } else {
      auto [log1, log2] = run_experiment(c);
      log1.metadata.emplace_back("theta", format_real(plan.thetas[i]));
      log2.metadata.emplace_back("theta", format_real(plan.thetas[i]));
      for (std::size_t n = 0; n < log1.events.size(); ++n) {
        windowed.add(log1.events[n], log2.events[n]);
        unbounded.add(log1.events[n], log2.events[n]);
      }
      const std::string stem = "point" + std::to_string(i);
      if (flags.logs) {
        write_station_log_file(log1, dir / "logs" / (stem + "_station1.log"));
        write_station_log_file(log2, dir / "logs" / (stem + "_station2.log"));
      }
      if (flags.export_timestamped) {
        TimestampExport e = exp;
        e.seed = c.seed;
        const auto [t1, t2] = export_timestamped(log1, log2, e);
        write_station_log_file(t1, dir / "logs" / (stem + "_tagged_station1.log"));
        write_station_log_file(t2, dir / "logs" / (stem + "_tagged_station2.log"));
      }
    }
    return PointResult{windowed.table(), unbounded.table()};
  };
  const auto results = parallel_map<PointResult>(plan.thetas.size(), point);

  std::vector<ChshRow> rows;
  std::vector<ChshRow> rows_unbounded;
  CsvWriter singles(dir / "singles.csv", {"theta", "station", "setting", "P_plus", "P_minus", "raw_P_plus", "raw_P_minus"});
  for (std::size_t i = 0; i < results.size(); ++i) {
    const double theta = plan.thetas[i];
    rows.push_back(chsh_row(theta, results[i].windowed));
    rows_unbounded.push_back(chsh_row(theta, results[i].unbounded));
    const CoincidenceTable& t = results[i].windowed;
    for (int station = 0; station < 2; ++station) {
      for (int setting = 0; setting < 2; ++setting) {
        singles.cell(theta).cell(static_cast<long long>(station + 1)).cell(static_cast<long long>(setting));
        singles.cell(rate(t.singles[station], setting, 0)).cell(rate(t.singles[station], setting, 1));
        singles.cell(rate(t.raw_singles[station], setting, 0)).cell(rate(t.raw_singles[station], setting, 1));
        singles.end_row();
      }
    }
  }
  write_chsh_csv(dir / "chsh.csv", rows);
  write_chsh_csv(dir / "chsh_no_window.csv", rows_unbounded);

  if (flags.common.gnuplot) {
    const std::string reference = plan.layout == Layout::kLadder ? "3*cos(2*x)-cos(6*x)" : "sin(4*(pi/6-x))";
    write_gnuplot(dir / "chsh.gp",
                  "set xlabel 'theta'\nset ylabel 'S'\nset yrange [-3:3]\n"
                  "plot 'chsh.csv' using 1:2 with points pt 7 title 'W', \\\n"
                  "     'chsh_no_window.csv' using 1:2 with points pt 6 title 'W = inf', \\\n"
                  "     " + reference + " with lines title 'quantum', 2 dt 2 notitle, -2 dt 2 notitle, "
                  "2*sqrt(2) dt 3 notitle, -2*sqrt(2) dt 3 notitle\n");
  }
  write_manifest(dir, "simulate", manifest, start);
  return 0;
}

int run_sweep(const SweepFlags& flags, const std::string& manifest) {
  const auto start = Clock::now();
  const ScanPlan plan = plan_scan(flags.sim);
  const auto seeds = parse_seeds(flags.seeds);
  const auto ds = parse_reals("--d-list", flags.d_list);
  const auto ratios = parse_reals("--w-over-tau-list", flags.w_over_tau_list);
  for (double d : ds)
    if (!(d >= 0.0) || !std::isfinite(d)) throw UsageError("--d-list: exponents must be finite and >= 0");
  for (double r : ratios)
    if (!(r >= 1.0)) throw UsageError("--w-over-tau-list: values must be >= 1");
  const fs::path dir = flags.common.out_dir;
  ensure_directory(dir);

  struct Job {
    std::size_t d;
    std::size_t seed;
    std::size_t theta;
  };
  std::vector<Job> jobs;
  for (std::size_t a = 0; a < ds.size(); ++a)
    for (std::size_t b = 0; b < seeds.size(); ++b)
      for (std::size_t c = 0; c < plan.thetas.size(); ++c) jobs.push_back({a, b, c});

  auto run = [&](std::size_t j) {
    const Job& job = jobs[j];
    SimConfig c = with_layout(plan.base, plan.thetas[job.theta], plan.layout);
    c.delay_exponent = ds[job.d];
    c.seed = derive_seed(seeds[job.seed], job.theta);
    std::vector<CoincidenceCounter> counters;
    for (double r : ratios) counters.emplace_back(c.tag_resolution, r * c.tag_resolution);
    for_each_event(c, [&](const EventRecord& a, const EventRecord& b) {
      for (auto& counter : counters) counter.add(a, b);
    });
    std::vector<CoincidenceTable> tables;
    for (const auto& counter : counters) tables.push_back(counter.table());
    return tables;
  };
  const auto results = parallel_map<std::vector<CoincidenceTable>>(jobs.size(), run);

  CsvWriter csv(dir / "sweep.csv",
                {"d", "w_over_tau", "seed", "theta", "S", "E_ab", "E_abp", "E_apb", "E_apbp", "n_coincidences"});
  // Mean S over seeds, keyed by (d, ratio, theta).
  std::map<std::tuple<std::size_t, std::size_t, std::size_t>, std::pair<double, int>> mean_s;
  for (std::size_t a = 0; a < ds.size(); ++a) {
    for (std::size_t r = 0; r < ratios.size(); ++r) {
      for (std::size_t j = 0; j < jobs.size(); ++j) {
        if (jobs[j].d != a) continue;
        const ChshRow row = chsh_row(plan.thetas[jobs[j].theta], results[j][r]);
        csv.cell(ds[a]).cell(ratios[r]).cell(static_cast<unsigned long long>(seeds[jobs[j].seed])).cell(row.theta);
        write_optional(csv, row.s);
        for (const auto& e : row.e) write_optional(csv, e);
        csv.cell(static_cast<unsigned long long>(row.n)).end_row();
        if (row.s) {
          auto& acc = mean_s[{a, r, jobs[j].theta}];
          acc.first += *row.s;
          acc.second += 1;
        }
      }
    }
  }

  CsvWriter smax(dir / "smax.csv", {"W_over_tau", "d", "S_max"});
  for (std::size_t a = 0; a < ds.size(); ++a) {
    for (std::size_t r = 0; r < ratios.size(); ++r) {
      std::optional<double> best;
      for (std::size_t t = 0; t < plan.thetas.size(); ++t) {
        const auto it = mean_s.find({a, r, t});
        if (it == mean_s.end()) continue;
        const double v = std::fabs(it->second.first / it->second.second);
        if (!best || v > *best) best = v;
      }
      smax.cell(ratios[r]).cell(ds[a]);
      write_optional(smax, best);
      smax.end_row();
    }
  }
  if (flags.common.gnuplot) {
    write_gnuplot(dir / "smax.gp",
                  "set logscale x\nset xlabel 'W/tau'\nset ylabel 'S_max'\n"
                  "plot 'smax.csv' using 1:3 with linespoints title 'S_max', 2*sqrt(2) dt 2 notitle, 2 dt 2 notitle\n");
  }
  write_manifest(dir, "sweep", manifest, start);
  return 0;
}

int run_analytic(const AnalyticFlags& flags, const std::string& manifest) {
  const auto start = Clock::now();
  const double ratio = usage_guard("--w-over-tau", [&] { return cli::parse_real_list(flags.w_over_tau).at(0); });
  if (!(ratio >= 1.0)) throw UsageError("--w-over-tau must be >= 1");
  if (!(flags.tau > 0.0)) throw UsageError("--tau must be positive");
  if (!(flags.d >= 0.0)) throw UsageError("--d must be >= 0");
  if (flags.points < 1) throw UsageError("--points must be positive");
  if (flags.quad < 1000) throw UsageError("--quad must be at least 1000");
  const fs::path dir = flags.common.out_dir;
  ensure_directory(dir);

  const bool infinite = std::isinf(ratio);
  const WindowSpec spec = infinite ? WindowSpec::infinite() : WindowSpec::finite(flags.tau, ratio * flags.tau);
  const WindowRegime closed_regime = infinite ? WindowRegime::kInfinite : WindowRegime::kZeroLimit;
  const DelayProfile profile{flags.d, 1.0};

  const auto numeric = parallel_map<double>(static_cast<std::size_t>(flags.points), [&](std::size_t i) {
    return correlation_numeric(0.0, kPi * static_cast<double>(i) / flags.points, profile, spec, flags.quad);
  });
  CsvWriter csv(dir / "correlation.csv", {"delta_angle", "E_numeric", "E_closed"});
  for (int i = 0; i < flags.points; ++i) {
    const double delta = kPi * i / flags.points;
    csv.cell(delta).cell(numeric[i]);
    try {
      csv.cell(correlation_closed_form(0.0, delta, flags.d, closed_regime));
    } catch (const UnsupportedExponent&) {
      csv.empty();
    }
    csv.end_row();
  }
  if (flags.common.gnuplot) {
    write_gnuplot(dir / "correlation.gp",
                  "set xlabel 'alpha - beta'\nset ylabel 'E'\n"
                  "plot 'correlation.csv' using 1:2 with points pt 7 title 'numeric', '' using 1:3 with lines title 'closed form'\n");
  }
  write_manifest(dir, "analytic", manifest, start);
  return 0;
}

int run_smax_curve(const SmaxCurveFlags& flags, const std::string& manifest) {
  const auto start = Clock::now();
  const auto ds = parse_reals("--d", flags.d_list);
  const auto ratios = parse_reals("--w-over-tau", flags.w_over_tau_list);
  for (double r : ratios)
    if (!(r >= 1.0) || std::isinf(r)) throw UsageError("--w-over-tau: values must be finite and >= 1");
  for (double d : ds)
    if (!(d >= 0.0)) throw UsageError("--d: exponents must be >= 0");
  if (!(flags.tau > 0.0)) throw UsageError("--tau must be positive");
  if (flags.quad < 1000) throw UsageError("--quad must be at least 1000");
  if (flags.grid < 8) throw UsageError("--grid must be at least 8");
  const fs::path dir = flags.common.out_dir;
  ensure_directory(dir);

  const std::size_t n = ds.size() * ratios.size();
  const auto values = parallel_map<double>(n, [&](std::size_t i) {
    return smax_curve(ds[i / ratios.size()], {ratios[i % ratios.size()]}, flags.tau, flags.quad, flags.grid)
        .front()
        .second;
  });
  CsvWriter csv(dir / "smax_curve.csv", {"w_over_tau", "d", "S_max"});
  for (std::size_t i = 0; i < n; ++i) {
    csv.cell(ratios[i % ratios.size()]).cell(ds[i / ratios.size()]).cell(values[i]).end_row();
  }
  if (flags.common.gnuplot) {
    write_gnuplot(dir / "smax_curve.gp",
                  "set logscale x\nset xlabel 'W/tau'\nset ylabel 'S_max'\n"
                  "plot 'smax_curve.csv' using 1:3 with linespoints title 'S_max', 2*sqrt(2) dt 2 notitle, 2 dt 2 notitle\n");
  }
  write_manifest(dir, "smax-curve", manifest, start);
  return 0;
}

int run_analyze(const AnalyzeFlags& flags, const std::string& manifest) {
  const auto start = Clock::now();
  const double bin = usage_guard("--bin", [&] { return cli::parse_duration(flags.bin); });
  const double scan = usage_guard("--scan-range", [&] { return cli::parse_duration(flags.scan_range); });
  const auto windows = usage_guard("--w-list", [&] { return cli::parse_duration_list(flags.w_list); });
  if (!(bin > 0.0)) throw UsageError("--bin must be positive");
  if (!(scan > 0.0)) throw UsageError("--scan-range must be positive");
  if (windows.empty()) throw UsageError("--w-list must not be empty");
  for (double w : windows)
    if (!(w > 0.0)) throw UsageError("--w-list: windows must be positive");
  if (std::abs(flags.outcome_1) != 1 || std::abs(flags.outcome_2) != 1) throw UsageError("outcomes must be +1 or -1");
  const double hist_window = flags.hist_window.empty()
                                 ? *std::max_element(windows.begin(), windows.end())
                                 : usage_guard("--hist-window", [&] { return cli::parse_duration(flags.hist_window); });
  std::optional<double> fixed_shift;
  if (flags.shift != "auto") fixed_shift = usage_guard("--shift", [&] { return cli::parse_duration(flags.shift); });

  const StationLog log1 = read_station_log_file(flags.log1);
  const StationLog log2 = read_station_log_file(flags.log2);
  const fs::path dir = flags.common.out_dir;
  ensure_directory(dir);

  const Histogram scan_hist = diff_histogram(log1, log2, bin, scan);
  {
    CsvWriter csv(dir / "shift_scan.csv", {"dt_ns", "count"});
    for (const auto& [b, c] : scan_hist.counts) {
      csv.cell(to_ns(scan_hist.center(b))).cell(static_cast<unsigned long long>(c)).end_row();
    }
  }
  const double shift = fixed_shift ? *fixed_shift : optimal_shift(scan_hist);
  std::cout << "shift_ns=" << format_real(to_ns(shift)) << (fixed_shift ? " (fixed)" : " (histogram maximum)") << "\n";

  const auto rows = smax_vs_window(log1, log2, shift, windows);
  {
    CsvWriter csv(dir / "smax_vs_window.csv", {"W_ns", "S_max", "n_pairs"});
    for (const auto& r : rows) {
      csv.cell(to_ns(r.window));
      write_optional(csv, r.s_max);
      csv.cell(static_cast<unsigned long long>(r.n_pairs)).end_row();
    }
  }

  const MatchedPairs pairs = match_pairs(log1, log2, shift, hist_window);
  std::vector<std::pair<std::string, std::vector<double>>> selections;
  {
    CsvWriter csv(dir / "delay_histograms.csv", {"dt_ns", "normalized_count", "setting_pair"});
    for (int s1 = 0; s1 < 2; ++s1) {
      for (int s2 = 0; s2 < 2; ++s2) {
        const PairSelector sel{flags.outcome_1, flags.outcome_2, s1, s2};
        const std::string label = std::to_string(s1) + "-" + std::to_string(s2);
        selections.emplace_back(label, selected_delays(pairs, log1, log2, sel));
        if (selections.back().second.empty()) continue;
        const Histogram h = delay_histogram_by_setting(pairs, log1, log2, sel, bin);
        for (const auto& [center, p] : h.normalized()) csv.cell(to_ns(center)).cell(p).cell(label).end_row();
      }
    }
  }
  {
    CsvWriter csv(dir / "delay_ks.csv", {"setting_pair_a", "setting_pair_b", "n_a", "n_b", "ks", "critical_1pct", "differs"});
    for (std::size_t a = 0; a < selections.size(); ++a) {
      for (std::size_t b = a + 1; b < selections.size(); ++b) {
        const auto& [la, va] = selections[a];
        const auto& [lb, vb] = selections[b];
        if (va.empty() || vb.empty()) continue;
        const double ks = ks_statistic(va, vb);
        const double crit = ks_critical_value(va.size(), vb.size(), 0.01);
        csv.cell(la).cell(lb).cell(static_cast<unsigned long long>(va.size()));
        csv.cell(static_cast<unsigned long long>(vb.size())).cell(ks).cell(crit);
        csv.cell(std::string(ks > crit ? "yes" : "no")).end_row();
      }
    }
  }
  if (flags.common.gnuplot) {
    write_gnuplot(dir / "analyze.gp",
                  "set multiplot layout 1,2\nset xlabel 'W (ns)'\nset ylabel 'S_max'\n"
                  "plot 'smax_vs_window.csv' using 1:2 with linespoints notitle, 2*sqrt(2) dt 2 notitle, 2 dt 2 notitle\n"
                  "set xlabel 't1 - t2 (ns)'\nset ylabel 'counts'\n"
                  "plot 'shift_scan.csv' using 1:2 with steps notitle\nunset multiplot\n");
  }
  write_manifest(dir, "analyze", manifest, start);
  return 0;
}

int run_oracle_check(const OracleFlags& flags, const std::string& manifest) {
  const auto start = Clock::now();
  const int max_k2 = flags.max_k2 > 0 ? flags.max_k2 : flags.max_k1;
  if (flags.max_k1 < 1 || max_k2 < 1 || flags.max_k < 1) throw UsageError("bounds must be positive");

  std::uint64_t cases = 0;
  std::vector<std::array<std::int64_t, 5>> mismatches;
  for (std::int64_t a = 1; a <= flags.max_k1; ++a) {
    for (std::int64_t b = 1; b <= max_k2; ++b) {
      for (std::int64_t k = 1; k <= flags.max_k; ++k) {
        ++cases;
        const std::int64_t closed = pair_count(a, b, k);
        const std::int64_t brute = pair_count_enumerated(a, b, k);
        if (closed != brute) mismatches.push_back({a, b, k, closed, brute});
      }
    }
  }
  std::cout << "cases=" << cases << " mismatches=" << mismatches.size() << "\n";
  if (!flags.out_dir.empty()) {
    const fs::path dir = flags.out_dir;
    ensure_directory(dir);
    CsvWriter csv(dir / "oracle_mismatches.csv", {"K1", "K2", "k", "closed_form", "enumerated"});
    for (const auto& m : mismatches) {
      for (auto v : m) csv.cell(static_cast<long long>(v));
      csv.end_row();
    }
    write_manifest(dir, "oracle-check", manifest, start);
  }
  return mismatches.empty() ? 0 : 1;
}

}  // namespace eprb::tool

#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "eprb/coincidence.hpp"
#include "eprb/station_log.hpp"

namespace eprb {

/// Fixed-width binning; bin index = floor((value - origin) / bin_width).
struct Histogram {
  double bin_width = 1.0;
  double origin = 0.0;
  std::map<std::int64_t, std::uint64_t> counts;

  void add(double value);
  std::uint64_t total() const;
  double center(std::int64_t bin) const { return origin + (static_cast<double>(bin) + 0.5) * bin_width; }
  /// (bin center, fraction of total) for every occupied bin, in bin order.
  std::vector<std::pair<double, double>> normalized() const;
};

/// One coincidence between event i1 of log1 and i2 of log2 (0-based positions),
/// dt = t1 - t2 in seconds.
struct MatchedPair {
  std::size_t i1 = 0;
  std::size_t i2 = 0;
  double dt = 0.0;
};

struct MatchedPairs {
  std::vector<MatchedPair> pairs;  // ordered by i1
  double window = 0.0;
  double shift = 0.0;
};

/// Event times of a log in seconds (tag * time_unit). Throws
/// std::invalid_argument if they are not non-decreasing.
std::vector<double> times_in_seconds(const StationLog& log);

/// Histogram of t1 - t2 (seconds) over every cross-station pair with
/// |t1 - t2| <= scan_range. Two-pointer sweep, O(N1 + N2 + P). The default
/// origin centers a bin on zero.
Histogram diff_histogram(const StationLog& log1, const StationLog& log2, double bin, double scan_range,
                         std::optional<double> origin = std::nullopt);

/// Center of the fullest bin; ties go to the smallest |center|, then to the
/// lower center. Throws NoDataError on an empty histogram.
double optimal_shift(const Histogram& hist);

/// Greedy nearest-first matching: every candidate with |t1 - t2 - shift| < W
/// is ranked by that residual and accepted unless one of its events is
/// already used. Each event ends up in at most one pair.
MatchedPairs match_pairs(const StationLog& log1, const StationLog& log2, double shift, double window);

/// CoincidenceTable keyed by setting index, built from matched pairs.
CoincidenceTable table_from_pairs(const MatchedPairs& pairs, const StationLog& log1, const StationLog& log2);

/// max over the four placements of the minus sign of |sum E - 2 E_j|.
double chsh_max_over_signs(const std::array<double, 4>& e);

struct WindowRow {
  double window = 0.0;
  std::optional<double> s_max;  // empty if some settings pair has no coincidences
  std::size_t n_pairs = 0;
};

std::vector<WindowRow> smax_vs_window(const StationLog& log1, const StationLog& log2, double shift,
                                      const std::vector<double>& windows);

/// Which coincidences enter a delay histogram.
struct PairSelector {
  int outcome_1 = 1;
  int outcome_2 = 1;
  int setting_1 = 0;
  int setting_2 = 0;
};

/// dt of the matched pairs passing `selector`.
std::vector<double> selected_delays(const MatchedPairs& pairs, const StationLog& log1, const StationLog& log2,
                                    const PairSelector& selector);

/// Histogram of the selected dt values (bins centered on multiples of `bin`).
/// Use Histogram::normalized() for unit total. Throws NoDataError if nothing
/// is selected.
Histogram delay_histogram_by_setting(const MatchedPairs& pairs, const StationLog& log1, const StationLog& log2,
                                     const PairSelector& selector, double bin);

/// Two-sample Kolmogorov-Smirnov statistic sup |F_a - F_b|.
double ks_statistic(std::vector<double> a, std::vector<double> b);

/// Asymptotic critical value sqrt(-ln(alpha / 2) / 2) sqrt((n + m) / (n m)).
double ks_critical_value(std::size_t n, std::size_t m, double alpha);

/// Turns index-paired simulated logs into unpaired, timestamped station logs
/// of the kind a laboratory produces.
struct TimestampExport {
  double delay_unit = 5e-9;     // seconds per model time unit T0
  double mean_gap = 1e-6;       // mean spacing between pair emissions, seconds
  double shift = 4e-9;          // station-2 clock runs this much behind station 1
  double drop_fraction = 0.0;   // independent per-detection loss probability
  double time_unit = 1e-9;      // seconds per tag unit in the exported logs
  std::uint64_t seed = 0;
};

std::pair<StationLog, StationLog> export_timestamped(const StationLog& log1, const StationLog& log2,
                                                     const TimestampExport& options);

}  // namespace eprb

#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <map>

#include "eprb/sim_config.hpp"
#include "eprb/station_log.hpp"

namespace eprb {

/// Array slot for an outcome: +1 -> 0, -1 -> 1.
constexpr int outcome_slot(int outcome) noexcept { return outcome == 1 ? 0 : 1; }

/// Coincidence counts C_xy(alpha, beta) for the four settings pairs plus the
/// per-station single counts.
struct CoincidenceTable {
  using Matrix = std::array<std::array<std::uint64_t, 2>, 2>;  // [x slot][y slot]
  using Singles = std::array<std::array<std::uint64_t, 2>, 2>; // [setting][outcome slot]

  std::uint64_t total_events = 0;
  std::array<std::array<Matrix, 2>, 2> counts{};  // [setting 1][setting 2]
  std::array<Singles, 2> singles{};               // [station - 1], coincident events only
  std::array<Singles, 2> raw_singles{};           // [station - 1], every event
  std::array<std::array<Angle, 2>, 2> settings{}; // [station - 1][setting index]

  std::uint64_t pair_total(int setting_1, int setting_2) const;
  std::uint64_t coincidences() const;
  /// The table seen with stations 1 and 2 exchanged.
  CoincidenceTable transposed() const;
};

/// max(1, ceil(t / tau)).
std::int64_t discretize_tag(double t, double tau);

/// k = ceil(W / tau); quotients within 1e-9 (relative) of an integer count as
/// that integer, so W = 10 tau means k = 10 despite rounding in W. Infinite W
/// gives the largest representable k.
std::int64_t window_bins(double window, double tau);

/// Streaming form of count_coincidences: feed index-paired events one at a time.
class CoincidenceCounter {
 public:
  CoincidenceCounter(double tau, double window);

  void add(const EventRecord& e1, const EventRecord& e2);
  const CoincidenceTable& table() const noexcept { return table_; }
  double tau() const noexcept { return tau_; }
  double window() const noexcept { return window_; }

 private:
  double tau_;
  double window_;
  std::int64_t bins_;
  bool unbounded_;
  CoincidenceTable table_;
};

/// Index-paired coincidence counting: event n is a two-particle event iff
/// |k_{n,1} - k_{n,2}| < window_bins(W, tau). Pass W = +inf to accept every
/// pair. Throws std::invalid_argument if the logs are not index-aligned or
/// W < tau.
CoincidenceTable count_coincidences(const StationLog& log1, const StationLog& log2, double tau,
                                    double window);

/// (C++ + C-- - C+- - C-+) / (sum). Throws NoDataError on an empty pair.
double correlation(const CoincidenceTable& table, int setting_1, int setting_2);

/// E for (a, b), (a, b'), (a', b), (a', b') with a/a' station-1 settings 0/1
/// and b/b' station-2 settings 0/1.
std::array<double, 4> chsh_correlations(const CoincidenceTable& table);

struct SinglesKey {
  int station = 1;
  int setting = 0;
  int outcome = 1;
  friend auto operator<=>(const SinglesKey&, const SinglesKey&) = default;
};

/// P_x(setting) = coincident singles / coincidences involving that setting.
/// Settings without coincidences are omitted.
std::map<SinglesKey, double> single_particle_rates(const CoincidenceTable& table);

/// E(a,b) - E(a,b') + E(a',b) + E(a',b').
double chsh(const std::array<double, 4>& e);

using CorrelationFn = std::function<double(double alpha, double beta)>;

/// S(theta) for the given settings layout (see layout_angles()).
///
/// Reported with the sign for which E = -cos 2(a - b) gives
/// 3 cos 2theta - cos 6theta, i.e. the negated chsh() of the four
/// correlations. Bounds are checked on |S| so the sign is a display choice.
double s_theta(const CorrelationFn& e, double theta, Layout layout = Layout::kLadder);

/// s_theta computed from a simulated table laid out by with_layout().
double s_theta_from_table(const CoincidenceTable& table);

enum class Symmetry {
  kRotationInvariant,  // E depends on alpha - beta only
  kGeneral,
};

/// max |S| over all settings. Rotation-invariant E: grid over theta in
/// [0, pi/2) and a golden-section refinement around the best point. General E:
/// grid over all four angles in [0, pi) followed by coordinate-wise
/// golden-section sweeps. Requires grid >= 8.
double s_max(const CorrelationFn& e, int grid, Symmetry symmetry = Symmetry::kRotationInvariant);

/// Maximizer along one coordinate by golden-section search on [lo, hi].
double golden_section_max(const std::function<double(double)>& f, double lo, double hi, double tol = 1e-10);

}  // namespace eprb

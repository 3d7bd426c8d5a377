#include "eprb/coincidence.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <stdexcept>
#include <vector>

#include "eprb/errors.hpp"

namespace eprb {

std::uint64_t CoincidenceTable::pair_total(int s1, int s2) const {
  const Matrix& m = counts[s1][s2];
  return m[0][0] + m[0][1] + m[1][0] + m[1][1];
}

std::uint64_t CoincidenceTable::coincidences() const {
  std::uint64_t sum = 0;
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b) sum += pair_total(a, b);
  return sum;
}

CoincidenceTable CoincidenceTable::transposed() const {
  CoincidenceTable t;
  t.total_events = total_events;
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b)
      for (int x = 0; x < 2; ++x)
        for (int y = 0; y < 2; ++y) t.counts[b][a][y][x] = counts[a][b][x][y];
  t.singles = {singles[1], singles[0]};
  t.raw_singles = {raw_singles[1], raw_singles[0]};
  t.settings = {settings[1], settings[0]};
  return t;
}

std::int64_t discretize_tag(double t, double tau) {
  const double k = std::ceil(t / tau);
  return k < 1.0 ? 1 : static_cast<std::int64_t>(k);
}

std::int64_t window_bins(double window, double tau) {
  if (std::isinf(window)) return std::numeric_limits<std::int64_t>::max();
  const double q = window / tau;
  const double r = std::round(q);
  if (std::fabs(q - r) <= 1e-9 * std::max(1.0, r)) return static_cast<std::int64_t>(r);
  return static_cast<std::int64_t>(std::ceil(q));
}

CoincidenceCounter::CoincidenceCounter(double tau, double window)
    : tau_(tau), window_(window), bins_(0), unbounded_(std::isinf(window)) {
  if (!(tau > 0.0)) throw std::invalid_argument("tau must be positive");
  if (!(window >= tau)) throw std::invalid_argument("window W must satisfy W >= tau");
  bins_ = window_bins(window, tau);
}

void CoincidenceCounter::add(const EventRecord& e1, const EventRecord& e2) {
  if (e1.index != e2.index) {
    throw std::invalid_argument("logs are not index-aligned at event " + std::to_string(e1.index));
  }
  const int x = outcome_slot(e1.outcome);
  const int y = outcome_slot(e2.outcome);
  ++table_.total_events;
  table_.settings[0][e1.setting_index] = e1.setting;
  table_.settings[1][e2.setting_index] = e2.setting;
  ++table_.raw_singles[0][e1.setting_index][x];
  ++table_.raw_singles[1][e2.setting_index][y];

  if (!unbounded_) {
    const std::int64_t k1 = discretize_tag(e1.time_tag, tau_);
    const std::int64_t k2 = discretize_tag(e2.time_tag, tau_);
    if (std::llabs(k1 - k2) >= bins_) return;
  }
  ++table_.counts[e1.setting_index][e2.setting_index][x][y];
  ++table_.singles[0][e1.setting_index][x];
  ++table_.singles[1][e2.setting_index][y];
}

CoincidenceTable count_coincidences(const StationLog& log1, const StationLog& log2, double tau,
                                    double window) {
  if (log1.events.size() != log2.events.size()) {
    throw std::invalid_argument("index-paired counting needs logs of equal length (" +
                                std::to_string(log1.events.size()) + " vs " +
                                std::to_string(log2.events.size()) + ")");
  }
  CoincidenceCounter counter(tau, window);
  for (std::size_t i = 0; i < log1.events.size(); ++i) counter.add(log1.events[i], log2.events[i]);
  return counter.table();
}

double correlation(const CoincidenceTable& table, int s1, int s2) {
  const auto& m = table.counts[s1][s2];
  const std::uint64_t total = table.pair_total(s1, s2);
  if (total == 0) {
    throw NoDataError("no coincidences for settings pair (" + std::to_string(s1) + ", " +
                      std::to_string(s2) + ")");
  }
  const double same = static_cast<double>(m[0][0] + m[1][1]);
  const double diff = static_cast<double>(m[0][1] + m[1][0]);
  return (same - diff) / static_cast<double>(total);
}

std::array<double, 4> chsh_correlations(const CoincidenceTable& table) {
  return {correlation(table, 0, 0), correlation(table, 0, 1), correlation(table, 1, 0),
          correlation(table, 1, 1)};
}

std::map<SinglesKey, double> single_particle_rates(const CoincidenceTable& table) {
  std::map<SinglesKey, double> rates;
  for (int station = 0; station < 2; ++station) {
    for (int setting = 0; setting < 2; ++setting) {
      const auto& c = table.singles[station][setting];
      const std::uint64_t total = c[0] + c[1];
      if (total == 0) continue;
      rates[{station + 1, setting, +1}] = static_cast<double>(c[0]) / static_cast<double>(total);
      rates[{station + 1, setting, -1}] = static_cast<double>(c[1]) / static_cast<double>(total);
    }
  }
  return rates;
}

double chsh(const std::array<double, 4>& e) { return e[0] - e[1] + e[2] + e[3]; }

double s_theta(const CorrelationFn& e, double theta, Layout layout) {
  const auto [a, ap, b, bp] = layout_angles(layout, theta);
  return -chsh({e(a, b), e(a, bp), e(ap, b), e(ap, bp)});
}

double s_theta_from_table(const CoincidenceTable& table) { return -chsh(chsh_correlations(table)); }

double golden_section_max(const std::function<double(double)>& f, double lo, double hi, double tol) {
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = lo;
  double b = hi;
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  double fc = f(c);
  double fd = f(d);
  while (b - a > tol) {
    if (fc >= fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = f(d);
    }
  }
  return fc >= fd ? c : d;
}

namespace {

double s_max_rotation_invariant(const CorrelationFn& e, int grid) {
  const double step = (kPi / 2) / grid;
  auto abs_s = [&](double theta) { return std::fabs(s_theta(e, theta)); };
  int best_i = 0;
  double best = -1.0;
  for (int i = 0; i < grid; ++i) {
    const double v = abs_s(i * step);
    if (v > best) {
      best = v;
      best_i = i;
    }
  }
  const double center = best_i * step;
  const double arg = golden_section_max(abs_s, center - step, center + step, 1e-9);
  return std::max(best, abs_s(arg));
}

double s_max_general(const CorrelationFn& e, int grid) {
  // angles = {a, a', b, b'}
  auto abs_s = [&](const std::array<double, 4>& x) {
    return std::fabs(chsh({e(x[0], x[2]), e(x[0], x[3]), e(x[1], x[2]), e(x[1], x[3])}));
  };
  const double step = kPi / grid;
  std::array<double, 4> best_x{};
  double best = -1.0;
  std::array<double, 4> x{};
  for (int i = 0; i < grid; ++i)
    for (int j = 0; j < grid; ++j)
      for (int k = 0; k < grid; ++k)
        for (int m = 0; m < grid; ++m) {
          x = {i * step, j * step, k * step, m * step};
          const double v = abs_s(x);
          if (v > best) {
            best = v;
            best_x = x;
          }
        }

  double width = step;
  for (int sweep = 0; sweep < 8; ++sweep) {
    for (std::size_t c = 0; c < 4; ++c) {
      auto along = [&](double v) {
        auto y = best_x;
        y[c] = v;
        return abs_s(y);
      };
      const double arg = golden_section_max(along, best_x[c] - width, best_x[c] + width, 1e-10);
      const double v = along(arg);
      if (v > best) {
        best = v;
        best_x[c] = arg;
      }
    }
    width *= 0.5;
  }
  return best;
}

}  // namespace

double s_max(const CorrelationFn& e, int grid, Symmetry symmetry) {
  if (grid < 8) throw std::invalid_argument("s_max grid must be >= 8");
  return symmetry == Symmetry::kRotationInvariant ? s_max_rotation_invariant(e, grid)
                                                  : s_max_general(e, grid);
}

}  // namespace eprb

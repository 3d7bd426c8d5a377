#pragma once

#include <utility>

#include "eprb/dlm.hpp"
#include "eprb/rng.hpp"
#include "eprb/sim_config.hpp"
#include "eprb/station_log.hpp"

namespace eprb {

/// Polarizations carried by the two particles of one pair.
struct PairEmission {
  Angle xi_1;
  Angle xi_2;  // always xi_1 + pi/2
};

PairEmission emit_pair(const SimConfig& config, RngStream& source_rng);

/// T = T0 |sin 2(xi - theta)|^d, with 0^0 taken as 1.
double time_delay_scale(Angle xi, Angle theta, double d, double max_delay);

/// Uniform on (0, T]; exactly 0 when T = 0. Always consumes one variate.
double draw_time_tag(double max_delay, RngStream& tag_rng);

/// One observation station: an optical switch feeding one of two DLM
/// polarizers, plus the time-tag generator. It only ever sees its own
/// particle's polarization.
class Station {
 public:
  Station(int station_id, const SimConfig& config);

  EventRecord observe(std::uint64_t index, Angle polarization);

  int id() const noexcept { return id_; }
  const Polarizer& polarizer(int setting_index) const { return polarizers_.at(setting_index); }

 private:
  int id_;
  double delay_exponent_;
  double max_delay_;
  std::array<Polarizer, 2> polarizers_;
  RngStream switch_rng_;
  RngStream tag_rng_;
};

/// Runs all N events, handing each index-paired (station 1, station 2) record
/// to `sink` instead of storing it.
template <typename Sink>
void for_each_event(const SimConfig& config, Sink&& sink) {
  validate(config);
  RngStream source(config.seed, StreamId::kSource);
  Station station1(1, config);
  Station station2(2, config);
  for (std::uint64_t n = 1; n <= config.n_events; ++n) {
    const PairEmission pair = emit_pair(config, source);
    const EventRecord e1 = station1.observe(n, pair.xi_1);
    const EventRecord e2 = station2.observe(n, pair.xi_2);
    sink(e1, e2);
  }
}

/// Runs all N events and returns the station-1 and station-2 logs. The logs
/// carry a manifest echo of `config` as header metadata.
std::pair<StationLog, StationLog> run_experiment(const SimConfig& config);

}  // namespace eprb

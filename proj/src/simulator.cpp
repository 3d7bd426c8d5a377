#include "eprb/simulator.hpp"

#include <cmath>

namespace eprb {

PairEmission emit_pair(const SimConfig& config, RngStream& source_rng) {
  const Angle xi = config.experiment == Experiment::kI ? Angle::radians(kTwoPi * source_rng.uniform())
                                                       : config.source_angle;
  return PairEmission{xi, Angle::radians(xi.value() + kPi / 2)};
}

namespace {

// T0 * s^d for s = |sin 2(xi - theta)|, with integer fast paths.
double delay_from_sine(double s, double d, double max_delay) {
  if (d == 0.0) return max_delay;
  if (d == 1.0) return max_delay * s;
  if (d == 2.0) return max_delay * s * s;
  if (d == 4.0) return max_delay * (s * s) * (s * s);
  return max_delay * std::pow(s, d);
}

}  // namespace

double time_delay_scale(Angle xi, Angle theta, double d, double max_delay) {
  return delay_from_sine(std::fabs(std::sin(2.0 * (xi.value() - theta.value()))), d, max_delay);
}

double draw_time_tag(double max_delay, RngStream& tag_rng) {
  const double u = tag_rng.uniform_open_closed();
  return max_delay > 0.0 ? u * max_delay : 0.0;
}

namespace {

StreamId switch_stream(int id) { return id == 1 ? StreamId::kSwitch1 : StreamId::kSwitch2; }
StreamId tag_stream(int id) { return id == 1 ? StreamId::kTags1 : StreamId::kTags2; }

const std::array<Angle, 2>& settings_for(int id, const SimConfig& c) {
  return id == 1 ? c.settings_1 : c.settings_2;
}

}  // namespace

Station::Station(int station_id, const SimConfig& config)
    : id_(station_id),
      delay_exponent_(config.delay_exponent),
      max_delay_(config.max_delay),
      polarizers_{Polarizer(settings_for(station_id, config)[0], config.learning),
                  Polarizer(settings_for(station_id, config)[1], config.learning)},
      switch_rng_(config.seed, switch_stream(station_id)),
      tag_rng_(config.seed, tag_stream(station_id)) {}

EventRecord Station::observe(std::uint64_t index, Angle polarization) {
  const int which = switch_rng_.uniform() < 0.5 ? 0 : 1;
  Polarizer& p = polarizers_[which];
  const double rel = polarization.value() - p.orientation().value();
  const double c = std::cos(rel);
  const double s = std::sin(rel);
  const int outcome = p.respond_relative(Vec2{c, s});
  const double T = delay_from_sine(std::fabs(2.0 * s * c), delay_exponent_, max_delay_);
  return EventRecord{index, which, p.orientation(), outcome, draw_time_tag(T, tag_rng_)};
}

std::pair<StationLog, StationLog> run_experiment(const SimConfig& config) {
  validate(config);
  StationLog log1;
  StationLog log2;
  for (auto* log : {&log1, &log2}) {
    log->time_unit = 1.0;
    log->seed = config.seed;
    log->rng = std::string(RngStream::kAlgorithm);
    for (auto& [key, value] : manifest(config)) {
      if (key != "seed" && key != "rng") log->metadata.emplace_back(key, value);
    }
    log->events.reserve(config.n_events);
  }
  log1.station_id = 1;
  log2.station_id = 2;

  for_each_event(config, [&](const EventRecord& e1, const EventRecord& e2) {
    log1.events.push_back(e1);
    log2.events.push_back(e2);
  });
  return {std::move(log1), std::move(log2)};
}

}  // namespace eprb

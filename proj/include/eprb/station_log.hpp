#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "eprb/angle.hpp"

namespace eprb {

/// One detection event at one station.
struct EventRecord {
  std::uint64_t index = 0;  // n, 1-based
  int setting_index = 0;    // 0: first polarizer of the station, 1: second
  Angle setting;
  int outcome = 1;          // +1 or -1
  double time_tag = 0.0;

  friend bool operator==(const EventRecord&, const EventRecord&) = default;
};

/// All events recorded at one station during a run, plus header metadata.
struct StationLog {
  int station_id = 1;
  double time_unit = 1.0;  // seconds per tag unit
  std::optional<std::uint64_t> seed;
  std::optional<std::string> rng;
  /// Any further `# key=value` header lines, in file order.
  std::vector<std::pair<std::string, std::string>> metadata;
  std::vector<EventRecord> events;

  friend bool operator==(const StationLog&, const StationLog&) = default;
};

/// Throws ConfigError describing the first violated invariant.
void validate(const StationLog& log);

/// Writes the canonical line format. Reals use 17 significant digits so that
/// read_station_log reproduces every double bit-for-bit.
void write_station_log(const StationLog& log, std::ostream& out);
StationLog read_station_log(std::istream& in);

void write_station_log_file(const StationLog& log, const std::filesystem::path& path);
StationLog read_station_log_file(const std::filesystem::path& path);

/// Shortest string carrying 17 significant digits of `value`.
std::string format_real(double value);

}  // namespace eprb

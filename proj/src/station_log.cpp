#include "eprb/station_log.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <string_view>
#include <system_error>

#include "eprb/errors.hpp"

namespace eprb {

namespace {

char* put_real(char* first, char* last, double value) {
  auto [ptr, ec] = std::to_chars(first, last, value);  // shortest round-trip form
  if (ec != std::errc{}) throw std::runtime_error("format_real: buffer too small");
  return ptr;
}

template <typename Int>
char* put_int(char* first, char* last, Int value) {
  auto [ptr, ec] = std::to_chars(first, last, value);
  if (ec != std::errc{}) throw std::runtime_error("format: buffer too small");
  return ptr;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

template <typename T>
bool parse_number(std::string_view text, T& out) {
  text = trim(text);
  if (text.empty()) return false;
  if (text.front() == '+') text.remove_prefix(1);
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), out);
  return ec == std::errc{} && ptr == text.data() + text.size();
}

void check_write(std::ostream& out, const char* what) {
  if (!out) throw std::runtime_error(std::string("station log write failed: ") + what);
}

}  // namespace

std::string format_real(double value) {
  std::array<char, 40> buf{};
  char* end = put_real(buf.data(), buf.data() + buf.size(), value);
  return std::string(buf.data(), end);
}

void validate(const StationLog& log) {
  if (log.station_id != 1 && log.station_id != 2) {
    throw ConfigError("station_id must be 1 or 2");
  }
  if (!(log.time_unit > 0.0) || !std::isfinite(log.time_unit)) {
    throw ConfigError("time_unit must be a positive real");
  }
  std::uint64_t prev = 0;
  for (const auto& ev : log.events) {
    if (ev.index <= prev) throw ConfigError("event indices must be strictly increasing and positive");
    prev = ev.index;
    if (ev.outcome != 1 && ev.outcome != -1) throw ConfigError("outcome must be +1 or -1");
    if (ev.setting_index != 0 && ev.setting_index != 1) throw ConfigError("setting index must be 0 or 1");
    if (!(ev.time_tag >= 0.0) || !std::isfinite(ev.time_tag)) {
      throw ConfigError("time tags must be finite and non-negative");
    }
  }
}

void write_station_log(const StationLog& log, std::ostream& out) {
  validate(log);
  out << "# station=" << log.station_id << '\n';
  out << "# time_unit=" << format_real(log.time_unit) << '\n';
  if (log.seed) out << "# seed=" << *log.seed << '\n';
  if (log.rng) out << "# rng=" << *log.rng << '\n';
  for (const auto& [key, value] : log.metadata) out << "# " << key << '=' << value << '\n';
  check_write(out, "header");

  std::array<char, 160> line{};
  char* const last = line.data() + line.size();
  for (const auto& ev : log.events) {
    char* p = put_int(line.data(), last, ev.index);
    *p++ = ',';
    p = put_int(p, last, ev.setting_index);
    *p++ = ',';
    p = put_real(p, last, ev.setting.value());
    *p++ = ',';
    p = put_int(p, last, ev.outcome);
    *p++ = ',';
    p = put_real(p, last, ev.time_tag);
    *p++ = '\n';
    out.write(line.data(), p - line.data());
  }
  out.flush();
  check_write(out, "events");
}

StationLog read_station_log(std::istream& in) {
  StationLog log;
  bool have_station = false;
  bool have_unit = false;
  bool in_header = true;
  std::uint64_t prev_index = 0;
  std::string raw;
  std::size_t line_no = 0;

  while (std::getline(in, raw)) {
    ++line_no;
    std::string_view line = trim(raw);
    if (line.empty()) continue;

    if (line.front() == '#') {
      if (!in_header) throw ParseError(line_no, "header line after data");
      std::string_view body = trim(line.substr(1));
      auto eq = body.find('=');
      if (eq == std::string_view::npos) throw ParseError(line_no, "malformed header, expected '# key=value'");
      std::string_view key = trim(body.substr(0, eq));
      std::string_view value = trim(body.substr(eq + 1));
      if (key.empty()) throw ParseError(line_no, "malformed header, empty key");

      if (key == "station") {
        int id = 0;
        if (!parse_number(value, id) || (id != 1 && id != 2)) {
          throw ParseError(line_no, "station must be 1 or 2");
        }
        log.station_id = id;
        have_station = true;
      } else if (key == "time_unit") {
        double unit = 0.0;
        if (!parse_number(value, unit) || !(unit > 0.0) || !std::isfinite(unit)) {
          throw ParseError(line_no, "time_unit must be a positive real");
        }
        log.time_unit = unit;
        have_unit = true;
      } else if (key == "seed") {
        std::uint64_t seed = 0;
        if (!parse_number(value, seed)) throw ParseError(line_no, "seed must be an unsigned 64-bit integer");
        log.seed = seed;
      } else if (key == "rng") {
        log.rng = std::string(value);
      } else {
        log.metadata.emplace_back(std::string(key), std::string(value));
      }
      continue;
    }

    if (in_header) {
      if (!have_station) throw ParseError(line_no, "missing '# station=' header");
      if (!have_unit) throw ParseError(line_no, "missing '# time_unit=' header");
      in_header = false;
    }

    std::array<std::string_view, 5> fields;
    std::size_t count = 0;
    std::string_view rest = line;
    while (true) {
      auto comma = rest.find(',');
      if (count == fields.size()) throw ParseError(line_no, "too many fields, expected 5");
      fields[count++] = rest.substr(0, comma);
      if (comma == std::string_view::npos) break;
      rest.remove_prefix(comma + 1);
    }
    if (count != fields.size()) throw ParseError(line_no, "expected 5 comma-separated fields");

    EventRecord ev;
    double angle = 0.0;
    if (!parse_number(fields[0], ev.index) || ev.index == 0) throw ParseError(line_no, "bad event index");
    if (ev.index <= prev_index) throw ParseError(line_no, "event indices must be strictly increasing");
    if (!parse_number(fields[1], ev.setting_index) || (ev.setting_index != 0 && ev.setting_index != 1)) {
      throw ParseError(line_no, "setting index must be 0 or 1");
    }
    if (!parse_number(fields[2], angle) || !std::isfinite(angle)) throw ParseError(line_no, "bad setting angle");
    if (!parse_number(fields[3], ev.outcome) || (ev.outcome != 1 && ev.outcome != -1)) {
      throw ParseError(line_no, "outcome must be +1 or -1");
    }
    if (!parse_number(fields[4], ev.time_tag) || !(ev.time_tag >= 0.0) || !std::isfinite(ev.time_tag)) {
      throw ParseError(line_no, "time tag must be a finite non-negative real");
    }
    ev.setting = Angle::radians(angle);
    prev_index = ev.index;
    log.events.push_back(ev);
  }
  if (in.bad()) throw std::runtime_error("station log read failed");

  if (in_header) {
    if (!have_station) throw ParseError(line_no, "missing '# station=' header");
    if (!have_unit) throw ParseError(line_no, "missing '# time_unit=' header");
  }
  return log;
}

void write_station_log_file(const StationLog& log, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
  try {
    write_station_log(log, out);
  } catch (const std::runtime_error& e) {
    throw std::runtime_error(path.string() + ": " + e.what());
  }
}

StationLog read_station_log_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  return read_station_log(in);
}

}  // namespace eprb

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace eprb {

/// Malformed station-log input; carries the 1-based line number.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A ratio with a vanishing denominator (no coincidences, empty histogram).
class NoDataError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class UnsupportedExponent : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

}  // namespace eprb

#pragma once

#include <filesystem>
#include <fstream>
#include <initializer_list>
#include <string>
#include <vector>

namespace eprb::tool {

/// Raised for bad flag values found after CLI11 parsing (exit code 2).
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Comma-separated writer. Reals use the shortest round-trip representation,
/// so identical inputs always give byte-identical files.
class CsvWriter {
 public:
  CsvWriter(const std::filesystem::path& path, std::initializer_list<std::string> header);

  CsvWriter& cell(double value);
  CsvWriter& cell(long long value);
  CsvWriter& cell(unsigned long long value);
  CsvWriter& cell(const std::string& value);
  CsvWriter& empty();
  void end_row();

 private:
  void separator();

  std::filesystem::path path_;
  std::ofstream out_;
  bool row_started_ = false;
};

void ensure_directory(const std::filesystem::path& dir);

/// Writes a gnuplot script next to the CSV it plots.
void write_gnuplot(const std::filesystem::path& script, const std::string& body);

}  // namespace eprb::tool

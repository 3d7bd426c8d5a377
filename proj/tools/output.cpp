#include "output.hpp"

#include <stdexcept>

#include "eprb/station_log.hpp"

namespace eprb::tool {

CsvWriter::CsvWriter(const std::filesystem::path& path, std::initializer_list<std::string> header)
    : path_(path), out_(path) {
  if (!out_) throw std::runtime_error("cannot write " + path.string());
  for (const auto& h : header) cell(h);
  end_row();
}

void CsvWriter::separator() {
  if (row_started_) out_ << ',';
  row_started_ = true;
}

CsvWriter& CsvWriter::cell(double value) {
  separator();
  out_ << format_real(value == 0.0 ? 0.0 : value);  // no "-0"
  return *this;
}

CsvWriter& CsvWriter::cell(long long value) {
  separator();
  out_ << value;
  return *this;
}

CsvWriter& CsvWriter::cell(unsigned long long value) {
  separator();
  out_ << value;
  return *this;
}

CsvWriter& CsvWriter::cell(const std::string& value) {
  separator();
  out_ << value;
  return *this;
}

CsvWriter& CsvWriter::empty() {
  separator();
  return *this;
}

void CsvWriter::end_row() {
  out_ << '\n';
  row_started_ = false;
  if (!out_) throw std::runtime_error("write failed for " + path_.string());
}

void ensure_directory(const std::filesystem::path& dir) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw std::runtime_error("cannot create directory " + dir.string() + ": " + ec.message());
}

void write_gnuplot(const std::filesystem::path& script, const std::string& body) {
  std::ofstream out(script);
  if (!out) throw std::runtime_error("cannot write " + script.string());
  out << "set datafile separator ','\nset key autotitle columnhead\n" << body;
}

}  // namespace eprb::tool

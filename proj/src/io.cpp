#include "qparl/io.hpp"

#include <charconv>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <vector>

#include "qparl/errors.hpp"

namespace qparl {

std::string format_double(double v, int significant_digits) {
  char buf[48];
  auto r = std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::general,
                         significant_digits);
  return std::string(buf, r.ptr);
}

void write_csv(const std::filesystem::path& file, const TimeSeries& series) {
  std::ofstream out(file, std::ios::trunc);
  if (!out) throw IoError("cannot open for writing: " + file.string());

  out << "t";
  for (int j = 1; j <= series.n_modes(); ++j) out << ",mean_yes_" << j;
  out << ",entropy,purity\n";

  for (size_t i = 0; i < series.n_samples(); ++i) {
    out << format_double(series.times[i]);
    for (int j = 0; j < series.n_modes(); ++j) {
      out << ',' << format_double(series.mean_yes[static_cast<size_t>(j)][i]);
    }
    out << ',' << format_double(series.entropy[i]);
    out << ',' << format_double(series.purity[i]) << '\n';
  }
  if (!out.flush()) throw IoError("write failed: " + file.string());
}

namespace {

std::vector<std::string> split(const std::string& line, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(line);
  std::string item;
  while (std::getline(ss, item, sep)) out.push_back(item);
  return out;
}

double parse_cell(const std::string& cell, const std::filesystem::path& file) {
  char* end = nullptr;
  double v = std::strtod(cell.c_str(), &end);
  if (end != cell.c_str() + cell.size()) {
    throw IoError("malformed numeric cell '" + cell + "' in " + file.string());
  }
  return v;
}

}  // namespace

TimeSeries read_csv(const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in) throw IoError("cannot open for reading: " + file.string());

  std::string header;
  if (!std::getline(in, header)) throw IoError("empty file: " + file.string());
  if (!header.empty() && header.back() == '\r') header.pop_back();
  const auto columns = split(header, ',');
  if (columns.size() < 3 || columns.front() != "t" || columns[columns.size() - 2] != "entropy" ||
      columns.back() != "purity") {
    throw IoError("unexpected header in " + file.string());
  }
  const int n_modes = static_cast<int>(columns.size()) - 3;
  for (int j = 1; j <= n_modes; ++j) {
    if (columns[static_cast<size_t>(j)] != "mean_yes_" + std::to_string(j)) {
      throw IoError("unexpected header in " + file.string());
    }
  }

  TimeSeries series;
  series.mean_yes.resize(static_cast<size_t>(n_modes));
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const auto cells = split(line, ',');
    if (cells.size() != columns.size()) {
      throw IoError("row width mismatch in " + file.string());
    }
    series.times.push_back(parse_cell(cells[0], file));
    for (int j = 0; j < n_modes; ++j) {
      series.mean_yes[static_cast<size_t>(j)].push_back(
          parse_cell(cells[static_cast<size_t>(j) + 1], file));
    }
    series.entropy.push_back(parse_cell(cells[cells.size() - 2], file));
    series.purity.push_back(parse_cell(cells.back(), file));
  }
  return series;
}

}  // namespace qparl

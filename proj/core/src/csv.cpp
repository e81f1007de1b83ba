#include "htldp/csv.hpp"

#include <charconv>
#include <cmath>
#include <istream>
#include <limits>
#include <ostream>

#include "htldp/errors.hpp"

namespace htldp {

std::string format_real(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), x);
  if (ec != std::errc()) throw std::runtime_error("format_real: to_chars failed");
  return std::string(buf, ptr);
}

double parse_real(std::string_view text) {
  if (text == "inf" || text == "+inf") return std::numeric_limits<double>::infinity();
  if (text == "-inf") return -std::numeric_limits<double>::infinity();
  if (text == "nan") return std::numeric_limits<double>::quiet_NaN();
  if (!text.empty() && text.front() == '+') text.remove_prefix(1);
  double value = 0.0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw ValidationError("cannot parse real number '" + std::string(text) + "'");
  }
  return value;
}

void CsvTable::add_row(std::vector<std::string> row) {
  if (row.size() != header.size()) throw ValidationError("csv row width does not match header");
  rows.push_back(std::move(row));
}

std::size_t CsvTable::column(std::string_view name) const {
  for (std::size_t i = 0; i < header.size(); ++i) {
    if (header[i] == name) return i;
  }
  throw ValidationError("csv has no column '" + std::string(name) + "'");
}

namespace {

void write_line(std::ostream& os, const std::vector<std::string>& fields) {
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i) os << ',';
    os << fields[i];
  }
  os << '\n';
}

std::vector<std::string> split_line(const std::string& line) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const auto comma = line.find(',', start);
    out.push_back(line.substr(start, comma == std::string::npos ? std::string::npos : comma - start));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

}  // namespace

void write_csv(std::ostream& os, const CsvTable& table) {
  write_line(os, table.header);
  for (const auto& row : table.rows) write_line(os, row);
}

CsvTable read_csv(std::istream& is) {
  CsvTable table;
  std::string line;
  bool have_header = false;
  while (std::getline(is, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (!have_header) {
      if (line.empty() || line.front() == '#') continue;
      table.header = split_line(line);
      have_header = true;
      continue;
    }
    if (line.empty()) continue;
    table.add_row(split_line(line));
  }
  if (!have_header) throw ValidationError("csv input has no header row");
  return table;
}

}  // namespace htldp

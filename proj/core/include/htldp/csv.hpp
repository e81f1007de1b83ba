#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace htldp {

/// Shortest decimal text that parses back to the same double; "inf" / "-inf" / "nan" otherwise.
std::string format_real(double x);

/// Parses the output of format_real (and any plain decimal). Throws ValidationError.
double parse_real(std::string_view text);

/// Comma separated table with a header row, '.' decimals and no quoting.
/// Fields must not contain commas or newlines.
struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  void add_row(std::vector<std::string> row);
  std::size_t column(std::string_view name) const;
};

void write_csv(std::ostream& os, const CsvTable& table);
/// Lines starting with '#' before the header are skipped.
CsvTable read_csv(std::istream& is);

}  // namespace htldp

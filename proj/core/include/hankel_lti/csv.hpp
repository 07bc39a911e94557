#pragma once

#include <string>
#include <vector>

#include "hankel_lti/types.hpp"

namespace hlti {

/// Numeric table with a header row. Serialized with 17 significant digits,
/// LF line endings, so identical data is byte-identical on disk.
struct CsvTable {
  std::vector<std::string> header;
  std::vector<RealVector> rows;

  std::size_t cols() const { return header.size(); }
  void push_row(RealVector row);
};

std::string to_csv_string(const CsvTable& table);
void write_csv(const std::string& path, const CsvTable& table);

/// Parses a table written by to_csv_string. Malformed content reports the
/// offending 1-based line number.
CsvTable parse_csv(const std::string& content);
CsvTable read_csv(const std::string& path);

/// The formatter behind the CSV writer, exposed for anything else that needs
/// reproducible floats ("%.17g").
std::string format_double(double value);

}  // namespace hlti

#include "hankel_lti/csv.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

namespace hlti {

void CsvTable::push_row(RealVector row) {
  require(row.size() == header.size(), "CSV row width does not match the header");
  rows.push_back(std::move(row));
}

std::string format_double(double value) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", value);
  return buf;
}

std::string to_csv_string(const CsvTable& table) {
  std::string out;
  for (std::size_t j = 0; j < table.header.size(); ++j) {
    if (j) out += ',';
    out += table.header[j];
  }
  out += '\n';
  for (const auto& row : table.rows) {
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (j) out += ',';
      out += format_double(row[j]);
    }
    out += '\n';
  }
  return out;
}

void write_csv(const std::string& path, const CsvTable& table) {
  std::ofstream f(path, std::ios::binary);
  require(f.good(), "cannot open CSV for writing: " + path);
  const std::string body = to_csv_string(table);
  f.write(body.data(), static_cast<std::streamsize>(body.size()));
  require(f.good(), "failed writing CSV: " + path);
}

namespace {

std::vector<std::string> split_fields(const std::string& line) {
  std::vector<std::string> out;
  std::string cur;
  for (const char ch : line) {
    if (ch == ',') {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  out.push_back(cur);
  return out;
}

}  // namespace

CsvTable parse_csv(const std::string& content) {
  CsvTable table;
  std::istringstream in(content);
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const auto fields = split_fields(line);
    if (lineno == 1) {
      table.header = fields;
      continue;
    }
    if (fields.size() != table.header.size()) {
      std::ostringstream os;
      os << "CSV line " << lineno << ": expected " << table.header.size() << " fields, found "
         << fields.size();
      throw std::invalid_argument(os.str());
    }
    RealVector row(fields.size());
    for (std::size_t j = 0; j < fields.size(); ++j) {
      std::size_t consumed = 0;
      try {
        row[j] = std::stod(fields[j], &consumed);
      } catch (const std::exception&) {
        consumed = 0;
      }
      if (consumed != fields[j].size() || fields[j].empty()) {
        std::ostringstream os;
        os << "CSV line " << lineno << ": field " << j + 1 << " is not a number: '" << fields[j]
           << "'";
        throw std::invalid_argument(os.str());
      }
    }
    table.rows.push_back(std::move(row));
  }
  require(!table.header.empty(), "CSV content has no header row");
  return table;
}

CsvTable read_csv(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  require(f.good(), "cannot open CSV for reading: " + path);
  std::ostringstream os;
  os << f.rdbuf();
  return parse_csv(os.str());
}

}  // namespace hlti

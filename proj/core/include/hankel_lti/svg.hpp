#pragma once

#include <string>

#include "hankel_lti/csv.hpp"

namespace hlti {

enum class PlotKind { line, histogram, quantile_band };

struct PlotOptions {
  std::string title;
  bool log_x = false;
  bool log_y = false;
  int width = 720;
  int height = 480;
};

/// Standalone SVG 1.1 from a CSV table; no external renderer involved.
/// line: column 0 is x, every further column one series.
/// histogram: column 0 bin position, column 1 count.
/// quantile_band: columns x, min, q1, median, q3, max -> nested bands plus
/// the median line.
std::string emit_svg(const CsvTable& table, PlotKind kind, const PlotOptions& options = {});

void write_svg(const std::string& path, const CsvTable& table, PlotKind kind,
               const PlotOptions& options = {});

}  // namespace hlti

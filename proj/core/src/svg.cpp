#include "hankel_lti/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace hlti {

namespace {

const char* kSeriesColors[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                               "#ff7f0e", "#8c564b", "#17becf", "#7f7f7f"};

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.6g", v);
  return buf;
}

struct Axis {
  double lo = 0.0, hi = 1.0;
  bool log_scale = false;

  double place(double v, double pix_lo, double pix_hi) const {
    double a = lo, b = hi, x = v;
    if (log_scale) {
      a = std::log10(lo);
      b = std::log10(hi);
      x = std::log10(std::max(v, 1e-300));
    }
    if (b <= a) return pix_lo;
    return pix_lo + (x - a) / (b - a) * (pix_hi - pix_lo);
  }
};

Axis fit_axis(const CsvTable& t, std::size_t col_begin, std::size_t col_end, bool log_scale) {
  Axis ax;
  ax.log_scale = log_scale;
  double lo = 1e308, hi = -1e308;
  for (const auto& row : t.rows)
    for (std::size_t c = col_begin; c < col_end && c < row.size(); ++c) {
      const double v = row[c];
      if (log_scale && v <= 0.0) continue;
      lo = std::min(lo, v);
      hi = std::max(hi, v);
    }
  if (lo > hi) {  // empty data
    lo = log_scale ? 0.1 : 0.0;
    hi = 1.0;
  }
  if (lo == hi) {
    lo = log_scale ? lo * 0.5 : lo - 1.0;
    hi = log_scale ? hi * 2.0 : hi + 1.0;
  }
  ax.lo = lo;
  ax.hi = hi;
  return ax;
}

void axis_ticks(std::ostringstream& svg, const Axis& ax, bool horizontal, double pix_lo,
                double pix_hi, double cross) {
  const int ticks = 5;
  for (int i = 0; i <= ticks; ++i) {
    double v;
    if (ax.log_scale) {
      const double l0 = std::log10(ax.lo), l1 = std::log10(ax.hi);
      v = std::pow(10.0, l0 + (l1 - l0) * i / ticks);
    } else {
      v = ax.lo + (ax.hi - ax.lo) * i / ticks;
    }
    const double p = ax.place(v, pix_lo, pix_hi);
    if (horizontal) {
      svg << "<line x1='" << fmt(p) << "' y1='" << fmt(cross) << "' x2='" << fmt(p) << "' y2='"
          << fmt(cross + 5) << "' stroke='#333'/>\n";
      svg << "<text x='" << fmt(p) << "' y='" << fmt(cross + 18)
          << "' font-size='10' text-anchor='middle'>" << fmt(v) << "</text>\n";
    } else {
      svg << "<line x1='" << fmt(cross - 5) << "' y1='" << fmt(p) << "' x2='" << fmt(cross)
          << "' y2='" << fmt(p) << "' stroke='#333'/>\n";
      svg << "<text x='" << fmt(cross - 8) << "' y='" << fmt(p + 3)
          << "' font-size='10' text-anchor='end'>" << fmt(v) << "</text>\n";
    }
  }
}

}  // namespace

std::string emit_svg(const CsvTable& table, PlotKind kind, const PlotOptions& options) {
  require(!table.header.empty(), "plot needs a table with a header");
  if (kind == PlotKind::quantile_band)
    require(table.cols() >= 6, "quantile-band plot needs columns x,min,q1,median,q3,max");
  if (kind == PlotKind::histogram)
    require(table.cols() >= 2, "histogram plot needs columns position,count");
  if (kind == PlotKind::line) require(table.cols() >= 2, "line plot needs x plus one series");

  const double w = options.width, h = options.height;
  const double ml = 56, mr = 16, mt = options.title.empty() ? 16 : 34, mb = 40;
  const double px0 = ml, px1 = w - mr, py0 = h - mb, py1 = mt;  // y grows upward

  const Axis xax = fit_axis(table, 0, 1, options.log_x);
  const Axis yax = fit_axis(table, 1, table.cols(), options.log_y);

  std::ostringstream svg;
  svg << "<?xml version='1.0' encoding='UTF-8'?>\n";
  svg << "<svg xmlns='http://www.w3.org/2000/svg' version='1.1' width='" << options.width
      << "' height='" << options.height << "' viewBox='0 0 " << options.width << " "
      << options.height << "'>\n";
  svg << "<rect width='100%' height='100%' fill='white'/>\n";
  if (!options.title.empty())
    svg << "<text x='" << fmt(w / 2) << "' y='20' font-size='14' text-anchor='middle'>"
        << options.title << "</text>\n";
  svg << "<line x1='" << fmt(px0) << "' y1='" << fmt(py0) << "' x2='" << fmt(px1) << "' y2='"
      << fmt(py0) << "' stroke='#333'/>\n";
  svg << "<line x1='" << fmt(px0) << "' y1='" << fmt(py0) << "' x2='" << fmt(px0) << "' y2='"
      << fmt(py1) << "' stroke='#333'/>\n";
  axis_ticks(svg, xax, true, px0, px1, py0);
  axis_ticks(svg, yax, false, py0, py1, px0);

  const auto X = [&](double v) { return xax.place(v, px0, px1); };
  const auto Y = [&](double v) { return yax.place(v, py0, py1); };

  if (!table.rows.empty()) {
    if (kind == PlotKind::line) {
      for (std::size_t c = 1; c < table.cols(); ++c) {
        svg << "<polyline fill='none' stroke='" << kSeriesColors[(c - 1) % 8]
            << "' stroke-width='1.5' points='";
        for (const auto& row : table.rows) svg << fmt(X(row[0])) << ',' << fmt(Y(row[c])) << ' ';
        svg << "'/>\n";
      }
    } else if (kind == PlotKind::histogram) {
      const double bar_w =
          table.rows.size() > 1 ? (px1 - px0) / static_cast<double>(table.rows.size()) * 0.9
                                : 20.0;
      for (const auto& row : table.rows) {
        const double x = X(row[0]) - bar_w / 2;
        const double y = Y(row[1]);
        svg << "<rect x='" << fmt(x) << "' y='" << fmt(y) << "' width='" << fmt(bar_w)
            << "' height='" << fmt(py0 - y) << "' fill='#1f77b4' fill-opacity='0.8'/>\n";
      }
    } else {  // quantile_band: min..max light, q1..q3 dark, median line
      const auto band = [&](std::size_t lo_col, std::size_t hi_col, const char* fill,
                            const char* opacity) {
        svg << "<polygon fill='" << fill << "' fill-opacity='" << opacity << "' points='";
        for (const auto& row : table.rows) svg << fmt(X(row[0])) << ',' << fmt(Y(row[lo_col])) << ' ';
        for (auto it = table.rows.rbegin(); it != table.rows.rend(); ++it)
          svg << fmt(X((*it)[0])) << ',' << fmt(Y((*it)[hi_col])) << ' ';
        svg << "'/>\n";
      };
      band(1, 5, "#1f77b4", "0.15");
      band(2, 4, "#1f77b4", "0.35");
      svg << "<polyline fill='none' stroke='#1f3fa4' stroke-width='1.8' points='";
      for (const auto& row : table.rows) svg << fmt(X(row[0])) << ',' << fmt(Y(row[3])) << ' ';
      svg << "'/>\n";
    }
  }

  // legend for line plots with several series
  if (kind == PlotKind::line && table.cols() > 2) {
    double ly = py1 + 8;
    for (std::size_t c = 1; c < table.cols(); ++c) {
      svg << "<line x1='" << fmt(px1 - 120) << "' y1='" << fmt(ly) << "' x2='" << fmt(px1 - 100)
          << "' y2='" << fmt(ly) << "' stroke='" << kSeriesColors[(c - 1) % 8]
          << "' stroke-width='2'/>\n";
      svg << "<text x='" << fmt(px1 - 95) << "' y='" << fmt(ly + 3) << "' font-size='10'>"
          << table.header[c] << "</text>\n";
      ly += 14;
    }
  }
  svg << "</svg>\n";
  return svg.str();
}

void write_svg(const std::string& path, const CsvTable& table, PlotKind kind,
               const PlotOptions& options) {
  std::ofstream f(path, std::ios::binary);
  require(f.good(), "cannot open SVG for writing: " + path);
  const std::string body = emit_svg(table, kind, options);
  f.write(body.data(), static_cast<std::streamsize>(body.size()));
  require(f.good(), "failed writing SVG: " + path);
}

}  // namespace hlti

#include "htldp/svg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <ostream>

#include "htldp/csv.hpp"

namespace htldp {

namespace {

constexpr const char* kColors[] = {"#1f77b4", "#d62728", "#2ca02c", "#ff7f0e", "#9467bd", "#8c564b"};

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

std::string num(double v) {
  return format_real(std::round(v * 100.0) / 100.0);
}

struct Range {
  double lo = std::numeric_limits<double>::infinity();
  double hi = -std::numeric_limits<double>::infinity();

  void add(double v) {
    if (!std::isfinite(v)) return;
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
  void settle() {
    if (!std::isfinite(lo)) {
      lo = 0.0;
      hi = 1.0;
    }
    if (hi - lo < 1e-12) {
      lo -= 0.5;
      hi += 0.5;
    }
  }
};

}  // namespace

void SvgPlot::write(std::ostream& os) const {
  const double left = 70, right = 20, top = 40, bottom = 50;
  const double pw = width - left - right;
  const double ph = height - top - bottom;
  Range xr, yr;
  for (const auto& s : series) {
    for (std::size_t i = 0; i < std::min(s.x.size(), s.y.size()); ++i) {
      if (std::isfinite(s.x[i]) && std::isfinite(s.y[i])) {
        xr.add(s.x[i]);
        yr.add(s.y[i]);
      }
    }
  }
  xr.settle();
  if (fixed_y) {
    yr.lo = y_min;
    yr.hi = y_max;
  } else {
    yr.settle();
    const double pad = 0.05 * (yr.hi - yr.lo);
    yr.lo -= pad;
    yr.hi += pad;
  }
  auto px = [&](double x) { return left + pw * (x - xr.lo) / (xr.hi - xr.lo); };
  auto py = [&](double y) { return top + ph * (1.0 - (y - yr.lo) / (yr.hi - yr.lo)); };

  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << num(width) << "\" height=\"" << num(height)
     << "\" font-family=\"sans-serif\" font-size=\"12\">\n";
  os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  os << "<text x=\"" << num(width / 2) << "\" y=\"22\" text-anchor=\"middle\" font-size=\"14\">" << escape(title)
     << "</text>\n";
  os << "<rect x=\"" << num(left) << "\" y=\"" << num(top) << "\" width=\"" << num(pw) << "\" height=\"" << num(ph)
     << "\" fill=\"none\" stroke=\"black\"/>\n";
  for (int k = 0; k <= 4; ++k) {
    const double xv = xr.lo + (xr.hi - xr.lo) * k / 4.0;
    const double yv = yr.lo + (yr.hi - yr.lo) * k / 4.0;
    os << "<text x=\"" << num(px(xv)) << "\" y=\"" << num(top + ph + 16) << "\" text-anchor=\"middle\">"
       << format_real(std::round(xv * 1000.0) / 1000.0) << "</text>\n";
    os << "<text x=\"" << num(left - 6) << "\" y=\"" << num(py(yv) + 4) << "\" text-anchor=\"end\">"
       << format_real(std::round(yv * 1000.0) / 1000.0) << "</text>\n";
  }
  os << "<text x=\"" << num(left + pw / 2) << "\" y=\"" << num(height - 10) << "\" text-anchor=\"middle\">"
     << escape(x_label) << "</text>\n";
  os << "<text transform=\"translate(16," << num(top + ph / 2) << ") rotate(-90)\" text-anchor=\"middle\">"
     << escape(y_label) << "</text>\n";

  for (std::size_t si = 0; si < series.size(); ++si) {
    const auto& s = series[si];
    const char* color = kColors[si % (sizeof(kColors) / sizeof(kColors[0]))];
    std::string points;
    auto flush = [&] {
      if (!points.empty()) {
        os << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"1.5\" points=\"" << points
           << "\"/>\n";
      }
      points.clear();
    };
    for (std::size_t i = 0; i < std::min(s.x.size(), s.y.size()); ++i) {
      const bool inside = std::isfinite(s.x[i]) && std::isfinite(s.y[i]) && s.y[i] >= yr.lo && s.y[i] <= yr.hi;
      if (!inside) {
        flush();
        continue;
      }
      points += num(px(s.x[i])) + "," + num(py(s.y[i])) + " ";
      if (s.markers) {
        os << "<circle cx=\"" << num(px(s.x[i])) << "\" cy=\"" << num(py(s.y[i])) << "\" r=\"3\" fill=\"" << color
           << "\"/>\n";
      }
    }
    flush();
    os << "<text x=\"" << num(left + 10) << "\" y=\"" << num(top + 16 + 16 * static_cast<double>(si)) << "\" fill=\""
       << color << "\">" << escape(s.label) << "</text>\n";
  }
  os << "</svg>\n";
}

}  // namespace htldp

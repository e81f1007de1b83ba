#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace htldp {

struct SvgSeries {
  std::string label;
  std::vector<double> x;
  std::vector<double> y;
  bool markers = false;
};

/// Minimal line plot. Non-finite points break the polyline; axis ranges cover
/// the finite points unless fixed explicitly.
struct SvgPlot {
  std::string title;
  std::string x_label;
  std::string y_label;
  std::vector<SvgSeries> series;
  double width = 640.0;
  double height = 420.0;
  bool fixed_y = false;
  double y_min = 0.0;
  double y_max = 1.0;

  void write(std::ostream& os) const;
};

}  // namespace htldp

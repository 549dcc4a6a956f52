#pragma once

#include <string>
#include <vector>

#include "dualtap/core/font.hpp"
#include "dualtap/core/types.hpp"

namespace dualtap {

struct LineSeries {
  std::string label;
  std::vector<Real> x;
  std::vector<Real> y;
  Rgb color{0.2, 0.4, 0.8};
};

struct BarSeries {
  std::string label;
  std::vector<Real> values;  // one per category
  Rgb color{0.2, 0.4, 0.8};
};

/// Rasterize a line plot (axes, ticks, legend) into an RGB tensor.
Tensor render_line_plot(const std::string& title, const std::vector<LineSeries>& series,
                        int width = 720, int height = 440);

/// Grouped bar chart: categories along x, one bar per series per category.
Tensor render_bar_chart(const std::string& title, const std::vector<std::string>& categories,
                        const std::vector<BarSeries>& series, int width = 720, int height = 440);

}  // namespace dualtap

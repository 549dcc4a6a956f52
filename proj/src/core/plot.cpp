#include "dualtap/core/plot.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>

namespace dualtap {

namespace {

const Rgb kBg{1.0, 1.0, 1.0};
const Rgb kAxis{0.15, 0.15, 0.15};
const Rgb kGrid{0.88, 0.88, 0.88};

std::string fmt_num(Real v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4g", v);
  return buf;
}

void draw_line(Tensor& img, int x0, int y0, int x1, int y1, const Rgb& c) {
  int dx = std::abs(x1 - x0), dy = -std::abs(y1 - y0);
  int sx = x0 < x1 ? 1 : -1, sy = y0 < y1 ? 1 : -1;
  int err = dx + dy;
  while (true) {
    fill_rect(img, x0, y0, 1, 1, c);
    if (x0 == x1 && y0 == y1) break;
    int e2 = 2 * err;
    if (e2 >= dy) {
      err += dy;
      x0 += sx;
    }
    if (e2 <= dx) {
      err += dx;
      y0 += sy;
    }
  }
}

struct Frame {
  int left, top, right, bottom;
  Real xmin, xmax, ymin, ymax;
  int px(Real x) const {
    Real t = (x - xmin) / (xmax - xmin);
    return left + int(std::lround(t * (right - left)));
  }
  int py(Real y) const {
    Real t = (y - ymin) / (ymax - ymin);
    return bottom - int(std::lround(t * (bottom - top)));
  }
};

void draw_frame(Tensor& img, const Frame& f, const std::string& title) {
  draw_text(img, f.left, 6, title, kAxis);
  draw_line(img, f.left, f.top, f.left, f.bottom, kAxis);
  draw_line(img, f.left, f.bottom, f.right, f.bottom, kAxis);
  const int nticks = 5;
  for (int i = 0; i <= nticks; ++i) {
    Real ty = f.ymin + (f.ymax - f.ymin) * i / nticks;
    int y = f.py(ty);
    if (i > 0) draw_line(img, f.left + 1, y, f.right, y, kGrid);
    draw_line(img, f.left - 3, y, f.left, y, kAxis);
    draw_text(img, 4, y - 3, fmt_num(ty), kAxis);
    Real tx = f.xmin + (f.xmax - f.xmin) * i / nticks;
    int x = f.px(tx);
    draw_line(img, x, f.bottom, x, f.bottom + 3, kAxis);
    draw_text(img, x - 8, f.bottom + 6, fmt_num(tx), kAxis);
  }
}

void pad_range(Real& lo, Real& hi) {
  if (!(hi > lo)) {
    Real c = lo;
    lo = c - 1;
    hi = c + 1;
  } else {
    Real m = 0.05 * (hi - lo);
    lo -= m;
    hi += m;
  }
}

}  // namespace

Tensor render_line_plot(const std::string& title, const std::vector<LineSeries>& series,
                        int width, int height) {
  Tensor img = Tensor::constant(3, height, width, 1.0);
  Frame f{58, 22, width - 14, height - 24, 0, 1, 0, 1};

  Real xmin = std::numeric_limits<Real>::max(), xmax = std::numeric_limits<Real>::lowest();
  Real ymin = xmin, ymax = xmax;
  for (const auto& s : series)
    for (std::size_t i = 0; i < s.x.size(); ++i) {
      xmin = std::min(xmin, s.x[i]);
      xmax = std::max(xmax, s.x[i]);
      ymin = std::min(ymin, s.y[i]);
      ymax = std::max(ymax, s.y[i]);
    }
  if (series.empty() || !(xmin <= xmax)) {
    xmin = ymin = 0;
    xmax = ymax = 1;
  }
  pad_range(xmin, xmax);
  pad_range(ymin, ymax);
  f.xmin = xmin;
  f.xmax = xmax;
  f.ymin = ymin;
  f.ymax = ymax;

  draw_frame(img, f, title);

  int legend_y = f.top + 4;
  for (const auto& s : series) {
    for (std::size_t i = 0; i + 1 < s.x.size(); ++i)
      draw_line(img, f.px(s.x[i]), f.py(s.y[i]), f.px(s.x[i + 1]), f.py(s.y[i + 1]), s.color);
    for (std::size_t i = 0; i < s.x.size(); ++i)
      fill_rect(img, f.px(s.x[i]) - 1, f.py(s.y[i]) - 1, 3, 3, s.color);
    if (!s.label.empty()) {
      int lx = f.right - 16 - text_width(s.label);
      fill_rect(img, lx - 14, legend_y + 2, 10, 3, s.color);
      draw_text(img, lx, legend_y, s.label, kAxis);
      legend_y += 11;
    }
  }
  return img;
}

Tensor render_bar_chart(const std::string& title, const std::vector<std::string>& categories,
                        const std::vector<BarSeries>& series, int width, int height) {
  Tensor img = Tensor::constant(3, height, width, 1.0);
  Frame f{58, 22, width - 14, height - 60, 0, 1, 0, 1};

  Real ymin = 0, ymax = std::numeric_limits<Real>::lowest();
  for (const auto& s : series)
    for (Real v : s.values) {
      ymax = std::max(ymax, v);
      ymin = std::min(ymin, v);
    }
  if (!(ymax > ymin)) ymax = ymin + 1;
  Real m = 0.08 * (ymax - ymin);
  f.ymin = std::min(Real(0), ymin);
  f.ymax = ymax + m;
  f.xmin = 0;
  f.xmax = Real(categories.size());

  draw_text(img, f.left, 6, title, kAxis);
  draw_line(img, f.left, f.top, f.left, f.bottom, kAxis);
  draw_line(img, f.left, f.bottom, f.right, f.bottom, kAxis);
  for (int i = 0; i <= 5; ++i) {
    Real ty = f.ymin + (f.ymax - f.ymin) * i / 5;
    int y = f.py(ty);
    if (i > 0) draw_line(img, f.left + 1, y, f.right, y, kGrid);
    draw_text(img, 4, y - 3, fmt_num(ty), kAxis);
  }

  const int ncat = int(categories.size());
  const int nser = std::max<std::size_t>(1, series.size());
  for (int c = 0; c < ncat; ++c) {
    int x0 = f.px(Real(c) + 0.12), x1 = f.px(Real(c) + 0.88);
    int bw = std::max(2, (x1 - x0) / int(nser));
    for (std::size_t s = 0; s < series.size(); ++s) {
      if (c >= int(series[s].values.size())) continue;
      Real v = series[s].values[std::size_t(c)];
      int top = f.py(v), base = f.py(std::max(f.ymin, Real(0)));
      fill_rect(img, x0 + int(s) * bw, std::min(top, base), bw - 1,
                std::max(1, std::abs(base - top)), series[s].color);
    }
    // category label, vertical space is tight so keep it short
    std::string name = categories[std::size_t(c)];
    if (text_width(name) > (x1 - x0) + 24) name = name.substr(0, std::size_t((x1 - x0 + 24) / 6));
    draw_text(img, (x0 + x1) / 2 - text_width(name) / 2, f.bottom + 8, name, kAxis);
  }
  int legend_y = f.bottom + 22;
  int lx = f.left;
  for (const auto& s : series) {
    fill_rect(img, lx, legend_y + 2, 10, 3, s.color);
    draw_text(img, lx + 14, legend_y, s.label, kAxis);
    lx += 14 + text_width(s.label) + 18;
  }
  return img;
}

}  // namespace dualtap

// Copyright 2026 The qecsplit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include "qecsplit_cli/plot.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "qecsplit/errors.hpp"

namespace qecsplit::cli {

namespace {

constexpr double kWidth = 640.0;
constexpr double kHeight = 480.0;
constexpr double kLeft = 80.0;
constexpr double kRight = 170.0;
constexpr double kTop = 30.0;
constexpr double kBottom = 60.0;
constexpr const char* kColors[] = {"#1f77b4", "#d62728", "#2ca02c", "#ff7f0e", "#9467bd",
                                   "#8c564b", "#e377c2", "#7f7f7f", "#bcbd22", "#17becf"};

std::string fmt(const char* pattern, double a) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), pattern, a);
  return buf;
}

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&':
        out += "&amp;";
        break;
      case '<':
        out += "&lt;";
        break;
      case '>':
        out += "&gt;";
        break;
      case '"':
        out += "&quot;";
        break;
      default:
        out += c;
    }
  }
  return out;
}

struct Axis {
  int lo = 0;
  int hi = 1;
  double pixel_lo = 0.0;
  double pixel_hi = 0.0;
  double map(double v) const {
    return pixel_lo + (std::log10(v) - lo) / (hi - lo) * (pixel_hi - pixel_lo);
  }
};

}  // namespace

std::string render_svg(const std::vector<PlotSeries>& series) {
  double xmin = INFINITY, xmax = 0.0, ymin = INFINITY, ymax = 0.0;
  std::size_t plotted = 0;
  for (const auto& s : series) {
    for (const auto& [x, y] : s.points) {
      if (!(x > 0.0 && y > 0.0 && std::isfinite(x) && std::isfinite(y))) continue;
      xmin = std::min(xmin, x);
      xmax = std::max(xmax, x);
      ymin = std::min(ymin, y);
      ymax = std::max(ymax, y);
    }
    if (!s.points.empty()) ++plotted;
  }
  if (plotted == 0 || !(xmax > 0.0)) throw InvalidParameter("nothing to plot");

  Axis ax{static_cast<int>(std::floor(std::log10(xmin))), static_cast<int>(std::ceil(std::log10(xmax))), kLeft,
          kWidth - kRight};
  Axis ay{static_cast<int>(std::floor(std::log10(ymin))), static_cast<int>(std::ceil(std::log10(ymax))),
          kHeight - kBottom, kTop};
  if (ax.hi == ax.lo) ++ax.hi;
  if (ay.hi == ay.lo) ++ay.hi;

  std::string out;
  out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"640\" height=\"480\" viewBox=\"0 0 640 480\">\n";
  out += "<rect width=\"640\" height=\"480\" fill=\"white\"/>\n";
  const std::string x0 = fmt("%.2f", kLeft), x1 = fmt("%.2f", kWidth - kRight);
  const std::string y0 = fmt("%.2f", kHeight - kBottom), y1 = fmt("%.2f", kTop);
  out += "<g stroke=\"#cccccc\" stroke-width=\"1\">\n";
  for (int e = ax.lo; e <= ax.hi; ++e) {
    const std::string x = fmt("%.2f", ax.map(std::pow(10.0, e)));
    out += "<line x1=\"" + x + "\" y1=\"" + y0 + "\" x2=\"" + x + "\" y2=\"" + y1 + "\"/>\n";
  }
  for (int e = ay.lo; e <= ay.hi; ++e) {
    const std::string y = fmt("%.2f", ay.map(std::pow(10.0, e)));
    out += "<line x1=\"" + x0 + "\" y1=\"" + y + "\" x2=\"" + x1 + "\" y2=\"" + y + "\"/>\n";
  }
  out += "</g>\n";
  out += "<rect x=\"" + x0 + "\" y=\"" + y1 + "\" width=\"" + fmt("%.2f", kWidth - kRight - kLeft) +
         "\" height=\"" + fmt("%.2f", kHeight - kBottom - kTop) + "\" fill=\"none\" stroke=\"black\"/>\n";
  out += "<g font-family=\"sans-serif\" font-size=\"12\">\n";
  for (int e = ax.lo; e <= ax.hi; ++e) {
    out += "<text x=\"" + fmt("%.2f", ax.map(std::pow(10.0, e))) + "\" y=\"" + fmt("%.2f", kHeight - kBottom + 18) +
           "\" text-anchor=\"middle\">1e" + std::to_string(e) + "</text>\n";
  }
  for (int e = ay.lo; e <= ay.hi; ++e) {
    out += "<text x=\"" + fmt("%.2f", kLeft - 6) + "\" y=\"" + fmt("%.2f", ay.map(std::pow(10.0, e)) + 4) +
           "\" text-anchor=\"end\">1e" + std::to_string(e) + "</text>\n";
  }
  out += "<text x=\"" + fmt("%.2f", (kLeft + kWidth - kRight) / 2) + "\" y=\"" + fmt("%.2f", kHeight - 15) +
         "\" text-anchor=\"middle\">p</text>\n";
  out += "<text x=\"20\" y=\"" + fmt("%.2f", (kTop + kHeight - kBottom) / 2) +
         "\" text-anchor=\"middle\" transform=\"rotate(-90 20 " + fmt("%.2f", (kTop + kHeight - kBottom) / 2) +
         ")\">logical rate</text>\n";
  out += "</g>\n";

  std::size_t k = 0;
  for (const auto& s : series) {
    std::vector<std::pair<double, double>> pts;
    for (const auto& [x, y] : s.points) {
      if (x > 0.0 && y > 0.0 && std::isfinite(x) && std::isfinite(y)) pts.emplace_back(x, y);
    }
    if (pts.empty()) continue;
    std::sort(pts.begin(), pts.end());
    const std::string color = kColors[k % (sizeof(kColors) / sizeof(kColors[0]))];
    std::string coords;
    for (const auto& [x, y] : pts) {
      if (!coords.empty()) coords += ' ';
      coords += fmt("%.2f", ax.map(x)) + "," + fmt("%.2f", ay.map(y));
    }
    out += "<polyline fill=\"none\" stroke=\"" + color + "\" stroke-width=\"1.5\" points=\"" + coords + "\"/>\n";
    for (const auto& [x, y] : pts) {
      out += "<circle cx=\"" + fmt("%.2f", ax.map(x)) + "\" cy=\"" + fmt("%.2f", ay.map(y)) + "\" r=\"3\" fill=\"" +
             color + "\"/>\n";
    }
    const double ly = kTop + 10 + 18.0 * static_cast<double>(k);
    out += "<line x1=\"" + fmt("%.2f", kWidth - kRight + 10) + "\" y1=\"" + fmt("%.2f", ly) + "\" x2=\"" +
           fmt("%.2f", kWidth - kRight + 30) + "\" y2=\"" + fmt("%.2f", ly) + "\" stroke=\"" + color +
           "\" stroke-width=\"2\"/>\n";
    out += "<text x=\"" + fmt("%.2f", kWidth - kRight + 35) + "\" y=\"" + fmt("%.2f", ly + 4) +
           "\" font-family=\"sans-serif\" font-size=\"11\">" + escape(s.label) + "</text>\n";
    ++k;
  }
  out += "</svg>\n";
  return out;
}

}  // namespace qecsplit::cli

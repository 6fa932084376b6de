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


#ifndef QECSPLIT_CLI_PLOT_HPP_
#define QECSPLIT_CLI_PLOT_HPP_

#include <string>
#include <utility>
#include <vector>

namespace qecsplit::cli {

struct PlotSeries {
  std::string label;
  // (p, rate) pairs with both positive.
  std::vector<std::pair<double, double>> points;
};

// Log-log plot of logical rate against p, one polyline per series. Output
// depends only on the input. Throws InvalidParameter for no plottable series.
std::string render_svg(const std::vector<PlotSeries>& series);

}  // namespace qecsplit::cli

#endif  // QECSPLIT_CLI_PLOT_HPP_

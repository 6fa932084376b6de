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


#include "qecsplit/diagnostics.hpp"

#include <algorithm>
#include <cmath>

#include "qecsplit/errors.hpp"

namespace qecsplit {

double gelman_rubin(const std::vector<std::vector<double>>& chains) {
  if (chains.size() < 2) throw InvalidParameter("Gelman-Rubin needs at least 2 chains");
  std::size_t n = chains[0].size();
  for (const auto& c : chains) n = std::min(n, c.size());
  if (n < 2) throw InvalidParameter("Gelman-Rubin needs at least 2 samples per chain");
  const double m = static_cast<double>(chains.size());
  const double nn = static_cast<double>(n);

  std::vector<double> means;
  double w = 0.0;
  for (const auto& c : chains) {
    double mean = 0.0;
    for (std::size_t i = 0; i < n; ++i) mean += c[i];
    mean /= nn;
    double ss = 0.0;
    for (std::size_t i = 0; i < n; ++i) ss += (c[i] - mean) * (c[i] - mean);
    w += ss / (nn - 1.0);
    means.push_back(mean);
  }
  w /= m;
  if (!(w > 0.0)) throw NumericalError("Gelman-Rubin undefined: zero within-chain variance");
  double grand = 0.0;
  for (double x : means) grand += x;
  grand /= m;
  double b = 0.0;
  for (double x : means) b += (x - grand) * (x - grand);
  b *= nn / (m - 1.0);
  const double v = (nn - 1.0) / nn * w + b / nn;
  return std::sqrt(v / w);
}

JackknifeResult jackknife(std::size_t groups, const std::function<double(std::size_t skip)>& estimator) {
  JackknifeResult r;
  r.estimate = estimator(groups);
  if (groups < 2) return r;
  std::vector<double> loo(groups);
  double mean = 0.0;
  for (std::size_t g = 0; g < groups; ++g) {
    loo[g] = estimator(g);
    mean += loo[g];
  }
  mean /= static_cast<double>(groups);
  double ss = 0.0;
  for (double x : loo) ss += (x - mean) * (x - mean);
  const double k = static_cast<double>(groups);
  r.standard_error = std::sqrt((k - 1.0) / k * ss);
  return r;
}

std::size_t histogram_mode(const Histogram& h) {
  std::size_t best = 0;
  std::uint64_t count = 0;
  for (const auto& [key, c] : h) {
    if (c > count) {
      best = key;
      count = c;
    }
  }
  return best;
}

}  // namespace qecsplit

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


#include "qecsplit/bennett.hpp"

#include <algorithm>
#include <cmath>

#include "qecsplit/errors.hpp"

namespace qecsplit {

namespace {

// g(exp(t)) = 1 / (1 + e^t).
double g_of_log(double t) {
  if (t > 0.0) {
    const double e = std::exp(-t);
    return e / (1.0 + e);
  }
  return 1.0 / (1.0 + std::exp(t));
}

}  // namespace

double bennett_g(double x) { return 1.0 / (1.0 + x); }

double bennett_side_mean(std::span<const double> log_ratios, double log_c) {
  double sum = 0.0;
  for (double l : log_ratios) sum += g_of_log(log_c - l);
  return sum / static_cast<double>(log_ratios.size());
}

BennettResult bennett_solve(std::span<const double> side_i, std::span<const double> side_next) {
  if (side_i.empty() || side_next.empty()) throw InvalidParameter("Bennett solve needs samples on both sides");
  // Decreasing in log C: the left mean falls, the right mean rises.
  auto f = [&](double log_c) {
    double rhs = 0.0;
    for (double l : side_next) rhs += g_of_log(l - log_c);
    return bennett_side_mean(side_i, log_c) - rhs / static_cast<double>(side_next.size());
  };
  double lo = -1.0;
  double hi = 1.0;
  while (f(lo) <= 0.0 && lo > -700.0) lo = std::max(-700.0, lo * 2.0);
  while (f(hi) >= 0.0 && hi < 700.0) hi = std::min(700.0, hi * 2.0);
  const double flo = f(lo);
  const double fhi = f(hi);
  if (flo == 0.0) return {std::exp(lo), lo, 0};
  if (fhi == 0.0) return {std::exp(hi), hi, 0};
  if (!(flo > 0.0 && fhi < 0.0)) throw NumericalError("Bennett equation has no root in log C within +-700");
  BennettResult r;
  // Relative 1e-10 on C is absolute 1e-10 on log C.
  while (hi - lo > 1e-11 && r.iterations < 200) {
    const double mid = 0.5 * (lo + hi);
    if (f(mid) > 0.0) {
      lo = mid;
    } else {
      hi = mid;
    }
    ++r.iterations;
  }
  r.log_ratio = 0.5 * (lo + hi);
  r.ratio = std::exp(r.log_ratio);
  return r;
}

}  // namespace qecsplit

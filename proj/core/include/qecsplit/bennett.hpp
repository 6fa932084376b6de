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


#ifndef QECSPLIT_BENNETT_HPP_
#define QECSPLIT_BENNETT_HPP_

#include <span>

namespace qecsplit {

// g(x) = 1 / (1 + x); satisfies g(x) = g(1/x) / x.
double bennett_g(double x);

// Mean over `log_ratios` of g(exp(log_c - l)), computed without overflow.
double bennett_side_mean(std::span<const double> log_ratios, double log_c);

struct BennettResult {
  double ratio = 0.0;
  double log_ratio = 0.0;
  int iterations = 0;
};

// Solves for C in
//   mean_i g(C pi_i/pi_{i+1}) = mean_{i+1} g(pi_{i+1}/(C pi_i))
// where both inputs hold l = log(pi_{i+1}(E)/pi_i(E)) evaluated on samples
// from the side-i and side-(i+1) chains. Bisection on log C to relative
// 1e-10; the bracket expands up to +-700. Throws InvalidParameter for empty
// inputs and NumericalError when no root is bracketed.
BennettResult bennett_solve(std::span<const double> side_i, std::span<const double> side_next);

}  // namespace qecsplit

#endif  // QECSPLIT_BENNETT_HPP_

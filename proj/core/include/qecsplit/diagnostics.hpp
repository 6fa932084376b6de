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


#ifndef QECSPLIT_DIAGNOSTICS_HPP_
#define QECSPLIT_DIAGNOSTICS_HPP_

#include <cstdint>
#include <functional>
#include <map>
#include <vector>

namespace qecsplit {

// Potential scale reduction factor sqrt(V / W) with
//   W = mean within-chain variance, B = n * variance of chain means,
//   V = (n - 1) / n * W + B / n.
// Chains longer than the shortest are truncated to it. Throws
// InvalidParameter for fewer than 2 chains or 2 samples and NumericalError
// when W = 0.
double gelman_rubin(const std::vector<std::vector<double>>& chains);

struct JackknifeResult {
  double estimate = 0.0;
  double standard_error = 0.0;
};

// Delete-one jackknife over `groups` units: estimator(skip) evaluates the
// statistic without unit `skip` (skip == groups means keep everything).
JackknifeResult jackknife(std::size_t groups, const std::function<double(std::size_t skip)>& estimator);

using Histogram = std::map<std::size_t, std::uint64_t>;

// Most frequent key; the smallest one on ties. 0 for an empty histogram.
std::size_t histogram_mode(const Histogram& h);

}  // namespace qecsplit

#endif  // QECSPLIT_DIAGNOSTICS_HPP_

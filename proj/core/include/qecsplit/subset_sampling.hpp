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


#ifndef QECSPLIT_SUBSET_SAMPLING_HPP_
#define QECSPLIT_SUBSET_SAMPLING_HPP_

#include <cstdint>
#include <vector>

#include "qecsplit/malignancy.hpp"
#include "qecsplit/noise.hpp"

namespace qecsplit {

// log( C(G,k) p^k (1-p)^(G-k) ), via lgamma.
double log_binomial_weight(std::uint64_t gates, std::uint64_t k, double p);

struct SubsetOptions {
  // Highest stratum included.
  std::size_t max_weight = 4;
  std::uint64_t shots_per_weight = 100000;
  std::uint64_t seed = 1;
  std::size_t threads = 0;
};

struct SubsetStratum {
  std::size_t weight = 0;
  double prefactor = 0.0;
  std::uint64_t shots = 0;
  std::uint64_t failures = 0;
  // Estimated P(fail | weight failing gates).
  double fail_fraction = 0.0;
  // No failures observed: the stratum contributes 0, which may be an
  // underestimate.
  bool zero_failures = false;
};

struct SubsetResult {
  double rate = 0.0;
  double standard_error = 0.0;
  std::vector<SubsetStratum> strata;
};

// Σ_k C(G,k) p^k (1-p)^(G-k) P̂(fail | k) for k = 0..max_weight. Needs equal
// failure probabilities on every gate (InvalidParameter otherwise).
SubsetResult subset_sampling_estimate(const NoiseModel& noise, const EventClassifier& classifier,
                                      const SubsetOptions& options);

}  // namespace qecsplit

#endif  // QECSPLIT_SUBSET_SAMPLING_HPP_

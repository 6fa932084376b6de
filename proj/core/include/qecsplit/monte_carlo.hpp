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


#ifndef QECSPLIT_MONTE_CARLO_HPP_
#define QECSPLIT_MONTE_CARLO_HPP_

#include <array>
#include <cstdint>
#include <random>
#include <vector>

#include "qecsplit/event.hpp"
#include "qecsplit/malignancy.hpp"
#include "qecsplit/noise.hpp"
#include "qecsplit/rng.hpp"

namespace qecsplit {

// Draws fault configurations from a noise model.
class FaultSampler {
 public:
  explicit FaultSampler(const NoiseModel& noise);

  // Every gate fails independently with its pr_g; the fault is drawn from
  // Pr_g. Uniform models skip ahead geometrically between failing gates.
  Event sample(Rng& rng) const;
  // Exactly k distinct failing gates chosen uniformly, faults from Pr_g.
  Event sample_weight(std::size_t k, Rng& rng) const;
  FaultLabel draw_fault(GateKind kind, Rng& rng) const;

 private:
  const NoiseModel* noise_;
  bool uniform_;
  std::array<std::vector<double>, kNumGateKinds> cumulative_;
};

struct McOptions {
  std::uint64_t stop_failures = 1000;
  std::uint64_t max_shots = 1'000'000'000ull;
  std::uint64_t seed = 1;
  std::size_t threads = 0;
  // Keep up to this many distinct failing events, in shot order.
  std::size_t harvest = 0;
  std::uint64_t block_shots = 4096;
};

struct McResult {
  // Negative binomial estimate (k - 1) / (n - 1).
  double rate = 0.0;
  double standard_error = 0.0;
  std::uint64_t shots = 0;
  std::uint64_t failures = 0;
  // Non-empty events handed to the classifier up to the stopping shot.
  std::uint64_t evaluations = 0;
  std::vector<Event> harvested;
};

// Unbiased rate from stopping at the k-th failure on shot n.
double negative_binomial_rate(std::uint64_t failures, std::uint64_t shots);

// Direct Monte Carlo until stop_failures failures. Results depend only on
// (noise, classifier, seed, block_shots), not on the thread count. Throws
// InvalidParameter for p = 0 or stop_failures < 2, PartialResultError when
// max_shots runs out first.
McResult mc_estimate(const NoiseModel& noise, const EventClassifier& classifier, const McOptions& options);

}  // namespace qecsplit

#endif  // QECSPLIT_MONTE_CARLO_HPP_

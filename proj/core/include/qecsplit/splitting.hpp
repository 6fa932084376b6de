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


#ifndef QECSPLIT_SPLITTING_HPP_
#define QECSPLIT_SPLITTING_HPP_

#include <cstdint>
#include <vector>

#include "qecsplit/circuit.hpp"
#include "qecsplit/diagnostics.hpp"
#include "qecsplit/fault_effects.hpp"
#include "qecsplit/malignancy.hpp"
#include "qecsplit/monte_carlo.hpp"
#include "qecsplit/noise.hpp"
#include "qecsplit/schedule.hpp"

namespace qecsplit {

enum class WeightPolicy : std::uint8_t {
  // One decoder for the whole run, weighted at sqrt(p_start * p_target); the
  // malignant set is then the same at every point and one cache serves all.
  kFrozen,
  // Decoder reweighted at every point, with its own cache.
  kPerPoint,
};

struct SplitOptions {
  std::size_t chains = 20;
  std::uint64_t min_jumps = 10;
  std::size_t min_chains_ok = 18;
  // Also required before a point is considered done: this many samples in
  // every chain and a Gelman-Rubin R̂ at or below rhat_target.
  std::uint64_t min_samples = 100;
  double rhat_target = 1.1;
  // Multiples of the gate count G.
  double burn_in = 10.0;
  double sample_interval = 1.0;
  // Cap on post-burn-in proposals per chain per point; hitting it marks the
  // step partial.
  double max_proposals = 5000.0;
  std::uint64_t seed = 1;
  std::size_t threads = 0;
  // Setup Monte Carlo at the first point (harvest is raised to `chains`).
  McOptions setup{.stop_failures = 1000};
  WeightPolicy weights = WeightPolicy::kFrozen;
  // Draw fresh samples at a point for each ratio it takes part in instead of
  // reusing one set for both neighbours.
  bool expire_events = false;
  OracleOptions oracle;
};

struct SplitStep {
  double p_from = 0.0;
  double p_to = 0.0;
  double ratio = 0.0;
  double ratio_se = 0.0;
  // Telescoped estimate at p_to and its propagated standard error.
  double rate = 0.0;
  double rate_se = 0.0;
  std::uint64_t jumps_min = 0;
  std::uint64_t jumps_max = 0;
  std::uint64_t proposals = 0;
  std::uint64_t decoder_calls = 0;
  std::uint64_t cache_hits = 0;
  std::uint64_t cache_misses = 0;
  std::size_t samples_from = 0;
  std::size_t samples_to = 0;
  // Largest R̂ of the two sides; NaN when undefined.
  double rhat = 0.0;
  double seconds = 0.0;
  bool converged = true;
};

struct SplitLevel {
  double p = 0.0;
  // Weights of sampled events.
  Histogram weights;
  std::uint64_t jumps_min = 0;
  std::uint64_t jumps_max = 0;
  bool converged = true;
};

struct SplitReport {
  Observable observable = Observable::kZ;
  std::vector<double> points;
  McResult setup;
  double setup_seconds = 0.0;
  std::uint64_t setup_decoder_calls = 0;
  std::vector<SplitStep> steps;
  std::vector<SplitLevel> levels;
  // Estimate at the last point.
  double rate = 0.0;
  double rate_se = 0.0;
  bool partial = false;
  // Totals after setup.
  std::uint64_t proposals = 0;
  std::uint64_t decoder_calls = 0;
  std::uint64_t cache_hits = 0;
  std::uint64_t cache_misses = 0;

  // Estimate at each schedule point (setup MC, then telescoped).
  std::vector<double> rates() const;
};

// Setup Monte Carlo at points[0], then Metropolis chains restricted to the
// malignant set at every point and Bennett ratios between neighbours,
// telescoped down the schedule. Deterministic for fixed (seed, chains)
// regardless of thread count. Throws SetupError when the setup run finds no
// malignant event.
SplitReport run_splitting(const Circuit& circuit, const FaultEffectTable& effects, const NoiseModel& noise,
                          Observable obs, const Schedule& schedule, const SplitOptions& options);

}  // namespace qecsplit

#endif  // QECSPLIT_SPLITTING_HPP_

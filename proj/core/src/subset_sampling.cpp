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


#include "qecsplit/subset_sampling.hpp"

#include <algorithm>
#include <cmath>

#include "qecsplit/errors.hpp"
#include "qecsplit/monte_carlo.hpp"
#include "qecsplit/parallel.hpp"
#include "qecsplit/rng.hpp"

namespace qecsplit {

double log_binomial_weight(std::uint64_t gates, std::uint64_t k, double p) {
  if (k > gates) throw InvalidParameter("subset weight exceeds gate count");
  if (!(p >= 0.0 && p < 1.0)) throw InvalidParameter("p must lie in [0, 1)");
  const double n = static_cast<double>(gates);
  const double kk = static_cast<double>(k);
  const double log_choose = std::lgamma(n + 1.0) - std::lgamma(kk + 1.0) - std::lgamma(n - kk + 1.0);
  const double log_p = k == 0 ? 0.0 : kk * std::log(p);
  return log_choose + log_p + (n - kk) * std::log1p(-p);
}

SubsetResult subset_sampling_estimate(const NoiseModel& noise, const EventClassifier& classifier,
                                      const SubsetOptions& options) {
  if (options.max_weight < 1) throw InvalidParameter("subset sampling needs max_weight >= 1");
  if (options.shots_per_weight == 0) throw InvalidParameter("shots_per_weight must be positive");
  const std::size_t gates = noise.num_gates();
  const double pr = gates == 0 ? 0.0 : noise.failure_probability(0);
  for (double q : noise.failure_probabilities()) {
    if (q != pr) throw InvalidParameter("subset sampling needs the same failure probability on every gate");
  }
  const FaultSampler sampler(noise);
  const std::size_t threads = options.threads == 0 ? default_thread_count() : options.threads;
  constexpr std::uint64_t kBlock = 4096;

  SubsetResult result;
  double variance = 0.0;
  for (std::size_t k = 0; k <= std::min(options.max_weight, gates); ++k) {
    SubsetStratum st;
    st.weight = k;
    st.prefactor = std::exp(log_binomial_weight(gates, k, pr));
    if (k == 0) {
      st.shots = 1;
      st.failures = classifier.is_malignant(Event()) ? 1 : 0;
    } else {
      const std::uint64_t blocks = (options.shots_per_weight + kBlock - 1) / kBlock;
      std::vector<std::uint64_t> fails(blocks, 0);
      parallel_for(blocks, threads, [&](std::size_t b) {
        Rng rng = make_rng(options.seed, StreamTag::kSubset, (static_cast<std::uint64_t>(k) << 32) | b);
        const std::uint64_t n = std::min(kBlock, options.shots_per_weight - b * kBlock);
        for (std::uint64_t s = 0; s < n; ++s) {
          if (classifier.is_malignant(sampler.sample_weight(k, rng))) ++fails[b];
        }
      });
      st.shots = options.shots_per_weight;
      for (std::uint64_t f : fails) st.failures += f;
    }
    st.fail_fraction = static_cast<double>(st.failures) / static_cast<double>(st.shots);
    st.zero_failures = st.failures == 0;
    result.rate += st.prefactor * st.fail_fraction;
    if (k > 0) {
      variance += st.prefactor * st.prefactor * st.fail_fraction * (1.0 - st.fail_fraction) /
                  static_cast<double>(st.shots);
    }
    result.strata.push_back(st);
  }
  result.standard_error = std::sqrt(variance);
  return result;
}

}  // namespace qecsplit
